"""
Ranked permutation diagrams.

Matrix convention: row 1 is the top row, column ``c`` holds value ``c``, and
the dot of position ``i`` sits in cell ``(i, pi_i)``. Every dot shades its own
cell and all cells due south and due east of it; the remaining white cells
are the diagram squares. The rank of a square is the number of dots strictly
northwest of it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .perm import Permutation

__all__ = [
    "DiagramError", "RankedSquare", "Diagram", "build_diagram",
    "stat_a_via_diagram", "permutation_from_diagram", "rank0_shape",
    "greedy_dots",
]


class DiagramError(ValueError):
    """A cell set that is not the diagram of any permutation."""


class RankedSquare(NamedTuple):
    row: int
    col: int
    rank: int


@dataclass(frozen=True)
class Diagram:
    n: int
    squares: tuple[RankedSquare, ...]
    by_row: dict[int, tuple[RankedSquare, ...]] = field(
        default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.by_row is None:
            rows: dict[int, list[RankedSquare]] = {}
            for sq in self.squares:
                rows.setdefault(sq.row, []).append(sq)
            object.__setattr__(
                self, "by_row", {r: tuple(v) for r, v in rows.items()})

    def cells(self) -> set[tuple[int, int]]:
        return {(s.row, s.col) for s in self.squares}

    def with_rank_at_most(self, k: int) -> set[tuple[int, int]]:
        return {(s.row, s.col) for s in self.squares if s.rank <= k}

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "squares": [{"row": s.row, "col": s.col, "rank": s.rank}
                        for s in self.squares],
        }


def _squares(pi) -> list[RankedSquare]:
    n = len(pi)
    pos = [0] * (n + 1)
    for i, v in enumerate(pi, 1):
        pos[v] = i
    seen = [False] * (n + 1)  # values already placed above the current row
    out = []
    for row in range(1, n + 1):
        v = pi[row - 1]
        rank = 0
        for col in range(1, v):
            if seen[col]:
                rank += 1
            elif pos[col] > row:
                out.append(RankedSquare(row, col, rank))
        seen[v] = True
    return out


def build_diagram(pi: Permutation) -> Diagram:
    """The ranked diagram of ``pi``; squares sorted by ``(row, col)``.

    >>> build_diagram(Permutation([1, 3, 2])).squares
    (RankedSquare(row=2, col=2, rank=1),)
    """
    return Diagram(len(pi), tuple(_squares(pi)))


def stat_a_via_diagram(d: Diagram, m: int) -> int:
    """Number of squares of rank at least ``m - 2``."""
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")
    return sum(1 for s in d.squares if s.rank >= m - 2)


def greedy_dots(n: int, white: Iterable[tuple[int, int]]) -> list[int]:
    """Row by row, the column of the leftmost shaded cell whose column is
    still free. Returns 1-based columns indexed by ``row - 1``."""
    white_rows: dict[int, set[int]] = {}
    for r, c in white:
        white_rows.setdefault(r, set()).add(c)
    used = [False] * (n + 1)
    cols = []
    for row in range(1, n + 1):
        wr = white_rows.get(row, ())
        for col in range(1, n + 1):
            if not used[col] and col not in wr:
                break
        else:
            raise DiagramError(f"row {row} has no admissible shaded cell")
        used[col] = True
        cols.append(col)
    return cols


def permutation_from_diagram(n: int, white: Iterable[tuple[int, int]]) -> Permutation:
    """Recover the permutation whose diagram cells are exactly ``white``."""
    white = {(int(r), int(c)) for r, c in white}
    for r, c in white:
        if not (1 <= r <= n and 1 <= c <= n):
            raise DiagramError(f"cell {(r, c)} outside the {n}x{n} array")
    pi = Permutation._trusted(greedy_dots(n, white))
    got = {(s.row, s.col) for s in _squares(pi)}
    if got != white:
        raise DiagramError("cell set is not the diagram of a permutation")
    return pi


def rank0_shape(pi: Permutation) -> tuple[int, ...]:
    """Row lengths of the rank-0 region, one entry per row."""
    lam = [0] * len(pi)
    for s in _squares(pi):
        if s.rank == 0:
            lam[s.row - 1] += 1
    return tuple(lam)
