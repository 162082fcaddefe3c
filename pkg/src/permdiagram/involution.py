"""
Recovering a permutation from its low-rank diagram squares plus the rows of
its ``B_m`` tail pairs, and the involution ``phi`` built on top of that.

``phi(pi, m)`` keeps every square of rank at most ``m-3`` and hands the row
indices of the squares of rank at least ``m-2`` to the reconstruction as if
they were the first components of ``B_m`` tail pairs. It swaps ``a_m`` and
``b_m``:

>>> from .perm import parse_permutation
>>> print(phi(parse_permutation("3 8 5 10 2 4 1 9 6 7"), 5))
3 8 5 9 2 4 1 6 10 7
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .diagram import DiagramError, _squares, greedy_dots
from .perm import Permutation, PatternClass, _iter_tail_pairs, extreme_positions, stat

__all__ = [
    "ReconstructionError", "PartialData", "Trace", "decompose", "arrange_dots",
    "reconstruct", "phi", "phi_avoider", "simion_schmidt",
]


class ReconstructionError(ValueError):
    """Partial data that no permutation produces."""


@dataclass(frozen=True)
class PartialData:
    """Low-rank squares and the multiset of ``B_m`` tail rows (sorted)."""
    n: int
    m: int
    low_squares: frozenset[tuple[int, int]]
    tail_rows: tuple[int, ...]


@dataclass(frozen=True)
class Trace:
    """Working vectors of the dot arrangement: dotless rows ``r``
    (increasing), dotless columns ``c`` (decreasing), per-row tail
    multiplicities ``e``, and the chosen columns ``c_prime``."""
    r: tuple[int, ...]
    c: tuple[int, ...]
    e: tuple[int, ...]
    c_prime: tuple[int, ...]


def decompose(pi: Permutation, m: int) -> PartialData:
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")
    low = frozenset((s.row, s.col) for s in _squares(pi) if s.rank <= m - 3)
    rows = tuple(sorted(i for i, _ in _iter_tail_pairs(pi, "B", m)))
    return PartialData(len(pi), m, low, rows)


def arrange_dots(r: Sequence[int], c: Sequence[int], e: Sequence[int]) -> list[int]:
    """For each ``i`` in turn take ``c[e_i]`` (0-based) out of the remaining
    columns and assign it to row ``r_i``.

    >>> arrange_dots((4, 8, 9, 10), (10, 9, 7, 6), (1, 2, 0, 0))
    [9, 6, 10, 7]
    """
    if not (len(r) == len(c) == len(e)):
        raise ReconstructionError("r, c and e must have equal length")
    pool = list(c)
    out = []
    for ei in e:
        if not 0 <= ei < len(pool):
            raise ReconstructionError(
                f"tail multiplicity {ei} exceeds the {len(pool)} free columns")
        out.append(pool.pop(ei))
    return out


def _fill(n: int, m: int, low, tail_rows) -> tuple[list[int], Trace]:
    try:
        cols = greedy_dots(n, low)
    except DiagramError as exc:
        raise ReconstructionError(str(exc)) from exc
    # drop dots with more than m-3 dots strictly northwest
    limit = m - 3
    word = [0] * n
    for row in range(n):
        col = cols[row]
        nw = 0
        for k in range(row):
            if word[k] and word[k] < col:
                nw += 1
        if nw <= limit:
            word[row] = col
    used = set(word)
    r = tuple(i + 1 for i in range(n) if not word[i])
    c = tuple(v for v in range(n, 0, -1) if v not in used)
    mult: dict[int, int] = {}
    for row in tail_rows:
        mult[row] = mult.get(row, 0) + 1
    if set(mult) - set(r):
        raise ReconstructionError("tail rows must be rows without a kept dot")
    e = tuple(mult.get(row, 0) for row in r)
    c_prime = arrange_dots(r, c, e)
    for row, col in zip(r, c_prime):
        word[row - 1] = col
    return word, Trace(r, c, e, tuple(c_prime))


def reconstruct(data: PartialData, *, trace: bool = False):
    """Rebuild the permutation described by ``data``.

    Fails with :class:`ReconstructionError` unless decomposing the result
    gives back ``data``. With ``trace=True`` returns ``(pi, Trace)``.
    """
    word, tr = _fill(data.n, data.m, data.low_squares, data.tail_rows)
    pi = Permutation._trusted(word)
    if decompose(pi, data.m) != data:
        raise ReconstructionError("partial data is not realized by any permutation")
    return (pi, tr) if trace else pi


def phi(pi: Permutation, m: int, *, trace: bool = False):
    """The involution exchanging ``a_m`` and ``b_m``."""
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")
    low = []
    high_rows = []
    for s in _squares(pi):
        if s.rank <= m - 3:
            low.append((s.row, s.col))
        else:
            high_rows.append(s.row)
    data = PartialData(len(pi), m, frozenset(low), tuple(sorted(high_rows)))
    return reconstruct(data, trace=trace)


def phi_avoider(pi: Permutation, m: int) -> Permutation:
    """``phi`` restricted to ``A_m``-avoiders: letters exceeding at most
    ``m-3`` earlier letters stay put, the rest fill their positions in
    decreasing order."""
    if stat(pi, PatternClass.A(m)):
        raise ValueError("permutation contains a pattern of A_m")
    n = len(pi)
    keep = [sum(1 for v in pi[:i] if v < pi[i]) <= m - 3 for i in range(n)]
    rest = sorted((pi[i] for i in range(n) if not keep[i]), reverse=True)
    it = iter(rest)
    return Permutation._trusted(pi[i] if keep[i] else next(it) for i in range(n))


def simion_schmidt(pi: Permutation) -> Permutation:
    """The classical map from 132-avoiders to 123-avoiders: left-to-right
    minima stay, the other values fill the free positions decreasingly."""
    if stat(pi, PatternClass.A(3)):
        raise ValueError(f"{pi} contains 132")
    minima = extreme_positions(pi, "ltr-minima")
    fixed = {p: pi[p - 1] for p in minima}
    rest = iter(sorted(set(pi) - set(fixed.values()), reverse=True))
    return Permutation._trusted(
        fixed[p] if p in fixed else next(rest) for p in range(1, len(pi) + 1))
