"""
Dyck paths as U/D words, their tunnels, and the boundary path of the rank-0
region of a 132-avoiding permutation.

A tunnel belongs to the up-step starting at its left endpoint and to the
down-step ending at its right endpoint, so there is exactly one tunnel per
up-step.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .diagram import rank0_shape
from .perm import Permutation, PatternClass, stat

__all__ = [
    "DyckPathError", "DyckPath", "Tunnel", "PathFeatures", "MAX_SEMILENGTH",
    "parse_path", "tunnels", "path_features", "boundary_path",
    "enumerate_paths", "up_step_row", "down_step_column",
]

MAX_SEMILENGTH = 14


class DyckPathError(ValueError):
    pass


@dataclass(frozen=True)
class DyckPath:
    steps: str

    @property
    def n(self) -> int:
        return len(self.steps) // 2

    def heights(self) -> list[int]:
        """Height at every lattice point ``x = 0..2n``."""
        h = [0]
        for s in self.steps:
            h.append(h[-1] + (1 if s == "U" else -1))
        return h

    def __str__(self) -> str:
        return self.steps


class Tunnel(NamedTuple):
    left_x: int
    right_x: int
    height: int

    @property
    def length(self) -> int:
        return self.right_x - self.left_x


class PathFeatures(NamedTuple):
    returns: int
    high_peaks: int
    valleys_above_zero: int
    qualifying_tunnels: int

    def to_json(self) -> dict:
        return self._asdict()


def parse_path(word: str) -> DyckPath:
    word = word.strip().upper()
    h = 0
    for x, s in enumerate(word):
        if s == "U":
            h += 1
        elif s == "D":
            h -= 1
            if h < 0:
                raise DyckPathError(f"path dips below the axis at step {x + 1}")
        else:
            raise DyckPathError(f"illegal step {s!r} at position {x + 1}")
    if h != 0:
        raise DyckPathError("unbalanced word: path does not end on the axis")
    return DyckPath(word)


def _match(steps: str) -> list[int]:
    # mate[x] = index of the down-step closing the up-step at index x
    mate = [-1] * len(steps)
    stack = []
    for x, s in enumerate(steps):
        if s == "U":
            stack.append(x)
        else:
            mate[stack.pop()] = x
    return mate


def tunnels(d: DyckPath) -> list[Tunnel]:
    """One tunnel per up-step, sorted by left endpoint."""
    steps = d.steps
    mate = _match(steps)
    out = []
    h = 0
    for x, s in enumerate(steps):
        if s == "U":
            out.append(Tunnel(x, mate[x] + 1, h))
            h += 1
        else:
            h -= 1
    return out


def path_features(d: DyckPath) -> PathFeatures:
    steps = d.steps
    h = 0
    returns = high = valleys = 0
    prev = ""
    for s in steps:
        if s == "U":
            if prev == "D" and h > 0:
                valleys += 1
            h += 1
        else:
            if prev == "U" and h > 1:
                high += 1
            h -= 1
            if h == 0:
                returns += 1
        prev = s
    qualifying = sum(1 for t in tunnels(d) if t.height >= 1 and t.length >= 4)
    return PathFeatures(returns, high, valleys, qualifying)


def up_step_row(d: DyckPath, x: int) -> int:
    """Array row holding the up-step that starts at ``x`` (boundary-path
    encoding: the ``k``-th up-step lies in row ``n + 1 - k``)."""
    if d.steps[x] != "U":
        raise DyckPathError(f"step at x={x} is not an up-step")
    k = d.steps.count("U", 0, x + 1)
    return d.n + 1 - k


def down_step_column(d: DyckPath, x_end: int) -> int:
    """Array column holding the down-step that ends at ``x_end``."""
    if d.steps[x_end - 1] != "D":
        raise DyckPathError(f"step ending at x={x_end} is not a down-step")
    return d.steps.count("D", 0, x_end)


def boundary_path(pi: Permutation) -> DyckPath:
    """The path along the boundary of the rank-0 region, from the lower-left
    to the upper-right corner of the array.

    >>> boundary_path(Permutation([5, 4, 6, 7, 3, 1, 2])).steps
    'UUDDUDUUUDUDDD'
    """
    if stat(pi, PatternClass.A(3)):
        raise ValueError(f"{pi} contains 132")
    n = len(pi)
    lam = (n,) + rank0_shape(pi)
    parts = []
    for i in range(n, 0, -1):
        parts.append("U" + "D" * (lam[i - 1] - lam[i]))
    return DyckPath("".join(parts))


def enumerate_paths(n: int) -> Iterator[DyckPath]:
    """All Dyck paths of semilength ``n`` in lexicographic order, U < D."""
    if n < 0:
        raise ValueError("semilength must be non-negative")
    if n > MAX_SEMILENGTH:
        raise DyckPathError(f"semilength {n} exceeds the limit {MAX_SEMILENGTH}")
    buf: list[str] = []

    def walk(ups: int, downs: int) -> Iterator[DyckPath]:
        if downs == n:
            yield DyckPath("".join(buf))
            return
        if ups < n:
            buf.append("U")
            yield from walk(ups + 1, downs)
            buf.pop()
        if downs < ups:
            buf.append("D")
            yield from walk(ups, downs + 1)
            buf.pop()

    yield from walk(0, 0)
