"""
Permutations in one-line notation, pattern occurrences, and the tail-pair
statistics ``a_m`` / ``b_m``.

Positions and values are 1-based everywhere in the public API.

>>> pi = parse_permutation("7 1 4 2 6 3 5")
>>> occurrences(Permutation([1, 2, 4, 3]), pi)
[(2, 3, 5, 7), (2, 4, 5, 6), (2, 4, 5, 7)]
>>> stat(pi, PatternClass.A(4)), stat(pi, PatternClass.B(4))
(2, 1)
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

__all__ = [
    "PermutationError", "Permutation", "PatternClass", "TailPair",
    "make_permutation", "parse_permutation", "identity", "reversal",
    "occurrences", "tail_pairs", "stat", "extreme_positions",
    "inversions", "contains_any",
]


class PermutationError(ValueError):
    """Raised for words that are not permutations of 1..n."""


class Permutation(tuple):
    """A permutation of ``1..n`` stored as its one-line word.

    Indexing is the ordinary 0-based tuple indexing; use :meth:`at` for the
    1-based position convention.
    """

    __slots__ = ()

    def __new__(cls, values: Iterable[int] = ()):
        word = tuple(values)
        if not word:
            raise PermutationError("empty permutation")
        n = len(word)
        seen = [False] * (n + 1)
        for v in word:
            if isinstance(v, bool) or not isinstance(v, int):
                raise PermutationError(f"non-integer entry {v!r}")
            if v < 1 or v > n:
                raise PermutationError(f"value {v} outside 1..{n}")
            if seen[v]:
                raise PermutationError(f"duplicate value {v}")
            seen[v] = True
        return super().__new__(cls, word)

    @classmethod
    def _trusted(cls, word) -> Permutation:
        # skips validation; callers guarantee a valid word
        return tuple.__new__(cls, word)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def word(self) -> tuple[int, ...]:
        return tuple(self)

    def at(self, i: int) -> int:
        """Value at 1-based position ``i``."""
        return self[i - 1]

    def inverse(self) -> Permutation:
        inv = [0] * len(self)
        for pos, v in enumerate(self, 1):
            inv[v - 1] = pos
        return Permutation._trusted(inv)

    def reverse_complement(self) -> Permutation:
        n1 = len(self) + 1
        return Permutation._trusted(n1 - v for v in reversed(self))

    def __str__(self) -> str:
        return " ".join(map(str, self))

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"


def make_permutation(values: Iterable[int]) -> Permutation:
    return Permutation(values)


_SEP = re.compile(r"[\s,]+")


def parse_permutation(text: str) -> Permutation:
    """Parse ``"3 8 5 10"`` or ``"3,8,5,10"`` into a :class:`Permutation`."""
    tokens = [t for t in _SEP.split(text.strip()) if t]
    try:
        values = [int(t) for t in tokens]
    except ValueError as exc:
        raise PermutationError(f"cannot parse permutation {text!r}") from exc
    return Permutation(values)


def identity(n: int) -> Permutation:
    return Permutation._trusted(range(1, n + 1))


def reversal(n: int) -> Permutation:
    return Permutation._trusted(range(n, 0, -1))


class TailPair(NamedTuple):
    """The last two positions ``(i, j)``, ``i < j``, of a pattern occurrence."""
    i: int
    j: int


@dataclass(frozen=True)
class PatternClass:
    """``A_m`` (patterns ending ``m, m-1``) or ``B_m`` (ending ``m-1, m``)."""
    kind: str
    m: int

    def __post_init__(self):
        if self.kind not in ("A", "B"):
            raise ValueError(f"kind must be 'A' or 'B', got {self.kind!r}")
        if self.m < 2:
            raise ValueError(f"m must be at least 2, got {self.m}")

    @classmethod
    def A(cls, m: int) -> PatternClass:
        return cls("A", m)

    @classmethod
    def B(cls, m: int) -> PatternClass:
        return cls("B", m)

    def patterns(self) -> list[Permutation]:
        """All ``(m-2)!`` members, in lexicographic order."""
        m = self.m
        tail = (m, m - 1) if self.kind == "A" else (m - 1, m)
        return [Permutation._trusted(head + tail)
                for head in itertools.permutations(range(1, m - 1))]


def _prefix_ok(pattern, host, idx: list[int], cand: int) -> bool:
    # the new letter must compare with every chosen letter as the pattern does
    t = len(idx)
    p_new = pattern[t]
    h_new = host[cand]
    for s, pos in enumerate(idx):
        if (pattern[s] < p_new) != (host[pos] < h_new):
            return False
    return True


def occurrences(pattern: Permutation, host: Permutation) -> list[tuple[int, ...]]:
    """All occurrences of ``pattern`` in ``host`` as 1-based position tuples,
    in lexicographic order. Empty when the pattern is longer than the host."""
    m, n = len(pattern), len(host)
    out: list[tuple[int, ...]] = []
    if m > n:
        return out
    idx: list[int] = []

    def extend(start: int) -> None:
        t = len(idx)
        if t == m:
            out.append(tuple(p + 1 for p in idx))
            return
        # leave room for the remaining m - t - 1 letters
        for cand in range(start, n - (m - t) + 1):
            if _prefix_ok(pattern, host, idx, cand):
                idx.append(cand)
                extend(cand + 1)
                idx.pop()

    extend(0)
    return out


def contains_any(host: Permutation, patterns: Iterable[Permutation]) -> bool:
    return any(occurrences(p, host) for p in patterns)


def _iter_tail_pairs(pi, kind: str, m: int) -> Iterator[tuple[int, int]]:
    need = m - 2
    n = len(pi)
    seen = [False] * (n + 2)
    for i in range(n):
        vi = pi[i]
        # less[v] = number of letters before position i+1 smaller than v
        less = [0] * (n + 2)
        acc = 0
        for v in range(1, n + 1):
            less[v] = acc
            acc += seen[v]
        if kind == "A":
            for j in range(i + 1, n):
                vj = pi[j]
                if vi > vj and less[vj] >= need:
                    yield i + 1, j + 1
        elif less[vi] >= need:
            for j in range(i + 1, n):
                if vi < pi[j]:
                    yield i + 1, j + 1
        seen[vi] = True


def tail_pairs(pi: Permutation, cls: PatternClass) -> set[TailPair]:
    """Pairs ending an occurrence of some pattern of ``cls``.

    Uses the closed characterization: for ``A_m`` the inversions ``(i, j)``
    whose smaller letter ``pi_j`` has at least ``m-2`` smaller letters before
    position ``i``; for ``B_m`` the non-inversions ``(i, j)`` whose letter
    ``pi_i`` exceeds at least ``m-2`` letters on its left.
    """
    return {TailPair(i, j) for i, j in _iter_tail_pairs(pi, cls.kind, cls.m)}


def stat(pi: Permutation, cls: PatternClass) -> int:
    """``a_m(pi)`` for class ``A_m``, ``b_m(pi)`` for class ``B_m``."""
    return sum(1 for _ in _iter_tail_pairs(pi, cls.kind, cls.m))


def inversions(pi: Permutation) -> int:
    n = len(pi)
    return sum(1 for i in range(n) for j in range(i + 1, n) if pi[i] > pi[j])


def extreme_positions(pi: Permutation, kind: str) -> list[int]:
    """Positions of left-to-right minima (``kind="ltr-minima"``) or of
    right-to-left maxima (``kind="rl-maxima"``), increasing."""
    if kind in ("ltr-minima", "left-to-right-minima"):
        out, best = [], None
        for pos, v in enumerate(pi, 1):
            if best is None or v < best:
                best = v
                out.append(pos)
        return out
    if kind in ("rl-maxima", "right-to-left-maxima"):
        out, best = [], 0
        for pos in range(len(pi), 0, -1):
            if pi[pos - 1] > best:
                best = pi[pos - 1]
                out.append(pos)
        return out[::-1]
    raise ValueError(f"unknown extreme kind {kind!r}")
