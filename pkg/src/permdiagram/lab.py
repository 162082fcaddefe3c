"""
Exhaustive checks over S_n and over Dyck paths.

S_n is walked in lexicographic order. Work can be split into contiguous
rank ranges, one per worker process; every kernel returns a
:class:`collections.Counter` and partial results merge by addition, so the
output never depends on the number of workers.
"""

from __future__ import annotations

import csv
import io
import json
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Callable, Iterator, NamedTuple

from .diagram import _squares, build_diagram, permutation_from_diagram, stat_a_via_diagram
from .dyck import Tunnel, boundary_path, down_step_column, enumerate_paths, path_features, tunnels, up_step_row
from .involution import decompose, phi, phi_avoider, reconstruct, simion_schmidt
from .perm import (Permutation, PatternClass, TailPair, extreme_positions,
                   occurrences, stat, tail_pairs)

__all__ = [
    "EnumerationLimitError", "MAX_N", "MAX_N_OCCURRENCES", "CountRow", "CountTable",
    "binom", "formula", "FORMULAS", "unrank", "next_permutation",
    "iter_permutations", "distribution", "distribution_table",
    "count_exact_occurrences", "qualifying_tunnels", "prop9_forward",
    "thomas_pairs", "thomas_map", "fixed_point_report", "CheckResult",
    "SUITES", "run_suite",
]

MAX_N = 9
MAX_N_OCCURRENCES = 8


class EnumerationLimitError(ValueError):
    pass


def _guard(n: int, limit: int = MAX_N) -> None:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > limit:
        raise EnumerationLimitError(f"n={n} exceeds the enumeration limit {limit}")


# -- closed forms -----------------------------------------------------------

def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero when ``b < 0`` or ``b > a``."""
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num}/{den} is not an integer")
    return q


FORMULAS: dict[str, Callable[[int], int]] = {
    "catalan": lambda n: _exact_div(binom(2 * n, n), n + 1),
    "prop9": lambda n: binom(2 * n - 1, n - 3),
    "noonan": lambda n: _exact_div(3 * binom(2 * n, n - 3), n),
    "bona": lambda n: binom(2 * n - 3, n - 3),
    "returns_total": lambda n: _exact_div(3 * binom(2 * n + 1, n - 1), 2 * n + 1),
    "high_peaks_total": lambda n: binom(2 * n - 1, n - 2),
    "tunnels_total": lambda n: n * _exact_div(binom(2 * n, n), n + 1),
}


def formula(name: str, n: int) -> int:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    try:
        return FORMULAS[name](n)
    except KeyError:
        raise ValueError(f"unknown formula {name!r}") from None


# -- enumeration of S_n ----------------------------------------------------

def unrank(n: int, rank: int) -> list[int]:
    """The ``rank``-th permutation of ``1..n`` in lexicographic order."""
    pool = list(range(1, n + 1))
    out = []
    for k in range(n, 0, -1):
        f = math.factorial(k - 1)
        q, rank = divmod(rank, f)
        out.append(pool.pop(q))
    return out


def next_permutation(w: list[int]) -> bool:
    """Advance ``w`` in place to its lexicographic successor; False at the end."""
    i = len(w) - 2
    while i >= 0 and w[i] > w[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(w) - 1
    while w[j] < w[i]:
        j -= 1
    w[i], w[j] = w[j], w[i]
    w[i + 1:] = reversed(w[i + 1:])
    return True


def iter_permutations(n: int, start: int = 0, stop: int | None = None) -> Iterator[Permutation]:
    total = math.factorial(n)
    stop = total if stop is None else min(stop, total)
    if start >= stop:
        return
    w = unrank(n, start)
    for _ in range(stop - start):
        yield Permutation._trusted(w)
        next_permutation(w)


def _run(kernel, n: int, jobs: int = 1, *args) -> Counter:
    total = math.factorial(n)
    jobs = max(1, min(jobs, total))
    if jobs == 1:
        return kernel(n, 0, total, *args)
    bounds = [total * k // jobs for k in range(jobs + 1)]
    out = Counter()
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        futures = [ex.submit(kernel, n, bounds[k], bounds[k + 1], *args)
                   for k in range(jobs)]
        for f in futures:
            out.update(f.result())
    return out


# -- distributions ---------------------------------------------------------

@dataclass(frozen=True, order=True)
class CountRow:
    n: int
    m: int
    stat: str
    k: int
    count: int


@dataclass
class CountTable:
    rows: list[CountRow]

    def __post_init__(self):
        self.rows = sorted(self.rows)

    def as_map(self, n: int, m: int, stat_kind: str) -> dict[int, int]:
        return {r.k: r.count for r in self.rows
                if (r.n, r.m, r.stat) == (n, m, stat_kind)}

    def totals(self) -> dict[tuple[int, int, str], int]:
        tot: Counter = Counter()
        for r in self.rows:
            tot[r.n, r.m, r.stat] += r.count
        return dict(tot)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "m", "stat", "k", "count"])
        for r in self.rows:
            w.writerow([r.n, r.m, r.stat, r.k, r.count])
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps([asdict(r) for r in self.rows]) + "\n"


def _stat_profile(pi) -> tuple[list[int], list[int]]:
    # thresholds: for an A-pair (i,j) the number of letters before i below pi_j,
    # for a B-pair the number of letters before i below pi_i
    n = len(pi)
    a_hist = [0] * n
    b_hist = [0] * n
    seen = [False] * (n + 1)
    less = [0] * (n + 2)
    for i in range(n):
        acc = 0
        for v in range(1, n + 1):
            less[v] = acc
            acc += seen[v]
        vi = pi[i]
        lb = less[vi]
        for j in range(i + 1, n):
            vj = pi[j]
            if vj < vi:
                a_hist[less[vj]] += 1
            else:
                b_hist[lb] += 1
        seen[vi] = True
    return a_hist, b_hist


def _suffix(hist: list[int]) -> list[int]:
    out = hist[:]
    for t in range(len(out) - 2, -1, -1):
        out[t] += out[t + 1]
    return out


def _k_distribution(n, start, stop, ms, kinds) -> Counter:
    out = Counter()
    for pi in iter_permutations(n, start, stop):
        a_hist, b_hist = _stat_profile(pi)
        sa, sb = _suffix(a_hist), _suffix(b_hist)
        for m in ms:
            t = m - 2
            if "a" in kinds:
                out[m, "a", sa[t] if t < n else 0] += 1
            if "b" in kinds:
                out[m, "b", sb[t] if t < n else 0] += 1
    return out


def distribution_table(n: int, ms, kinds=("a", "b"), jobs: int = 1) -> CountTable:
    """Distributions of ``a_m``/``b_m`` over S_n for several ``m`` in one pass."""
    _guard(n)
    ms = tuple(ms)
    if any(m < 2 for m in ms):
        raise ValueError("m must be at least 2")
    kinds = tuple(kinds)
    counts = _run(_k_distribution, n, jobs, ms, kinds)
    return CountTable([CountRow(n, m, s, k, c) for (m, s, k), c in counts.items()])


def distribution(n: int, m: int, stat_kind: str, jobs: int = 1) -> CountTable:
    if stat_kind not in ("a", "b"):
        raise ValueError(f"stat_kind must be 'a' or 'b', got {stat_kind!r}")
    return distribution_table(n, (m,), (stat_kind,), jobs)


def _exact_occ(n, start, stop, pattern) -> Counter:
    return Counter(len(occurrences(pattern, pi)) for pi in iter_permutations(n, start, stop))


def count_exact_occurrences(n: int, pattern: Permutation, t: int, jobs: int = 1) -> int:
    _guard(n, MAX_N_OCCURRENCES)
    return _run(_exact_occ, n, jobs, pattern)[t]


# -- the tunnel insertion map ---------------------------------------------

def qualifying_tunnels(pi: Permutation) -> list[Tunnel]:
    """Tunnels of height >= 1 and length >= 4 in the boundary path of ``pi``."""
    return [t for t in tunnels(boundary_path(pi)) if t.height >= 1 and t.length >= 4]


def prop9_forward(pi: Permutation, t: Tunnel) -> Permutation:
    """Add the square matching tunnel ``t`` to the diagram of the 132-avoider
    ``pi`` and return the permutation with that diagram."""
    d = boundary_path(pi)
    if t not in tunnels(d):
        raise ValueError(f"{t} is not a tunnel of {d}")
    if t.height < 1 or t.length < 4:
        raise ValueError(f"{t} needs height >= 1 and length >= 4")
    i = up_step_row(d, t.left_x)
    j = down_step_column(d, t.right_x)
    cells = {(s.row, s.col) for s in _squares(pi)}
    cells.add((i, j))
    return permutation_from_diagram(len(pi), cells)


# -- the transposition map on 123-avoiders --------------------------------

def thomas_pairs(sigma: Permutation) -> list[TailPair]:
    """Consecutive right-to-left maxima ``(i, j)`` of a 123-avoider with some
    letter left of ``i`` smaller than ``sigma_j``."""
    if stat(sigma, PatternClass.B(3)):
        raise ValueError(f"{sigma} contains 123")
    maxima = extreme_positions(sigma, "rl-maxima")
    out = []
    for i, j in zip(maxima, maxima[1:]):
        vj = sigma[j - 1]
        if any(v < vj for v in sigma[:i - 1]):
            out.append(TailPair(i, j))
    return out


def thomas_map(sigma: Permutation, p: tuple[int, int]) -> Permutation:
    if tuple(p) not in thomas_pairs(sigma):
        raise ValueError(f"{tuple(p)} is not an admissible pair of {sigma}")
    i, j = p
    w = list(sigma)
    w[i - 1], w[j - 1] = w[j - 1], w[i - 1]
    return Permutation._trusted(w)


# -- fixed points ----------------------------------------------------------

def fixed_point_report(n: int, m: int) -> dict:
    """Fixed points of ``phi(., m)`` against ``S_n(A_m) & S_n(B_m)``."""
    _guard(n)
    fixed, both = set(), set()
    for pi in iter_permutations(n):
        if phi(pi, m) == pi:
            fixed.add(pi)
        if not stat(pi, PatternClass.A(m)) and not stat(pi, PatternClass.B(m)):
            both.add(pi)
    return {
        "n": n, "m": m, "fixed": len(fixed), "avoid_both": len(both),
        "equal": fixed == both, "extra_fixed": sorted(str(p) for p in fixed - both),
    }


# -- verification suites ---------------------------------------------------

class CheckResult(NamedTuple):
    suite: str
    n: int
    ok: bool
    detail: str

    def line(self) -> str:
        return f"{self.suite} n={self.n} {'PASS' if self.ok else 'FAIL'} {self.detail}".rstrip()


def _k_involution(n, start, stop) -> Counter:
    c = Counter()
    for pi in iter_permutations(n, start, stop):
        for m in range(2, n + 1):
            sigma = phi(pi, m)
            c["checked"] += 1
            if phi(sigma, m) != pi:
                c["not_involutive"] += 1
            if (stat(pi, PatternClass.A(m)) != stat(sigma, PatternClass.B(m))
                    or stat(pi, PatternClass.B(m)) != stat(sigma, PatternClass.A(m))):
                c["stat_mismatch"] += 1
    return c


def _k_prop1(n, start, stop) -> Counter:
    c = Counter()
    for pi in iter_permutations(n, start, stop):
        d = build_diagram(pi)
        max_rank = max((s.rank for s in d.squares), default=-1)
        for m in range(2, n + 1):
            a = stat(pi, PatternClass.A(m))
            c["checked"] += 1
            if stat_a_via_diagram(d, m) != a:
                c["count_mismatch"] += 1
            if (a == 0) != (max_rank <= m - 3):
                c["avoidance_mismatch"] += 1
    return c


def _k_roundtrip(n, start, stop) -> Counter:
    c = Counter()
    for pi in iter_permutations(n, start, stop):
        for m in range(2, n + 3):
            c["checked"] += 1
            if reconstruct(decompose(pi, m)) != pi:
                c["mismatch"] += 1
        c["checked"] += 1
        if permutation_from_diagram(n, build_diagram(pi).cells()) != pi:
            c["diagram_mismatch"] += 1
    return c


def _k_a3_one(n, start, stop) -> Counter:
    c = Counter()
    for pi in iter_permutations(n, start, stop):
        a_hist, b_hist = _stat_profile(pi)
        if n >= 2 and sum(a_hist[1:]) == 1:
            c["a3"] += 1
        if n >= 2 and sum(b_hist[1:]) == 1:
            c["b3"] += 1
    return c


def _k_132_avoiders(n, start, stop) -> Counter:
    c = Counter()
    for pi in iter_permutations(n, start, stop):
        if stat(pi, PatternClass.A(3)) == 0:
            c["avoid132"] += 1
            sigma = simion_schmidt(pi)
            if phi(pi, 3) != sigma:
                c["mismatch"] += 1
            if phi_avoider(pi, 3) != sigma:
                c["fast_path_mismatch"] += 1
            if stat(sigma, PatternClass.B(3)) != 0:
                c["image_contains_123"] += 1
        if stat(pi, PatternClass.B(3)) == 0:
            c["avoid123"] += 1
    return c


def _k_bona(n, start, stop) -> Counter:
    c = Counter()
    one32 = Permutation._trusted((1, 3, 2))
    for pi in iter_permutations(n, start, stop):
        once = len(occurrences(one32, pi)) == 1
        ranks = sorted(s.rank for s in _squares(pi) if s.rank > 0)
        c["once"] += once
        c["diagram"] += ranks == [1]
        c["disagree"] += once != (ranks == [1])
    return c


def _failures(c: Counter) -> dict:
    # every key besides "checked" counts a failed check
    return {k: v for k, v in c.items() if k != "checked" and v}


def _suite_counter(name, kernel, lo, n_max, jobs):
    out = []
    for n in range(lo, n_max + 1):
        c = _run(kernel, n, jobs)
        bad = _failures(c)
        detail = f"checked={c['checked']}" if "checked" in c else ""
        if bad:
            detail += " " + " ".join(f"{k}={v}" for k, v in sorted(bad.items()))
        out.append(CheckResult(name, n, not bad, detail.strip()))
    return out


def _suite_involution(n_max, jobs):
    return _suite_counter("involution", _k_involution, 2, n_max, jobs)


def _suite_prop1(n_max, jobs):
    return _suite_counter("prop1", _k_prop1, 1, n_max, jobs)


def _suite_roundtrip(n_max, jobs):
    return _suite_counter("prop2-roundtrip", _k_roundtrip, 1, n_max, jobs)


def _suite_equidistribution(n_max, jobs):
    out = []
    for n in range(2, n_max + 1):
        ms = range(2, n + 1)
        table = distribution_table(n, ms, jobs=jobs)
        bad = [m for m in ms if table.as_map(n, m, "a") != table.as_map(n, m, "b")]
        wilf = table.as_map(n, 3, "a").get(0, 0) if n >= 3 else None
        if wilf is not None and wilf != formula("catalan", n):
            bad.append("catalan")
        detail = f"m=2..{n}" + (f" mismatched={bad}" if bad else "")
        out.append(CheckResult("equidistribution", n, not bad, detail))
    return out


def _prop9_images(n):
    images = []
    for pi in iter_permutations(n):
        if stat(pi, PatternClass.A(3)) == 0:
            for t in qualifying_tunnels(pi):
                images.append(prop9_forward(pi, t))
    return images


def _thomas_images(n):
    images = []
    for sigma in iter_permutations(n):
        if stat(sigma, PatternClass.B(3)) == 0:
            for p in thomas_pairs(sigma):
                images.append((thomas_map(sigma, p), p))
    return images


def _suite_prop9(n_max, jobs):
    out = []
    for n in range(3, n_max + 1):
        count = _run(_k_a3_one, n, jobs)["a3"]
        expect = formula("prop9", n)
        ok = count == expect
        detail = f"a3=1 count={count} C(2n-1,n-3)={expect}"
        if n <= 7:
            images = _prop9_images(n)
            target = {pi for pi in iter_permutations(n) if stat(pi, PatternClass.A(3)) == 1}
            bij = len(images) == len(set(images)) and set(images) == target
            ok = ok and bij
            detail += f" bijection={'ok' if bij else 'broken'}"
        out.append(CheckResult("prop9", n, ok, detail))
    return out


def _suite_thomas(n_max, jobs):
    out = []
    for n in range(3, min(n_max, 7) + 1):
        pairs = _thomas_images(n)
        images = [p for p, _ in pairs]
        target = {pi for pi in iter_permutations(n) if stat(pi, PatternClass.B(3)) == 1}
        tails_ok = all(tail_pairs(pi, PatternClass.B(3)) == {p} for pi, p in pairs)
        ok = (len(images) == len(set(images)) and set(images) == target
              and len(images) == formula("prop9", n) and tails_ok)
        out.append(CheckResult("thomas", n, ok, f"pairs={len(images)} target={len(target)}"))
    return out


def _suite_dyck(n_max, jobs):
    out = []
    for n in range(1, n_max + 1):
        tot = Counter()
        for d in enumerate_paths(n):
            f = path_features(d)
            tot["paths"] += 1
            tot["tunnels"] += len(tunnels(d))
            tot["returns"] += f.returns
            tot["high_peaks"] += f.high_peaks
            tot["qualifying"] += f.qualifying_tunnels
            tot["valleys"] += f.valleys_above_zero
        expect = {
            "paths": formula("catalan", n),
            "tunnels": formula("tunnels_total", n),
            "returns": formula("returns_total", n),
            "high_peaks": formula("high_peaks_total", n),
            "qualifying": formula("prop9", n),
            "valleys": formula("prop9", n),
        }
        bad = sorted(k for k in expect if tot[k] != expect[k])
        detail = " ".join(f"{k}={tot[k]}" for k in expect)
        if bad:
            detail += f" mismatched={bad}"
        out.append(CheckResult("dyck-identities", n, not bad, detail))
    return out


def _suite_noonan(n_max, jobs):
    p = Permutation._trusted((1, 2, 3))
    out = []
    for n in range(1, min(n_max, MAX_N_OCCURRENCES) + 1):
        got, expect = count_exact_occurrences(n, p, 1, jobs), formula("noonan", n)
        out.append(CheckResult("noonan", n, got == expect, f"count={got} formula={expect}"))
    return out


def _suite_bona(n_max, jobs):
    out = []
    for n in range(1, min(n_max, MAX_N_OCCURRENCES) + 1):
        c = _run(_k_bona, n, jobs)
        expect = formula("bona", n)
        ok = c["once"] == expect == c["diagram"] and not c["disagree"]
        out.append(CheckResult("bona", n, ok,
                               f"count={c['once']} diagram={c['diagram']} formula={expect}"))
    return out


def _suite_simion_schmidt(n_max, jobs):
    out = []
    for n in range(1, n_max + 1):
        c = _run(_k_132_avoiders, n, jobs)
        cat = formula("catalan", n)
        ok = (c["avoid132"] == c["avoid123"] == cat and not c["mismatch"]
              and not c["fast_path_mismatch"] and not c["image_contains_123"])
        out.append(CheckResult("simion-schmidt", n, ok,
                               f"|S_n(132)|={c['avoid132']} |S_n(123)|={c['avoid123']} C_n={cat}"))
    return out


# fixed order for `all`
SUITES: dict[str, Callable[[int, int], list[CheckResult]]] = {
    "involution": _suite_involution,
    "equidistribution": _suite_equidistribution,
    "prop1": _suite_prop1,
    "prop2-roundtrip": _suite_roundtrip,
    "prop9": _suite_prop9,
    "dyck-identities": _suite_dyck,
    "noonan": _suite_noonan,
    "bona": _suite_bona,
    "thomas": _suite_thomas,
    "simion-schmidt": _suite_simion_schmidt,
}


def run_suite(name: str, n_max: int, jobs: int = 1) -> list[CheckResult]:
    if name not in SUITES:
        raise KeyError(name)
    if name == "dyck-identities":
        if n_max > 14:
            raise EnumerationLimitError(f"n={n_max} exceeds the Dyck path limit 14")
    else:
        _guard(n_max)
    return SUITES[name](n_max, jobs)
