"""Brute-force oracles, deliberately independent of the library code paths."""

import itertools


def all_perms(n):
    return [tuple(p) for p in itertools.permutations(range(1, n + 1))]


def order_type(word):
    return tuple(sorted(range(len(word)), key=lambda k: word[k]))


def brute_occurrences(pattern, host):
    target = order_type(pattern)
    return [tuple(i + 1 for i in idx)
            for idx in itertools.combinations(range(len(host)), len(pattern))
            if order_type([host[i] for i in idx]) == target]


def class_patterns(kind, m):
    tail = (m, m - 1) if kind == "A" else (m - 1, m)
    return [head + tail for head in itertools.permutations(range(1, m - 1))]


def brute_tail_pairs(pi, kind, m):
    out = set()
    for tau in class_patterns(kind, m):
        for occ in brute_occurrences(tau, pi):
            out.add(occ[-2:])
    return out


def shaded_array(pi):
    """Literal shading: each dot shades its cell and everything due south/east."""
    n = len(pi)
    shade = [[False] * (n + 1) for _ in range(n + 1)]
    for i, v in enumerate(pi, 1):
        for r in range(i, n + 1):
            shade[r][v] = True
        for c in range(v, n + 1):
            shade[i][c] = True
    return shade


def brute_diagram(pi):
    """{(row, col): rank} from the literal picture."""
    n = len(pi)
    shade = shaded_array(pi)
    dots = [(i, v) for i, v in enumerate(pi, 1)]
    return {(r, c): sum(1 for (dr, dc) in dots if dr < r and dc < c)
            for r in range(1, n + 1) for c in range(1, n + 1) if not shade[r][c]}


def brute_phi(pi, m):
    """Search S_n for the permutation matching the defining data of phi."""
    diag = brute_diagram(pi)
    low = {cell for cell, rk in diag.items() if rk <= m - 3}
    rows = sorted(cell[0] for cell, rk in diag.items() if rk >= m - 2)
    hits = []
    for sigma in all_perms(len(pi)):
        d = brute_diagram(sigma)
        if {cell for cell, rk in d.items() if rk <= m - 3} != low:
            continue
        if sorted(i for i, _ in brute_tail_pairs(sigma, "B", m)) == rows:
            hits.append(sigma)
    return hits


def all_words(n):
    for bits in itertools.product("UD", repeat=2 * n):
        h = 0
        for s in bits:
            h += 1 if s == "U" else -1
            if h < 0:
                break
        else:
            if h == 0:
                yield "".join(bits)


def brute_tunnels(word):
    """Horizontal segments between two lattice points of the path that stay
    strictly below it in between. The path is linear on each step, so checking
    the integer points suffices."""
    h = [0]
    for s in word:
        h.append(h[-1] + (1 if s == "U" else -1))
    out = []
    for a in range(len(h)):
        for b in range(a + 2, len(h)):
            if h[a] != h[b]:
                continue
            if all(h[x] > h[a] for x in range(a + 1, b)):
                out.append((a, b, h[a]))
    return out
