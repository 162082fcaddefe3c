# %% [markdown]
# # Tunnels and the a_3 = 1 permutations
#
# The boundary of the rank-0 region of a 132-avoider is a Dyck path. Each
# tunnel of height >= 1 and length 2r + 2 >= 4 marks one cell that can be
# added to the diagram as a rank-r square.

# %%
from permdiagram import boundary_path, build_diagram, parse_permutation, tunnels
from permdiagram.lab import prop9_forward, qualifying_tunnels

pi = parse_permutation("5 4 6 7 3 1 2")
d = boundary_path(pi)
print(d.steps)
for t in tunnels(d):
    print(t, "length", t.length)

# %%
for t in qualifying_tunnels(pi):
    sigma = prop9_forward(pi, t)
    extra = [s for s in build_diagram(sigma).squares if s.rank > 0]
    print(t, "->", sigma, extra)

# %% [markdown]
# Summed over all paths of semilength n these qualifying tunnels number
# C(2n-1, n-3), the same as the valleys above level zero.

# %%
from permdiagram import enumerate_paths, path_features
from permdiagram.lab import binom

for n in range(3, 10):
    q = v = 0
    for path in enumerate_paths(n):
        f = path_features(path)
        q += f.qualifying_tunnels
        v += f.valleys_above_zero
    print(n, q, v, binom(2 * n - 1, n - 3))
