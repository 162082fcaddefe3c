# %% [markdown]
# # The involution, step by step
#
# phi keeps the squares of rank <= m-3 and turns the rows of the higher squares
# into tail multiplicities e. The free rows r take the free columns c (listed
# in decreasing order): row r_i gets the (e_i + 1)-th remaining column.

# %%
from permdiagram import PatternClass, decompose, phi, reconstruct, stat
from permdiagram.perm import parse_permutation

pi = parse_permutation("3 8 5 10 2 4 1 9 6 7")
m = 5
sigma, tr = phi(pi, m, trace=True)
print("pi    ", pi)
print("sigma ", sigma)
print("r =", tr.r, " c =", tr.c, " e =", tr.e, " c' =", tr.c_prime)

# %% [markdown]
# Decomposing pi itself and rebuilding it goes through the same arrangement,
# this time with the B_5 tail rows of pi (a single pair ending at (9, 10)).

# %%
back, tr = reconstruct(decompose(pi, m), trace=True)
print(back, tr.e, tr.c_prime)

# %% [markdown]
# The statistics trade places, and applying phi twice is the identity.

# %%
print(stat(pi, PatternClass.A(m)), stat(sigma, PatternClass.B(m)))
print(stat(pi, PatternClass.B(m)), stat(sigma, PatternClass.A(m)))
print(phi(sigma, m) == pi)

# %% [markdown]
# For m = 3 on 132-avoiders this is the classical map: left-to-right minima
# stay, everything else is written in decreasing order.

# %%
from permdiagram import simion_schmidt

tau = parse_permutation("4 3 5 2 6 1")
print(phi(tau, 3), simion_schmidt(tau))
