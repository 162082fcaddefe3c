# %% [markdown]
# # Distribution tables
#
# a_m and b_m have the same distribution over S_n for every m. The k = 0
# column is the Wilf equivalence of A_m and B_m; the open counting problem
# is the rest of the table.

# %%
from permdiagram.lab import distribution_table

n = 7
table = distribution_table(n, range(2, n + 1))
for m in range(2, n + 1):
    a = table.as_map(n, m, "a")
    print(m, a == table.as_map(n, m, "b"), dict(sorted(a.items())))

# %%
print("\n".join(table.to_csv().splitlines()[:8]))

# %% [markdown]
# Permutations with exactly one 123 or exactly one 132.

# %%
from permdiagram import parse_permutation
from permdiagram.lab import count_exact_occurrences, formula

for n in range(3, 8):
    print(n, count_exact_occurrences(n, parse_permutation("1 2 3"), 1), formula("noonan", n),
          count_exact_occurrences(n, parse_permutation("1 3 2"), 1), formula("bona", n))
