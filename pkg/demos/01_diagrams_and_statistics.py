# %% [markdown]
# # Ranked diagrams and the tail-pair statistics
#
# Every dot of the permutation matrix shades its own cell and everything due
# south and due east. The white cells left over are the diagram; each white
# cell is labelled with the number of dots strictly northwest of it.

# %%
from permdiagram import PatternClass, build_diagram, occurrences, parse_permutation, stat, tail_pairs

pi = parse_permutation("3 8 5 10 2 4 1 9 6 7")
d = build_diagram(pi)


def show(pi, d):
    ranks = {(s.row, s.col): s.rank for s in d.squares}
    for row in range(1, pi.n + 1):
        cells = []
        for col in range(1, pi.n + 1):
            if pi.at(row) == col:
                cells.append(" *")
            elif (row, col) in ranks:
                cells.append(f"{ranks[row, col]:2d}")
            else:
                cells.append(" .")
        print(" ".join(cells))


show(pi, d)

# %% [markdown]
# a_m counts the squares of rank at least m-2. For m = 5 these are the single
# rank-3 square in row 4 and the two rank-5 squares in row 8.

# %%
for m in range(2, 8):
    print(m, stat(pi, PatternClass.A(m)), stat(pi, PatternClass.B(m)))

# %% [markdown]
# The same numbers from the pattern side: a_4 and b_4 of 7142635 count the
# distinct final pairs of occurrences of 1243/2143 and of 1234/2134.

# %%
rho = parse_permutation("7 1 4 2 6 3 5")
for tau in PatternClass.A(4).patterns() + PatternClass.B(4).patterns():
    print(tau, occurrences(tau, rho))
print(sorted(tail_pairs(rho, PatternClass.A(4))), sorted(tail_pairs(rho, PatternClass.B(4))))
