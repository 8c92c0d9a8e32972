"""
Symplectic PBW-semistandard tableaux
====================================

Enumerates the tableaux for a weight, shows the filling conditions at
work, and prints a few of them.
"""

from sympbw.tableaux import (
    enumerate_tableaux,
    is_symplectic_column,
    is_symplectic_pbw_semistandard,
    tableau_pretty,
    tableau_weight,
)

n = 2
m = (1, 1)

tabs = enumerate_tableaux(n, m)
print(f"{len(tabs)} tableaux for n={n}, m={m}\n")
for tab in tabs[:6]:
    print(tableau_pretty(n, tab))
    print(f"  weight {tableau_weight(n, tab)}\n")
print("...\n")

# single columns: the entry rules in isolation
print("column (2,1) valid:", is_symplectic_column(2, (2, 1)))   # 1 below row 1
print("column (3,2) valid:", is_symplectic_column(2, (3, 2)))
print("column (1,4) valid:", is_symplectic_column(2, (1, 4)))   # 1 and 1bar together

# a filling that is PBW-valid but fails the semistandard comparison
bad = ((1, 2), (3,))
print("\ntableau", bad, "semistandard:", is_symplectic_pbw_semistandard(2, bad))

# the fundamental weight omega_3 at n=3: fourteen single columns
cols = enumerate_tableaux(3, (0, 0, 1))
print(f"\nn=3, omega_3: {len(cols)} single-column tableaux")
print(" ".join("[" + " ".join(map(str, tab[0])) + "]" for tab in cols))
