"""
Straightening a Pluecker monomial
=================================

Rewrites a product of Pluecker variables in the tableau basis, showing
each exchange (P) or column-substitution (S) step as it fires.
"""

from sympbw.straighten import straighten
from sympbw.tableaux import tableau_pretty

n = 2
monomial = ((1, 3), (2, 4))  # X_{1,2bar} X_{2,1bar}

for ring in ("classical", "degenerate"):
    print(f"ring = {ring}")
    result = straighten(n, monomial, ring, trace=lambda s: print("  ", s))
    for tab, coeff in sorted(result.items()):
        sign = "+" if coeff > 0 else "-"
        print(f"  {sign}{abs(coeff)} *")
        for line in tableau_pretty(n, tab).splitlines():
            print("     ", line)
    print()

# a linear example: X_{1,1bar} is itself not a tableau variable
print("X_{1,1bar} rewrites to:", straighten(2, ((1, 4),), "classical"))
