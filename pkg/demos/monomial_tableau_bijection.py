"""
From PBW monomials to tableaux and back
=======================================

The lattice points of the FFLV polytope are multi-exponents p of PBW
monomials f^p. Applying the operators one at a time, largest first,
builds a tableau; the inverse map reads the monomial back off.
"""

from sympbw.correspondence import (
    monomial_to_tableau,
    monomial_weight,
    order_monomial,
    tableau_to_monomial,
)
from sympbw.fflv import lattice_points
from sympbw.liealg import Root
from sympbw.tableaux import tableau_pretty

n, m = 2, (1, 1)

# a worked example: f_{1,2} f_{1,1bar} f_{2,2}
p = {Root(1, 2, False): 1, Root(1, 1, True): 1, Root(2, 2, False): 1}
print("application order (largest operator first):")
for alpha in order_monomial(p):
    print(" ", alpha)
tab = monomial_to_tableau(n, m, p)
print("\nresulting tableau:")
print(tableau_pretty(n, tab))
print("weight:", monomial_weight(n, m, p))

back_m, back_p = tableau_to_monomial(n, tab)
print("round trip gives the same monomial:", back_p == p and back_m == m)

# the assignment is a weight-preserving bijection on the whole polytope
points = lattice_points(n, m)
tabs = {monomial_to_tableau(n, m, q) for q in points}
print(f"\n{len(points)} lattice points -> {len(tabs)} distinct tableaux")
assert all(tableau_to_monomial(n, t)[0] == m for t in tabs)
