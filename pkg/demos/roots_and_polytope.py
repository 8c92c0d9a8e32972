"""
Positive roots, Dyck paths and the FFLV polytope for sp(2n)
===========================================================

Walks the combinatorial layer: the triangle of positive roots, the
Dyck paths on it, and the polytope they cut out for a dominant weight.
"""

from sympbw.fflv import dyck_paths, fflv_inequalities, lattice_points
from sympbw.liealg import positive_roots, weyl_dimension
from sympbw.tableaux import entry_str

n = 2
m = (1, 1)  # lambda = omega_1 + omega_2


def root_str(alpha):
    return f"alpha_{{{alpha.i},{entry_str(n, 2 * n + 1 - alpha.j if alpha.barred else alpha.j)}}}"


# --- the n^2 positive roots, in triangle (row-major) order
print(f"positive roots of sp({2 * n}):")
for alpha in positive_roots(n):
    print(" ", root_str(alpha))

# --- Dyck paths: monotone walks in the triangle between simple roots
print("\nDyck paths:")
for path in dyck_paths(n):
    print(" ", " -> ".join(root_str(a) for a in path))

# --- each path contributes one inequality sum(p_alpha) <= m_i + ... + m_j
print(f"\nFFLV polytope for m = {m}:")
for ineq in fflv_inequalities(n, m):
    lhs = " + ".join(f"p_{{{a.i},{entry_str(n, 2 * n + 1 - a.j if a.barred else a.j)}}}"
                     for a in ineq.support)
    print(f"  {lhs} <= {ineq.rhs}")

# --- the lattice points of the polytope index a basis of V(lambda)
points = lattice_points(n, m)
print(f"\nlattice points: {len(points)}")
print(f"weyl_dimension: {weyl_dimension(n, m)}")

# spot-check a bigger weight on the larger group
m3 = (1, 1, 1)
print(f"\nn=3, m={m3}: {len(lattice_points(3, m3))} points,"
      f" dimension {weyl_dimension(3, m3)}")
