"""Bijection between FFLV lattice points and symplectic PBW semistandard tableaux.

A lattice point p encodes the PBW monomial prod f_alpha^{p_alpha} acting on a
highest weight vector; the tableau realizes that vector combinatorially.  The
two directions are ``monomial_to_tableau`` (build up from the highest weight
tableau by applying operators) and ``tableau_to_monomial`` (read the moved
entries off the columns).
"""

from .fflv import contains
from .liealg import Root, bar, jpos, positive_roots, root_key
from .tableaux import (
    column_lengths_from_m,
    highest_weight_tableau,
    is_symplectic_column,
    is_symplectic_pbw_semistandard,
    validate_tableau,
)


def operator_entry(n, alpha):
    """Alphabet letter written by f_alpha: j+1 for f_{i,j} (so nbar for j = n), jbar for f_{i,jbar}."""
    return alpha.j + 1 if not alpha.barred else bar(alpha.j, n)


def order_monomial(p):
    """Expand a multi-exponent into the factor sequence of the ordered monomial.

    Operators are totally ordered by f_{i1,j1} > f_{i2,j2} iff i1 < i2, or
    i1 = i2 and j1 < j2 in the alphabet; the product is written largest first.
    """
    factors = []
    for alpha in sorted(p, key=lambda a: (a.i, a.barred, -a.j if a.barred else a.j)):
        factors.extend([alpha] * p[alpha])
    return tuple(factors)


def _apply_operator(n, cols, alpha):
    """Apply one factor f_alpha: write its letter into the first column that accepts it.

    A column c accepts f_alpha when the letter position of alpha is >= mu_c,
    row i currently holds the untouched entry i, and the rewritten column is
    still a valid symplectic column.
    """
    letter = operator_entry(n, alpha)
    for c, col in enumerate(cols):
        mu = len(col)
        if jpos(alpha, n) < mu:
            continue
        if alpha.i > mu or col[alpha.i - 1] != alpha.i:
            continue
        new_col = col[: alpha.i - 1] + (letter,) + col[alpha.i :]
        if is_symplectic_column(n, new_col):
            return cols[:c] + (new_col,) + cols[c + 1 :]
    raise ValueError(f"no column accepts operator f_{{{alpha.i},{alpha.j}{'bar' if alpha.barred else ''}}}")


def monomial_to_tableau(n, m, p):
    """Tableau of the lattice point p in P(lambda): apply the ordered monomial
    to the highest weight tableau, smallest factor first."""
    if not contains(n, m, p):
        raise ValueError("multi-exponent lies outside the polytope")
    cols = highest_weight_tableau(m)
    for alpha in reversed(order_monomial(p)):
        cols = _apply_operator(n, cols, alpha)
    return cols


def tableau_to_monomial(n, tab):
    """Inverse direction: read (m, p) off a symplectic PBW semistandard tableau.

    Each moved entry h > mu_c at row r contributes one factor: f_{r,h-1} when
    h <= nbar, and f_{r,bar(h)bar} when h is a barred letter below nbar.
    """
    cols = validate_tableau(n, tab)
    if not is_symplectic_pbw_semistandard(n, cols):
        raise ValueError("not a symplectic PBW semistandard tableau")
    lengths = [len(c) for c in cols]
    m = tuple(lengths.count(k) for k in range(1, n + 1))
    p = {}
    for col in cols:
        mu = len(col)
        for r in range(1, mu + 1):
            h = col[r - 1]
            if h <= mu:
                continue
            if h <= n + 1:
                alpha = Root(r, h - 1, False)
            else:
                alpha = Root(r, 2 * n + 1 - h, True)
            p[alpha] = p.get(alpha, 0) + 1
    return m, p


def monomial_weight(n, m, p):
    """Weight of the tableau of p: wt(t_lambda) + sum p_alpha * wt(f_alpha)."""
    from .liealg import root_vector_weight
    from .tableaux import tableau_weight

    wt = list(tableau_weight(n, highest_weight_tableau(m)))
    for alpha, exp in p.items():
        for k, x in enumerate(root_vector_weight(n, alpha)):
            wt[k] += exp * x
    return tuple(wt)
