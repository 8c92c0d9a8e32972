"""Exact point sampling and runtime checks.

Samples rational points on the classical symplectic flag variety (unipotent
orbit through the highest-weight flag) and on its PBW degeneration (graded
orbit, built level by level), then checks generated relations, projection
geometry, enumeration counts, and the monomial/tableau bijection against
them.  All arithmetic is exact.
"""

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .correspondence import monomial_to_tableau, monomial_weight, tableau_to_monomial
from .fflv import lattice_points
from .liealg import (
    identity_matrix,
    mat_mul,
    matrix_minor,
    positive_roots,
    root_vector_matrix,
    symplectic_form,
    transpose,
    weyl_dimension,
)
from .pluecker import pbw_degree_index, poly_eval
from .tableaux import enumerate_tableaux, tableau_weight


@dataclass
class FlagPoint:
    """Exact coordinates of a sampled flag, one table per level.

    ``coords[k]`` maps every level-k Pluecker index to a Fraction; ``bases[k]``
    retains the k spanning vectors the coordinates were read from, so that
    subspace-level checks can run on the same sample.
    """

    n: int
    kind: str
    seed: int | None
    coords: dict = field(repr=False)
    bases: dict = field(repr=False)

    def flat(self):
        """All coordinates in one dict, keyed by index tuple."""
        out = {}
        for table in self.coords.values():
            out.update(table)
        return out

    def to_dict(self):
        levels = []
        for k in range(1, self.n + 1):
            coordinates = [
                {"J": list(J), "value": str(v)}
                for J, v in sorted(self.coords[k].items())
                if v
            ]
            levels.append({"level": k, "coordinates": coordinates})
        return {"n": self.n, "kind": self.kind, "seed": self.seed, "levels": levels}


def _point_from_columns(n, columns, kind, seed):
    """Read all Pluecker coordinates off per-level spanning columns.

    ``columns[k]`` is a list of k vectors (length 2n, Fractions).
    """
    coords = {}
    for k in range(1, n + 1):
        mat = [[columns[k][c][r] for c in range(k)] for r in range(2 * n)]
        table = {}
        for J in itertools.combinations(range(1, 2 * n + 1), k):
            table[J] = matrix_minor(mat, J, tuple(range(1, k + 1)))
        assert any(table.values()), f"level {k} has no nonzero coordinate"
        coords[k] = table
    return FlagPoint(n=n, kind=kind, seed=seed, coords=coords, bases=columns)


def _matrix_columns(m, count):
    return [tuple(row[c] for row in m) for c in range(count)]


def _nilpotent_exp(n, mat, c):
    """exp(c*mat) for nilpotent mat, exact."""
    out = identity_matrix(2 * n)
    term = identity_matrix(2 * n)
    j = 0
    while any(any(row) for row in term):
        j += 1
        term = [[Fraction(c) * v / j for v in row] for row in mat_mul(term, mat)]
        out = [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(out, term)]
    return out


def _random_coefficients(n, seed):
    rng = random.Random(seed)
    return {alpha: Fraction(rng.randint(-9, 9)) for alpha in positive_roots(n)}


def sample_classical_flag(n, seed):
    """A random point of the symplectic flag variety, exact coordinates.

    The point is M acting on the highest-weight flag, with
    M = prod_alpha exp(c_alpha f_alpha) over all positive roots and small
    integer c_alpha; level-k coordinates are the k x k minors of the first k
    columns of M.
    """
    coeffs = _random_coefficients(n, seed)
    m = identity_matrix(2 * n)
    for alpha in positive_roots(n):
        m = mat_mul(m, _nilpotent_exp(n, root_vector_matrix(n, alpha), coeffs[alpha]))
    psi = symplectic_form(n)
    assert mat_mul(transpose(m), mat_mul(psi, m)) == psi, "sample left Sp(2n)"
    columns = {k: _matrix_columns(m, k) for k in range(1, n + 1)}
    return _point_from_columns(n, columns, "classical", seed)


@lru_cache(maxsize=None)
def _wedge_basis(n, k):
    return tuple(itertools.combinations(range(1, 2 * n + 1), k))


def degenerate_operator(n, k, alpha):
    """Degree-graded action of f_alpha on the level-k wedge basis.

    Acts by the derivation rule on each w_J and keeps only the components
    whose degree #{j > k} rises by exactly one.  Returned as a map
    J -> list of (J', integer coefficient).
    """
    mat = root_vector_matrix(n, alpha)
    entries = [
        (r + 1, c + 1, mat[r][c])
        for r in range(2 * n)
        for c in range(2 * n)
        if mat[r][c]
    ]
    op = {}
    for J in _wedge_basis(n, k):
        deg = pbw_degree_index(k, J)
        terms = {}
        for pos in range(k):
            for r, c, v in entries:
                if c != J[pos] or r in J:
                    continue
                image = sorted(J[:pos] + (r,) + J[pos + 1 :])
                sign = (-1) ** (image.index(r) - pos)
                J2 = tuple(image)
                if pbw_degree_index(k, J2) != deg + 1:
                    continue
                terms[J2] = terms.get(J2, 0) + sign * v
        cleaned = [(J2, v) for J2, v in sorted(terms.items()) if v]
        if cleaned:
            op[J] = cleaned
    return op


def _wedge_apply(op, vec):
    out = {}
    for J, val in vec.items():
        for J2, c in op.get(J, ()):
            out[J2] = out.get(J2, Fraction(0)) + c * val
    return {J: v for J, v in out.items() if v}


def _wedge_exp_apply(op, c, vec):
    """exp(c * op) applied to vec; op is nilpotent on the wedge space."""
    total = dict(vec)
    term = vec
    j = 0
    while term:
        j += 1
        term = {J: Fraction(c) * v / j for J, v in _wedge_apply(op, term).items()}
        for J, v in term.items():
            total[J] = total.get(J, Fraction(0)) + v
    return {J: v for J, v in total.items() if v}


@lru_cache(maxsize=None)
def _level_operators(n, k):
    """Operators for all positive roots at level k, commutativity asserted."""
    ops = [(alpha, degenerate_operator(n, k, alpha)) for alpha in positive_roots(n)]
    basis = _wedge_basis(n, k)
    for (_, op1), (_, op2) in itertools.combinations(ops, 2):
        for J in basis:
            vec = {J: Fraction(1)}
            lhs = _wedge_apply(op1, _wedge_apply(op2, vec))
            rhs = _wedge_apply(op2, _wedge_apply(op1, vec))
            assert lhs == rhs, f"operators do not commute at n={n}, k={k}"
    return tuple(ops)


def _truncated_root_matrix(n, k, alpha):
    """P_{>k} f_alpha P_{<=k}: the matrix whose derivation the level-k
    operator is."""
    mat = root_vector_matrix(n, alpha)
    return [
        [mat[r][c] if r >= k and c < k else 0 for c in range(2 * n)]
        for r in range(2 * n)
    ]


def sample_degenerate_point(n, seed):
    """A random point of the degenerate flag variety, exact coordinates.

    At each level k the abelianized lowering operators act on the
    highest-weight vector w_{1..k}; the same random coefficients are shared
    across levels.  Coordinates are cross-checked against minors of the
    matrix route I + sum c_alpha * (P_{>k} f_alpha P_{<=k}).
    """
    coeffs = _random_coefficients(n, seed)
    coords = {}
    columns = {}
    for k in range(1, n + 1):
        vec = {tuple(range(1, k + 1)): Fraction(1)}
        for alpha, op in _level_operators(n, k):
            vec = _wedge_exp_apply(op, coeffs[alpha], vec)
        table = {J: vec.get(J, Fraction(0)) for J in _wedge_basis(n, k)}
        m = identity_matrix(2 * n)
        for alpha in positive_roots(n):
            g = _truncated_root_matrix(n, k, alpha)
            m = [
                [a + coeffs[alpha] * b for a, b in zip(r1, r2)]
                for r1, r2 in zip(m, g)
            ]
        for J in _wedge_basis(n, k):
            minor = matrix_minor(m, J, tuple(range(1, k + 1)))
            assert minor == table[J], f"wedge/minor mismatch at level {k}, J={J}"
        coords[k] = table
        columns[k] = _matrix_columns(m, k)
    point = FlagPoint(n=n, kind="degenerate", seed=seed, coords=coords, bases=columns)
    assert all(point.coords[k][J] for k, J in ((k, tuple(range(1, k + 1))) for k in range(1, n + 1)))
    return point


def check_vanishing(relations, points):
    """Evaluate every relation at every point; report nonzero values.

    Relation and point kinds must match ("s-family" relations carry a formal
    variable and are checked by check_s_bridge instead).
    """
    failures = []
    checked = 0
    for point in points:
        flat = point.flat()
        for rel in relations:
            if rel.ring != point.kind:
                raise ValueError(
                    f"kind mismatch: {rel.ring} relation at {point.kind} point"
                )
            value = poly_eval(dict(rel.poly), flat)
            checked += 1
            if value:
                failures.append(
                    {"relation": rel.label, "seed": point.seed, "value": str(value)}
                )
    return {"suite": f"{points[0].kind}-ideal" if points else "vanishing",
            "checked": checked, "failures": failures, "ok": not failures}


def check_s_bridge(relations, points):
    """The s-deformed relations vanish identically along the rescaling family.

    For a classical point x, substituting y_J = s^(-deg J) * x_J into an
    s-graded relation must give the zero Laurent polynomial in s: the
    coefficient of each power of s is summed exactly and must cancel.
    """
    failures = []
    checked = 0
    for point in points:
        if point.kind != "classical":
            raise ValueError("the rescaling family starts from classical points")
        flat = point.flat()
        for rel in relations:
            if rel.ring != "s":
                raise ValueError(f"expected s-family relations, got {rel.ring}")
            buckets = {}
            for (s_deg, vars_), coeff in rel.poly:
                val = Fraction(coeff)
                exponent = 0 if s_deg is None else s_deg
                for J in vars_:
                    val *= flat[J]
                    exponent -= pbw_degree_index(len(J), J)
                buckets[exponent] = buckets.get(exponent, Fraction(0)) + val
            checked += 1
            bad = {e: str(v) for e, v in buckets.items() if v}
            if bad:
                failures.append({"relation": rel.label, "seed": point.seed, "nonzero": bad})
    return {"suite": "s-family", "checked": checked, "failures": failures, "ok": not failures}


def _projection_13(n, k, vector):
    """Keep the first k and last k coordinates, zero the middle block."""
    return tuple(
        v if i < k or i >= 2 * n - k else Fraction(0) for i, v in enumerate(vector)
    )


def _projection_drop(i, vector):
    """Kill coordinate i (1-indexed)."""
    return tuple(Fraction(0) if r == i - 1 else v for r, v in enumerate(vector))


def _rank(vectors):
    rows = [list(map(Fraction, v)) for v in vectors if any(v)]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][c]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][c]:
                f = rows[r][c] / rows[rank][c]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def check_isotropy_projection(point, n, k):
    """The level-k subspace satisfies the linear-algebra realization.

    True iff pr_{1,3}(U_k) is isotropic for the symplectic form, and (for
    k < n) the projection of U_k killing coordinate k+1 lies inside U_{k+1}.
    """
    psi = symplectic_form(n)
    basis = point.bases[k]
    projected = [_projection_13(n, k, v) for v in basis]
    for u in projected:
        for w in projected:
            pairing = sum(
                u[r] * psi[r][c] * w[c]
                for r in range(2 * n)
                for c in range(2 * n)
                if psi[r][c]
            )
            if pairing:
                return False
    if k < n:
        upper = point.bases[k + 1]
        dropped = [_projection_drop(k + 1, v) for v in basis]
        if _rank(list(upper) + dropped) != _rank(upper):
            return False
    return True


def check_counts(n, lam):
    """Lattice points, tableaux, and the Weyl dimension all agree."""
    lam = tuple(lam)
    polytope = len(lattice_points(n, lam))
    tableaux = len(enumerate_tableaux(n, lam))
    dimension = weyl_dimension(n, lam)
    ok = polytope == tableaux == dimension
    return {"suite": "counts", "n": n, "lambda": list(lam),
            "lattice_points": polytope, "tableaux": tableaux,
            "weyl_dimension": dimension, "checked": 3, "failures": [] if ok else
            [{"lattice_points": polytope, "tableaux": tableaux, "weyl_dimension": dimension}],
            "ok": ok}


def check_roundtrip(n, lam):
    """The monomial/tableau correspondence is a weight-preserving bijection."""
    lam = tuple(lam)
    monomials = lattice_points(n, lam)
    tableaux = enumerate_tableaux(n, lam)
    failures = []
    seen = set()
    for p in monomials:
        tab = monomial_to_tableau(n, lam, p)
        key = tuple(tuple(col) for col in tab)
        if key in seen:
            failures.append({"monomial": dict(p), "error": "tableau hit twice"})
        seen.add(key)
        back_m, back = tableau_to_monomial(n, tab)
        if back_m != lam or back != p:
            failures.append({"monomial": dict(p), "error": "round trip changed it"})
        if monomial_weight(n, lam, p) != tableau_weight(n, tab):
            failures.append({"monomial": dict(p), "error": "weight mismatch"})
    if len(seen) != len(tableaux):
        failures.append({"error": f"image size {len(seen)} != {len(tableaux)} tableaux"})
    return {"suite": "roundtrip", "n": n, "lambda": list(lam),
            "checked": len(monomials), "failures": failures, "ok": not failures}
