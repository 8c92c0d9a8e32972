"""Straightening of Pluecker monomials into tableau monomials.

A monomial is a multiset of Pluecker indices (one per column).  Straightening
rewrites it, inside the classical or the degenerate coordinate ring, as an
integer combination of monomials whose columns assemble into a symplectic PBW
semistandard tableau.  Two kinds of steps are used:

* S-step: a column whose filling is not a symplectic column comes from a
  non-reverse-admissible minor; the linear symplectic relation replaces it by
  strictly smaller columns in the minor order.
* P-step: all columns are symplectic but two neighbours violate the
  semistandard condition; the exchange relation applied to the two column
  readings replaces the pair, moving the monomial strictly down in the
  tableau order (compared on minimal arrangements).

Both descent claims are asserted on every step, and a step budget turns any
unnoticed cycle into a hard error instead of a hang.
"""

import itertools

from .pluecker import (
    _vars_key,
    column_to_minor,
    computed_minor,
    normalize_index,
    pbw_fill,
    poly_add,
    poly_term,
)
from .relations import degenerate_component, symplectic_relation
from .tableaux import _semistandard_step, is_symplectic_column


def tableau_order_compare(t1, t2):
    """Compare same-shape tableaux: -1, 0, +1.

    The larger tableau has the larger entry at the first difference when
    columns are read right-to-left, each column bottom-to-top.
    """
    shape1 = tuple(len(c) for c in t1)
    shape2 = tuple(len(c) for c in t2)
    if shape1 != shape2:
        raise ValueError(f"shape mismatch: {shape1} vs {shape2}")
    for c in range(len(t1) - 1, -1, -1):
        for i in range(len(t1[c]) - 1, -1, -1):
            if t1[c][i] != t2[c][i]:
                return 1 if t1[c][i] > t2[c][i] else -1
    return 0


def minor_order_compare(l_seq, j_seq):
    """Compare two row sequences of equal length: -1 if L comes strictly
    before J, 0 if equal, +1 otherwise.

    L is before J when its entry sum is smaller, or the sums agree and the
    last nonzero entry of L - J is positive.
    """
    l_seq, j_seq = tuple(l_seq), tuple(j_seq)
    if len(l_seq) != len(j_seq):
        raise ValueError("sequences must have equal length")
    if l_seq == j_seq:
        return 0
    nu_l, nu_j = sum(l_seq), sum(j_seq)
    if nu_l != nu_j:
        return -1 if nu_l < nu_j else 1
    diff = [a - b for a, b in zip(l_seq, j_seq)]
    last = next(d for d in reversed(diff) if d)
    return -1 if last > 0 else 1


def _validate_monomial(n, monomial):
    cols = []
    for J in monomial:
        J = tuple(J)
        if not J or len(J) > n:
            raise ValueError(f"column level {len(J)} out of range for n={n}")
        if any(J[a] >= J[a + 1] for a in range(len(J) - 1)):
            raise ValueError("column indices must be strictly increasing")
        if J[0] < 1 or J[-1] > 2 * n:
            raise ValueError(f"entries must lie in 1..{2 * n}")
        cols.append(J)
    # canonical key: longest columns first, lexicographic within a length
    return tuple(sorted(cols, key=lambda J: (-len(J), J)))


def _arrangements(mono):
    """Distinct column orders compatible with the tableau shape."""
    groups = [list(g) for _, g in itertools.groupby(mono, key=len)]
    pools = [sorted(set(itertools.permutations(g))) for g in groups]
    for choice in itertools.product(*pools):
        yield tuple(itertools.chain.from_iterable(choice))


def _min_arrangement(n, mono):
    """(column order, filled columns) minimal in the tableau order."""
    fills = {J: pbw_fill(J) for J in set(mono)}
    best = None
    for arr in _arrangements(mono):
        cols = tuple(fills[J] for J in arr)
        if best is None or tableau_order_compare(cols, best[1]) == -1:
            best = (arr, cols)
    return best


def _straight_tableau(n, mono):
    """The semistandard arrangement of the monomial's columns, or None.

    At most one arrangement may fill to a symplectic PBW semistandard tableau;
    more than one would break the basis property and raises.
    """
    fills = {J: pbw_fill(J) for J in set(mono)}
    if not all(is_symplectic_column(n, col) for col in fills.values()):
        return None
    found = set()
    for arr in _arrangements(mono):
        cols = tuple(fills[J] for J in arr)
        if all(_semistandard_step(cols[c], cols[c + 1]) for c in range(len(cols) - 1)):
            found.add(cols)
    assert len(found) <= 1, f"multiple semistandard arrangements: {sorted(found)}"
    return found.pop() if found else None


def _relation_in_ring(poly, ring):
    return degenerate_component(poly) if ring == "degenerate" else poly


def _split_head(poly, head_vars):
    """Separate the head term of a relation; returns (head coeff, rest items)."""
    head_key = (None, head_vars)
    if head_key not in poly:
        raise AssertionError("straightening relation lost its head term")
    head = poly[head_key]
    assert head in (1, -1), f"head coefficient {head} not a unit"
    rest = [(key, coeff) for key, coeff in poly.items() if key != head_key]
    return head, rest


def _s_step(n, mono, ring, trace):
    """Replace the first non-symplectic column via its symplectic relation."""
    bad = next(J for J in mono if not is_symplectic_column(n, pbw_fill(J)))
    minor = column_to_minor(n, bad)
    relation = _relation_in_ring(symplectic_relation(n, minor), ring)
    head, rest = _split_head(relation, (bad,))
    if trace:
        trace(f"S-step on column {bad}: {len(rest)} replacement column(s)")
    src_seq = computed_minor(n, minor)
    remainder = list(mono)
    remainder.remove(bad)
    out = []
    for (_, vars_), coeff in rest:
        (new_col,) = vars_
        tgt_seq = computed_minor(n, column_to_minor(n, new_col))
        assert minor_order_compare(tgt_seq, src_seq) == -1, (new_col, bad)
        out.append((-head * coeff, _validate_monomial(n, remainder + [new_col])))
    return out


def _first_violation(cols):
    """(pair position, row t) of the first semistandard failure, or None."""
    for c in range(len(cols) - 1):
        left, right = cols[c], cols[c + 1]
        for i in range(len(right)):
            if not any(left[i2] >= right[i] for i2 in range(i, len(left))):
                return c, i + 1
    return None


def _exchange_relation(n, l_seq, j_seq, t):
    """Exchange identity on two row sequences (not necessarily sorted):
    the first t entries of j_seq trade places with every size-t selection of
    slots in l_seq.  All variables are sign-normalized."""
    p, q = len(l_seq), len(j_seq)
    idx_l, sign_l = normalize_index(p, l_seq)
    idx_j, sign_j = normalize_index(q, j_seq)
    assert sign_l and sign_j, "exchange on a vanishing variable"
    out = poly_term(sign_l * sign_j, [idx_l, idx_j])
    for positions in itertools.combinations(range(p), t):
        new_l = list(l_seq)
        for slot, pos in enumerate(positions):
            new_l[pos] = j_seq[slot]
        new_j = tuple(l_seq[pos] for pos in positions) + tuple(j_seq[t:])
        idx_l2, sign_l2 = normalize_index(p, new_l)
        idx_j2, sign_j2 = normalize_index(q, new_j)
        if sign_l2 == 0 or sign_j2 == 0:
            continue
        out = poly_add(out, poly_term(-sign_l2 * sign_j2, [idx_l2, idx_j2]))
    return out


def _p_step(n, mono, ring, trace):
    """Exchange a violating adjacent pair of the minimal arrangement."""
    arr, cols = _min_arrangement(n, mono)
    c, t = _first_violation(cols)
    relation = _relation_in_ring(_exchange_relation(n, cols[c], cols[c + 1], t), ring)
    head, rest = _split_head(relation, _vars_key([arr[c], arr[c + 1]]))
    if trace:
        trace(
            f"P-step on columns {arr[c]} | {arr[c + 1]} at row {t}: "
            f"{len(rest)} exchange term(s)"
        )
    remainder = arr[:c] + arr[c + 2 :]
    out = []
    for (_, vars_), coeff in rest:
        new_mono = _validate_monomial(n, remainder + vars_)
        _, new_cols = _min_arrangement(n, new_mono)
        assert tableau_order_compare(new_cols, cols) == -1, (vars_, mono)
        out.append((-head * coeff, new_mono))
    return out


def straighten(n, monomial, ring, trace=None, max_steps=200000):
    """Express a Pluecker monomial in the tableau basis of the given ring.

    Returns a dict mapping tableaux (tuples of filled columns) to integer
    coefficients.  ``ring`` is "classical" or "degenerate"; ``trace`` is an
    optional callable receiving one line per rewriting step.
    """
    if ring not in ("classical", "degenerate"):
        raise ValueError(f"unknown ring: {ring!r}")
    start = _validate_monomial(n, monomial)
    work = {start: 1}
    result = {}
    steps = 0
    while work:
        mono = max(work)
        coeff = work.pop(mono)
        if coeff == 0:
            continue
        straight = _straight_tableau(n, mono)
        if straight is not None:
            result[straight] = result.get(straight, 0) + coeff
            continue
        steps += 1
        if steps > max_steps:
            raise RuntimeError("straightening budget exhausted: suspected cycle")
        if any(not is_symplectic_column(n, pbw_fill(J)) for J in mono):
            expansion = _s_step(n, mono, ring, trace)
        else:
            expansion = _p_step(n, mono, ring, trace)
        for c, new_mono in expansion:
            new = work.get(new_mono, 0) + coeff * c
            if new:
                work[new_mono] = new
            else:
                work.pop(new_mono, None)
    return {tab: c for tab, c in result.items() if c}
