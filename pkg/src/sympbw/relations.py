"""Defining relations of the symplectic flag variety and its PBW degeneration.

Quadratic Pluecker exchange relations R^t_{L,J}, linear symplectic relations
S_{(I2,I1)} attached to non-reverse-admissible minors, their degenerate
components (minimal total PBW-degree parts), and the one-parameter s-family
interpolating between the two.
"""

from dataclasses import dataclass
import itertools

from .pluecker import (
    computed_minor,
    is_reverse_admissible,
    minor_parts,
    normalize_index,
    pbw_degree_index,
    poly_add,
    poly_canonical,
    poly_frozen,
    poly_term,
    term_sort_key,
    validate_minor,
)
from .tableaux import entry_str


@dataclass(frozen=True)
class Relation:
    kind: str  # pluecker | symplectic | pluecker_degenerate | symplectic_degenerate | s_family
    label: str
    poly: tuple  # frozen polynomial (see pluecker.poly_frozen)

    @property
    def ring(self):
        if self.kind.endswith("_degenerate"):
            return "degenerate"
        if self.kind == "s_family":
            return "s"
        return "classical"

    def as_dict(self):
        return dict(self.poly)


def pluecker_relation(n, L, J, t):
    """Exchange relation R^t_{L,J}: swap the first t entries of J into L in
    all slot-order-preserving ways and subtract.

    L and J must be strictly increasing over 1..2n with n >= |L| >= |J| >= t >= 1.
    """
    L, J = tuple(L), tuple(J)
    p, q = len(L), len(J)
    if not (n >= p >= q >= 1 and 1 <= t <= q):
        raise ValueError(f"invalid shape: |L|={p}, |J|={q}, t={t}, n={n}")
    for seq in (L, J):
        if any(seq[a] >= seq[a + 1] for a in range(len(seq) - 1)):
            raise ValueError("L and J must be strictly increasing")
        if seq[0] < 1 or seq[-1] > 2 * n:
            raise ValueError(f"entries must lie in 1..{2 * n}")

    out = poly_term(1, [L, J])
    for positions in itertools.combinations(range(p), t):
        new_l = list(L)
        for slot, pos in enumerate(positions):
            new_l[pos] = J[slot]
        new_j = tuple(L[pos] for pos in positions) + J[t:]
        idx_l, sign_l = normalize_index(p, new_l)
        idx_j, sign_j = normalize_index(q, new_j)
        if sign_l == 0 or sign_j == 0:
            continue
        out = poly_add(out, poly_term(-sign_l * sign_j, [idx_l, idx_j]))
    return out


def _minor_variable(n, m):
    """(index, sign) of the Pluecker variable carrying the minor's determinant."""
    seq = computed_minor(n, m)
    return normalize_index(len(seq), seq)


def symplectic_relation(n, m):
    """Linear relation S_{(I2,I1)} expanding a non-reverse-admissible minor.

    With Gamma = I1 & I2 = {g_1 < ... < g_t}: pick h0 in 1..t minimal so that
    some T in the complement of I1 u I2 has |T| = t - h0 and T < (g_{h0+1},
    ..., g_t); let T* be the componentwise-maximal such T, b in {h0..t}
    maximal with (T*_1, ..., T*_{b-h0}) < (g_{h0}, ..., g_{b-1}), Gtilde =
    (g_{h0}, ..., g_b) and F = Gamma minus Gtilde.  Then

        S = X_{(I2,I1)} - (-1)^{|G'|} sum_{G'} X_{(I2~ u F u G', I1~ u F u G')}

    over G' of size b - h0 + 1 disjoint from I1 u I2.
    """
    I2, I1 = validate_minor(n, m)
    if is_reverse_admissible(n, (I2, I1)):
        raise ValueError("minor is reverse-admissible: no relation attached")
    i2t, i1t, gamma = minor_parts(n, (I2, I1))
    t = len(gamma)
    pool = sorted(set(range(1, n + 1)) - set(I1) - set(I2))

    h0 = None
    witnesses = []
    for h in range(1, t + 1):
        tail = gamma[h:]
        witnesses = [
            T
            for T in itertools.combinations(pool, t - h)
            if all(a < g for a, g in zip(T, tail))
        ]
        if witnesses:
            h0 = h
            break
    assert h0 is not None  # h = t always admits the empty witness

    t_max = tuple(max(w[r] for w in witnesses) for r in range(t - h0))
    if t_max not in witnesses:
        raise ValueError("incomparable maximal witnesses: contract violation")

    b = h0
    for bb in range(h0 + 1, t + 1):
        if all(t_max[r] < gamma[h0 - 1 + r] for r in range(bb - h0)):
            b = bb
        else:
            break
    g_tilde = gamma[h0 - 1 : b]
    f_part = gamma[: h0 - 1] + gamma[b:]

    idx, sign = _minor_variable(n, (I2, I1))
    out = poly_term(sign, [idx])
    size = b - h0 + 1
    coeff = -((-1) ** size)
    for g_new in itertools.combinations(pool, size):
        new_i2 = i2t + f_part + g_new
        new_i1 = i1t + f_part + g_new
        idx2, sign2 = _minor_variable(n, (new_i2, new_i1))
        out = poly_add(out, poly_term(coeff * sign2, [idx2]))
    return out


def term_pbw_degree(key):
    """Total PBW-degree of a term key: sum of entry counts above each level."""
    _, vars_ = key
    return sum(pbw_degree_index(len(J), J) for J in vars_)


def degenerate_component(p):
    """Sub-sum of the terms of minimal total PBW-degree."""
    if not p:
        raise ValueError("empty polynomial has no degenerate component")
    degrees = {key: term_pbw_degree(key) for key in p}
    low = min(degrees.values())
    return {key: coeff for key, coeff in p.items() if degrees[key] == low}


def s_deformed_relation(p):
    """Tag each term with s^(its PBW-degree above the minimum).

    Specializing s=1 recovers the plain relation, s=0 its degenerate component.
    """
    if not p:
        raise ValueError("empty polynomial cannot be deformed")
    if any(key[0] is not None for key in p):
        raise ValueError("polynomial already s-graded")
    degrees = {key: term_pbw_degree(key) for key in p}
    low = min(degrees.values())
    return {(degrees[key] - low, key[1]): coeff for key, coeff in p.items()}


def specialize_s(p, value):
    """Substitute a number for s, returning a plain polynomial."""
    out = {}
    for (s_deg, vars_), coeff in p.items():
        if s_deg is None:
            raise ValueError("polynomial is not s-graded")
        c = coeff * value**s_deg
        if c:
            key = (None, vars_)
            new = out.get(key, 0) + c
            if new:
                out[key] = new
            else:
                out.pop(key, None)
    return out


def _index_str(n, J, ascii_only=False):
    return ",".join(entry_str(n, v, ascii_only) for v in J)


def relation_text(n, relation, ascii_only=False):
    """Render a relation the way the variables are written by hand."""
    poly = dict(relation.poly) if isinstance(relation, Relation) else relation
    sup = ""
    if isinstance(relation, Relation) and relation.ring == "degenerate":
        sup = "^a"
    pieces = []
    for key in sorted(poly, key=term_sort_key):
        s_deg, vars_ = key
        coeff = poly[key]
        body = "".join(f"X{sup}_{{{_index_str(n, J, ascii_only)}}}" for J in vars_)
        if s_deg:
            body = f"s^{s_deg}*{body}"
        mag = "" if abs(coeff) == 1 else f"{abs(coeff)}*"
        if not pieces:
            sign = "-" if coeff < 0 else ""
        else:
            sign = " - " if coeff < 0 else " + "
        pieces.append(f"{sign}{mag}{body}")
    return "".join(pieces) if pieces else "0"


def _all_minors(n):
    universe = range(1, n + 1)
    subsets = [
        tuple(c) for r in range(0, n + 1) for c in itertools.combinations(universe, r)
    ]
    for I2 in subsets:
        for I1 in subsets:
            k = len(I1) + len(I2)
            if 1 <= k <= n:
                yield I2, I1


def generate_ideal(n, kind):
    """Canonical deduplicated generating set, kind in {classical, degenerate, s-family}.

    All exchange relations over sorted index pairs plus one symplectic
    relation per non-reverse-admissible minor; degenerate components or
    s-deformations of the same list for the other kinds.  Relations equal up
    to a global sign count once; representatives have positive leading
    coefficient.
    """
    if kind not in ("classical", "degenerate", "s-family"):
        raise ValueError(f"unknown kind: {kind!r}")
    raw = []
    rows = range(1, 2 * n + 1)
    for I2, I1 in _all_minors(n):
        if not is_reverse_admissible(n, (I2, I1)):
            label = f"S_{{({_index_str(n, computed_minor(n, (I2, I1)))})}}"
            raw.append(("symplectic", label, symplectic_relation(n, (I2, I1))))
    for p_len in range(1, n + 1):
        for q_len in range(1, p_len + 1):
            for L in itertools.combinations(rows, p_len):
                for J in itertools.combinations(rows, q_len):
                    for t in range(1, q_len + 1):
                        label = (
                            f"R^{t}_{{({_index_str(n, L)}),({_index_str(n, J)})}}"
                        )
                        raw.append(("pluecker", label, pluecker_relation(n, L, J, t)))

    seen = set()
    out = []
    for base_kind, label, poly in raw:
        if kind == "degenerate":
            if not poly:
                continue
            poly = degenerate_component(poly)
            base_kind += "_degenerate"
            label += " (degenerate part)"
        elif kind == "s-family":
            if not poly:
                continue
            poly = s_deformed_relation(poly)
            base_kind = "s_family"
            label += " (s-family)"
        frozen = poly_frozen(poly)
        if not frozen or frozen in seen:
            continue
        seen.add(frozen)
        out.append(Relation(base_kind, label, frozen))
    out.sort(
        key=lambda r: (
            min(len(J) for (_, vars_), _c in r.poly for J in vars_),
            r.poly,
        )
    )
    return out
