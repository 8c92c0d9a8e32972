"""Pluecker coordinates on symplectic flag varieties: index bookkeeping,
computed minors, admissibility, PBW degrees, and exact sparse polynomials.

A level-k Pluecker variable X_J is labelled by a sorted k-tuple J of rows from
1..2n.  A *minor* is a pair (I2, I1) of subsets of {1..n}: I1 collects the
unbarred row labels, I2 the bases of the barred ones, k = |I1| + |I2|.

Polynomials are dicts mapping term keys to integer coefficients.  A term key
is (s_deg, vars) with vars a tuple of index tuples sorted by (level, index)
and s_deg either None (plain polynomial) or a nonnegative power of the
deformation parameter s.
"""

from fractions import Fraction
import itertools

from .liealg import bar


# --- index normalization ---


def normalize_index(k, seq):
    """Sort a row sequence into a Pluecker index, tracking the sign.

    Returns (sorted tuple, (-1)^inversions); a repeated value makes the
    alternating form vanish, signalled as (None, 0).
    """
    seq = tuple(seq)
    if len(seq) != k:
        raise ValueError(f"expected {k} values, got {len(seq)}")
    if len(set(seq)) != k:
        return None, 0
    inv = sum(
        1
        for a in range(k)
        for b in range(a + 1, k)
        if seq[a] > seq[b]
    )
    return tuple(sorted(seq)), -1 if inv % 2 else 1


# --- minors ---


def validate_minor(n, m):
    """Normalize a minor to a pair of sorted tuples (I2, I1) and check ranges."""
    I2, I1 = tuple(sorted(m[0])), tuple(sorted(m[1]))
    if len(set(I2)) != len(I2) or len(set(I1)) != len(I1):
        raise ValueError("minor parts must not repeat values")
    k = len(I1) + len(I2)
    if k == 0 or k > n:
        raise ValueError(f"minor level {k} out of range for n={n}")
    for v in I1 + I2:
        if not (1 <= v <= n):
            raise ValueError(f"minor entry {v} outside 1..{n}")
    return I2, I1


def minor_parts(n, m):
    """Split a minor into (I2_tilde, I1_tilde, Gamma), each sorted ascending."""
    I2, I1 = validate_minor(n, m)
    gamma = tuple(sorted(set(I1) & set(I2)))
    return (
        tuple(v for v in I2 if v not in gamma),
        tuple(v for v in I1 if v not in gamma),
        gamma,
    )


def computed_minor(n, m):
    """Row sequence of the determinant computing the minor (I2, I1).

    The rows come out as (b1bar, ..., a_last, ..., a1, gammabar_last,
    gamma_last, ..., gammabar_1, gamma_1) -- barred complements first, then
    the unbarred complement reversed, then the bar/unbar pairs of the overlap
    from the largest down.
    """
    i2t, i1t, gamma = minor_parts(n, m)
    seq = [bar(b, n) for b in i2t]
    seq.extend(reversed(i1t))
    for g in reversed(gamma):
        seq.extend((bar(g, n), g))
    return tuple(seq)


def _witnesses(n, m, direction):
    i2, i1 = validate_minor(n, m)
    gamma = sorted(set(i1) & set(i2))
    pool = sorted(set(range(1, n + 1)) - set(i1) - set(i2))
    out = []
    for t_set in itertools.combinations(pool, len(gamma)):
        if direction == "<" and all(t < g for t, g in zip(t_set, gamma)):
            out.append(t_set)
        elif direction == ">" and all(t > g for t, g in zip(t_set, gamma)):
            out.append(t_set)
    return out


def is_reverse_admissible(n, m):
    """True iff some T in the complement of I1 u I2 has |T| = |Gamma| and T < Gamma."""
    return bool(_witnesses(n, m, "<"))


def is_admissible(n, m):
    """Mirror of is_reverse_admissible with T > Gamma."""
    return bool(_witnesses(n, m, ">"))


def pbw_fill(values):
    """Column of a set of row labels: entries <= k sit at their own row,
    the rest descend through the free rows from the top."""
    k = len(values)
    vals = sorted(values)
    if len(set(vals)) != k:
        raise ValueError("repeated row label")
    col = [0] * k
    for v in vals:
        if v <= k:
            col[v - 1] = v
    moved = iter(sorted((v for v in vals if v > k), reverse=True))
    for r in range(k):
        if col[r] == 0:
            col[r] = next(moved)
    return tuple(col)


def minor_to_column(n, m):
    """Single column carrying the same row labels as the computed minor.

    Total on all minors; the column is a symplectic PBW column exactly when
    the minor is reverse-admissible.
    """
    return pbw_fill(computed_minor(n, m))


def column_to_minor(n, col):
    """Inverse reading: unbarred entries form I1, bases of barred entries I2."""
    if len(set(col)) != len(col):
        raise ValueError("repeated entry in column")
    I1 = tuple(sorted(e for e in col if e <= n))
    I2 = tuple(sorted(bar(e, n) for e in col if e > n))
    return validate_minor(n, (I2, I1))


# --- PBW degrees ---


def pbw_degree_index(k, J):
    """Number of entries of the level-k index J exceeding k."""
    return sum(1 for j in J if j > k)


def pbw_degree_minor(n, m):
    """|I2| + #{i in I1 : i > k}, computed without building the minor."""
    I2, I1 = validate_minor(n, m)
    k = len(I1) + len(I2)
    return len(I2) + sum(1 for i in I1 if i > k)


# --- sparse polynomials in Pluecker variables ---


def _vars_key(vars_seq):
    return tuple(sorted((tuple(J) for J in vars_seq), key=lambda J: (len(J), J)))


def poly_term(coeff, vars_seq, s_deg=None):
    """Single-term polynomial coeff * s^s_deg * prod X_J."""
    if coeff == 0:
        return {}
    return {(s_deg, _vars_key(vars_seq)): coeff}


def poly_add(*polys):
    out = {}
    for p in polys:
        for key, coeff in p.items():
            new = out.get(key, 0) + coeff
            if new:
                out[key] = new
            else:
                out.pop(key, None)
    return out


def poly_scale(c, p):
    if c == 0:
        return {}
    return {key: c * coeff for key, coeff in p.items()}


def poly_mul(p, q):
    out = {}
    for (s1, v1), c1 in p.items():
        for (s2, v2), c2 in q.items():
            if (s1 is None) != (s2 is None):
                raise ValueError("cannot mix plain and s-graded terms")
            key = (None if s1 is None else s1 + s2, _vars_key(v1 + v2))
            new = out.get(key, 0) + c1 * c2
            if new:
                out[key] = new
            else:
                out.pop(key, None)
    return out


def poly_eval(p, coords, s=None):
    """Evaluate at a point: coords maps index tuples to exact rationals."""
    total = Fraction(0)
    for (s_deg, vars_), coeff in p.items():
        val = Fraction(coeff)
        if s_deg is not None:
            if s is None:
                raise ValueError("s-graded polynomial needs an s value")
            val *= Fraction(s) ** s_deg
        for J in vars_:
            if J not in coords:
                raise ValueError(f"no value for variable X_{J}")
            val *= coords[J]
        total += val
    return total


def term_sort_key(key):
    s_deg, vars_ = key
    return (vars_, s_deg is not None, s_deg or 0)


def poly_canonical(p):
    """Same relation with positive leading coefficient (level-lex term order)."""
    if not p:
        return {}
    lead = min(p, key=term_sort_key)
    return poly_scale(-1, p) if p[lead] < 0 else dict(p)


def poly_frozen(p):
    """Hashable canonical form, for dedup up to global sign."""
    return tuple(sorted(poly_canonical(p).items(), key=lambda kv: term_sort_key(kv[0])))


def poly_to_json(p):
    terms = []
    for key in sorted(p, key=term_sort_key):
        s_deg, vars_ = key
        terms.append(
            {
                "coeff": str(p[key]),
                "s_deg": s_deg,
                "vars": [{"k": len(J), "J": list(J)} for J in vars_],
            }
        )
    return terms


def poly_from_json(data):
    out = {}
    for term in data:
        coeff = int(term["coeff"])
        s_deg = term["s_deg"]
        if s_deg is not None:
            s_deg = int(s_deg)
        vars_ = []
        for v in term["vars"]:
            J = tuple(int(x) for x in v["J"])
            if len(J) != int(v["k"]):
                raise ValueError("variable level does not match its index length")
            vars_.append(J)
        key = (s_deg, _vars_key(vars_))
        out[key] = out.get(key, 0) + coeff
    return {k: c for k, c in out.items() if c}
