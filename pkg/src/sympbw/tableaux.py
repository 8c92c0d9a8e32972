"""Symplectic PBW tableaux.

A tableau of shape lambda is stored column-major: a tuple of columns, each
column a tuple of entries from the ordered alphabet 1 < ... < n < nbar < ...
< 1bar encoded as 1..2n (bar(i) = 2n + 1 - i).  Column lengths are the
conjugate partition and must be weakly decreasing.

Highest weights are passed around as m-vectors (m_1, ..., m_n) with
lambda_i = m_i + ... + m_n.
"""

from functools import lru_cache
import itertools

from .liealg import bar


def partition_from_m(m):
    """Partition (lambda_1 >= ... >= lambda_n) for the weight sum_k m_k omega_k."""
    return tuple(sum(m[i:]) for i in range(len(m)))


def column_lengths_from_m(m):
    """Lengths mu_1 >= mu_2 >= ... of the columns of the shape of m."""
    n = len(m)
    lam = partition_from_m(m)
    return tuple(sum(1 for i in range(n) if lam[i] >= c + 1) for c in range(lam[0] if lam else 0))


def highest_weight_tableau(m):
    """The tableau t_lambda with every column filled 1, 2, ..., mu_c."""
    return tuple(tuple(range(1, length + 1)) for length in column_lengths_from_m(m))


def validate_tableau(n, tab):
    cols = tuple(tuple(col) for col in tab)
    lengths = [len(c) for c in cols]
    if any(l == 0 for l in lengths) or any(
        lengths[c] < lengths[c + 1] for c in range(len(cols) - 1)
    ):
        raise ValueError("column lengths must be positive and weakly decreasing")
    if lengths and lengths[0] > n:
        raise ValueError(f"columns longer than n={n}")
    for col in cols:
        for e in col:
            if not (1 <= e <= 2 * n):
                raise ValueError(f"entry {e} outside alphabet 1..{2 * n}")
    return cols


def is_symplectic_column(n, col):
    """Single-column conditions of a symplectic PBW tableau.

    With mu the column length:
      (i)   an entry <= mu sits at its own row: T_i <= mu  =>  T_i = i;
      (ii)  moved entries decrease downwards: T_{i1} != i1, i1 < i2  =>  T_{i1} > T_{i2};
      (iii) if T_i = i then ibar may appear only above row i.
    """
    mu = len(col)
    for i1 in range(mu):
        e = col[i1]
        if e <= mu and e != i1 + 1:
            return False
        if e != i1 + 1:
            for i2 in range(i1 + 1, mu):
                if not e > col[i2]:
                    return False
    for i in range(mu):
        if col[i] == i + 1:
            for i2 in range(i, mu):
                if col[i2] == bar(i + 1, n):
                    return False
    return True


def _semistandard_step(prev_col, col):
    """Column-pair condition: every entry of col is dominated at or below its row in prev_col."""
    for i in range(len(col)):
        if not any(prev_col[i2] >= col[i] for i2 in range(i, len(prev_col))):
            return False
    return True


def is_symplectic_pbw(n, tab):
    """True iff every column separately satisfies the symplectic column conditions."""
    cols = validate_tableau(n, tab)
    return all(is_symplectic_column(n, col) for col in cols)


def is_symplectic_pbw_semistandard(n, tab):
    """Symplectic PBW columns plus the semistandard condition between neighbours."""
    cols = validate_tableau(n, tab)
    if not all(is_symplectic_column(n, col) for col in cols):
        return False
    return all(_semistandard_step(cols[c], cols[c + 1]) for c in range(len(cols) - 1))


def is_pbw_semistandard_typeA(n2, tab):
    """PBW semistandardness for gl(n2) tableaux over the alphabet 1..n2.

    Per column: entries <= mu sit at their own row, and moved entries strictly
    decrease downwards; between columns: the same domination condition as in
    the symplectic case.  No symplectic pair condition.
    """
    cols = tuple(tuple(col) for col in tab)
    lengths = [len(c) for c in cols]
    if any(l == 0 for l in lengths) or any(
        lengths[c] < lengths[c + 1] for c in range(len(cols) - 1)
    ):
        raise ValueError("column lengths must be positive and weakly decreasing")
    for col in cols:
        mu = len(col)
        for i1 in range(mu):
            e = col[i1]
            if not (1 <= e <= n2):
                raise ValueError(f"entry {e} outside alphabet 1..{n2}")
            if e <= mu and e != i1 + 1:
                return False
            if e != i1 + 1:
                for i2 in range(i1 + 1, mu):
                    if not e > col[i2]:
                        return False
    return all(_semistandard_step(cols[c], cols[c + 1]) for c in range(len(cols) - 1))


@lru_cache(maxsize=None)
def _symplectic_columns(n, length):
    """All symplectic columns of the given length, in lexicographic order."""
    return tuple(
        col
        for col in itertools.product(range(1, 2 * n + 1), repeat=length)
        if is_symplectic_column(n, col)
    )


def enumerate_tableaux(n, m):
    """All symplectic PBW semistandard tableaux of shape m, column-major lexicographic."""
    lengths = column_lengths_from_m(m)
    if not lengths:
        return [()]
    out = []

    def grow(cols):
        c = len(cols)
        if c == len(lengths):
            out.append(tuple(cols))
            return
        for col in _symplectic_columns(n, lengths[c]):
            if c == 0 or _semistandard_step(cols[-1], col):
                grow(cols + [col])

    grow([])
    return sorted(out)


def tableau_weight(n, tab):
    """Weight of a tableau: sum over entries of eps_e (unbarred) or -eps_{bar(e)} (barred)."""
    wt = [0] * n
    for col in tab:
        for e in col:
            if e <= n:
                wt[e - 1] += 1
            else:
                wt[2 * n - e] -= 1
    return tuple(wt)


def tableau_to_json(n, tab):
    cols = validate_tableau(n, tab)
    lengths = [len(c) for c in cols]
    shape = [sum(1 for l in lengths if l >= i + 1) for i in range(lengths[0])] if cols else []
    return {"shape": shape, "columns": [list(c) for c in cols]}


def tableau_from_json(n, data):
    cols = tuple(tuple(int(e) for e in col) for col in data["columns"])
    tab = validate_tableau(n, cols)
    lengths = [len(c) for c in tab]
    shape = [sum(1 for l in lengths if l >= i + 1) for i in range(lengths[0])] if tab else []
    if "shape" in data and [int(x) for x in data["shape"]] != shape:
        raise ValueError("shape does not match columns")
    return tab


def entry_str(n, e, ascii_only=False):
    """Render an alphabet letter: barred entries as i-overline, or i' in ascii mode."""
    if e <= n:
        return str(e)
    base = str(2 * n + 1 - e)
    if ascii_only:
        return base + "'"
    return "".join(ch + "̅" for ch in base)


def tableau_pretty(n, tab, ascii_only=False):
    """Row-by-row text rendering of a tableau."""
    cols = validate_tableau(n, tab)
    if not cols:
        return "(empty tableau)"

    def disp_width(e):
        # combining overlines take no terminal column; the ascii prime does
        return len(str(e)) if e <= n else len(str(2 * n + 1 - e)) + (1 if ascii_only else 0)

    width = max(disp_width(e) for col in cols for e in col)
    lines = []
    for i in range(len(cols[0])):
        cells = [
            entry_str(n, col[i], ascii_only) + " " * (width - disp_width(col[i]))
            for col in cols
            if len(col) > i
        ]
        lines.append(" ".join(cells).rstrip())
    return "\n".join(lines)
