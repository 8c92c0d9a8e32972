"""Symplectic Dyck paths, the FFLV polytope, and its lattice points.

A multi-exponent is a dict mapping Root -> nonnegative int (zero entries may
be omitted); it collects the exponents of a PBW monomial prod f_alpha^{p_alpha}.
The polytope P(lambda) is cut out by one inequality per symplectic Dyck path:
the exponents along the path sum to at most m_i + ... + m_j (path from row i
to an unbarred diagonal end alpha_{j,j}) or m_i + ... + m_n (barred diagonal
end alpha_{j,jbar}).
"""

from dataclasses import dataclass

from .liealg import Root, jpos, positive_roots, root_from_dict, root_key


@dataclass(frozen=True)
class FFLVInequality:
    support: tuple  # tuple of Root along one Dyck path
    rhs: int

    def to_dict(self):
        return {"support": [a.to_dict() for a in self.support], "rhs": self.rhs}


def _steps(alpha, n):
    """Grid neighbours reachable from alpha by one right / down move."""
    i, j = alpha.i, alpha.j
    out = []
    if not alpha.barred:
        if j < n:
            out.append(Root(i, j + 1, False))
        elif i <= n - 1:
            out.append(Root(i, n - 1, True))
    elif j - 1 >= i:
        out.append(Root(i, j - 1, True))
    if i + 1 <= j:
        out.append(Root(i + 1, j, alpha.barred))
    return out


def dyck_paths(n):
    """All symplectic Dyck paths, lexicographically ordered.

    A path starts at a simple root alpha_{i,i}, moves right/down through the
    root triangle, and ends at a diagonal root (alpha_{j,j} or alpha_{j,jbar});
    every diagonal prefix is itself a path.
    """
    paths = []

    def extend(path):
        last = path[-1]
        if last.i == last.j:
            paths.append(tuple(path))
        for nxt in _steps(last, n):
            extend(path + [nxt])

    for i in range(1, n + 1):
        extend([Root(i, i, False)])
    return sorted(paths, key=lambda p: tuple(root_key(a, n) for a in p))


def fflv_inequalities(n, m):
    """Defining inequalities of P(lambda) for the m-weight vector, duplicates removed."""
    if len(m) != n or any(x < 0 for x in m):
        raise ValueError(f"m must be a length-{n} vector of nonnegative integers")
    seen = set()
    out = []
    for path in dyck_paths(n):
        i, end = path[0].i, path[-1]
        rhs = sum(m[i - 1 : end.j]) if not end.barred else sum(m[i - 1 :])
        key = (path, rhs)
        if key not in seen:
            seen.add(key)
            out.append(FFLVInequality(path, rhs))
    return out


def contains(n, m, p):
    """True iff the multi-exponent p lies in P(lambda)."""
    for alpha, exp in p.items():
        if exp < 0:
            return False
        if not (1 <= alpha.i <= alpha.j <= n):
            raise ValueError(f"root {alpha} out of range for n={n}")
    for ineq in fflv_inequalities(n, m):
        if sum(p.get(alpha, 0) for alpha in ineq.support) > ineq.rhs:
            return False
    return True


def lattice_points(n, m):
    """All integral points of P(lambda), lexicographic in the root reading order."""
    roots = positive_roots(n)
    ineqs = fflv_inequalities(n, m)
    # positions of each root inside each inequality's support
    ineqs_at = [[] for _ in roots]
    totals = [0] * len(ineqs)
    for k, ineq in enumerate(ineqs):
        for alpha in ineq.support:
            ineqs_at[roots.index(alpha)].append(k)

    out = []
    exps = [0] * len(roots)

    def assign(pos):
        if pos == len(roots):
            out.append({alpha: e for alpha, e in zip(roots, exps) if e})
            return
        room = min(ineqs[k].rhs - totals[k] for k in ineqs_at[pos])
        for e in range(room + 1):
            exps[pos] = e
            for k in ineqs_at[pos]:
                totals[k] += e
            assign(pos + 1)
            for k in ineqs_at[pos]:
                totals[k] -= e
        exps[pos] = 0

    assign(0)
    return out


def multiexp_to_json(n, p):
    items = sorted(((root_key(a, n), a, e) for a, e in p.items() if e), key=lambda t: t[0])
    return [{"root": a.to_dict(), "exp": e} for _, a, e in items]


def multiexp_from_json(n, data):
    p = {}
    for item in data:
        alpha = root_from_dict(n, item["root"])
        exp = int(item["exp"])
        if exp < 0:
            raise ValueError("exponents must be nonnegative")
        if exp:
            p[alpha] = p.get(alpha, 0) + exp
    return p
