"""Command-line interface.

Verbs: roots, dyck, polytope, tableaux, to-tableau, to-monomial, relations,
straighten, verify.  Output is plain text by default and JSON with
``--format json``; all output is deterministic for fixed flags and seed.
Exit codes: 0 success, 1 domain error or failed verification (machine-readable
JSON on stderr), 2 usage error.

The environment variable SYMPBW_WORKERS (default 1) sets the process count
used to sample verification points in parallel; reports are merged in seed
order either way.
"""

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .fflv import dyck_paths, fflv_inequalities, lattice_points, multiexp_from_json, multiexp_to_json
from .liealg import bar, positive_roots
from .correspondence import monomial_to_tableau, tableau_to_monomial
from .relations import generate_ideal, relation_text
from .pluecker import poly_to_json
from .straighten import straighten
from .tableaux import entry_str, enumerate_tableaux, tableau_from_json, tableau_pretty, tableau_to_json
from .verify import (
    check_counts,
    check_isotropy_projection,
    check_roundtrip,
    check_s_bridge,
    check_vanishing,
    sample_classical_flag,
    sample_degenerate_point,
)


def _parse_lambda(value, n):
    parts = value.split(",")
    if len(parts) != n:
        raise ValueError(f"--lambda needs {n} comma-separated entries, got {len(parts)}")
    lam = tuple(int(x) for x in parts)
    if any(x < 0 for x in lam):
        raise ValueError("--lambda entries must be nonnegative")
    return lam


def _load_json_arg(value):
    if value.startswith("@"):
        with open(value[1:], encoding="utf-8") as fh:
            return json.load(fh)
    return json.loads(value)


def _root_index_str(n, alpha, ascii_only):
    """The second index of a root as a letter: j, or j-bar for alpha_{i,jbar}."""
    return entry_str(n, bar(alpha.j, n) if alpha.barred else alpha.j, ascii_only)


def _root_str(n, alpha, ascii_only):
    return f"alpha_{{{alpha.i},{_root_index_str(n, alpha, ascii_only)}}}"


def _monomial_str(n, p, ascii_only):
    data = multiexp_to_json(n, p)
    if not data:
        return "1"
    pieces = []
    for item in data:
        root = item["root"]
        col = bar(root["j"], n) if root["barred"] else root["j"]
        body = f"f_{{{root['i']},{entry_str(n, col, ascii_only)}}}"
        pieces.append(body + (f"^{item['exp']}" if item["exp"] > 1 else ""))
    return " ".join(pieces)


def _cmd_roots(args):
    roots = positive_roots(args.n)
    if args.format == "json":
        return json.dumps([a.to_dict() for a in roots], indent=2), 0
    return "\n".join(_root_str(args.n, a, args.ascii) for a in roots), 0


def _cmd_dyck(args):
    paths = dyck_paths(args.n)
    if args.format == "json":
        return json.dumps([[a.to_dict() for a in p] for p in paths], indent=2), 0
    lines = [" -> ".join(_root_str(args.n, a, args.ascii) for a in p) for p in paths]
    lines.append(f"{len(paths)} paths")
    return "\n".join(lines), 0


def _cmd_polytope(args):
    lam = _parse_lambda(args.lam, args.n)
    ineqs = fflv_inequalities(args.n, lam)
    count = len(lattice_points(args.n, lam))
    if args.format == "json":
        out = {"inequalities": [q.to_dict() for q in ineqs], "lattice_point_count": count}
        return json.dumps(out, indent=2), 0
    lines = []
    for q in ineqs:
        lhs = " + ".join(
            f"p_{{{a.i},{_root_index_str(args.n, a, args.ascii)}}}" for a in q.support
        )
        lines.append(f"{lhs} <= {q.rhs}")
    lines.append(f"lattice points: {count}")
    return "\n".join(lines), 0


def _cmd_tableaux(args):
    lam = _parse_lambda(args.lam, args.n)
    tabs = enumerate_tableaux(args.n, lam)
    if args.format == "json":
        out = {"count": len(tabs), "tableaux": [tableau_to_json(args.n, t) for t in tabs]}
        return json.dumps(out, indent=2), 0
    blocks = [tableau_pretty(args.n, t, args.ascii) for t in tabs]
    return f"{len(tabs)} tableaux\n\n" + "\n\n".join(blocks), 0


def _cmd_to_tableau(args):
    lam = _parse_lambda(args.lam, args.n)
    p = multiexp_from_json(args.n, _load_json_arg(args.monomial))
    tab = monomial_to_tableau(args.n, lam, p)
    if args.format == "json":
        return json.dumps(tableau_to_json(args.n, tab), indent=2), 0
    return tableau_pretty(args.n, tab, args.ascii), 0


def _cmd_to_monomial(args):
    tab = tableau_from_json(args.n, _load_json_arg(args.tableau))
    lam, p = tableau_to_monomial(args.n, tab)
    if args.format == "json":
        out = {"lambda": list(lam), "monomial": multiexp_to_json(args.n, p)}
        return json.dumps(out, indent=2), 0
    return f"lambda = {','.join(map(str, lam))}\n{_monomial_str(args.n, p, args.ascii)}", 0


def _cmd_relations(args):
    rels = generate_ideal(args.n, args.kind)
    if args.format == "json":
        out = [
            {"kind": r.kind, "label": r.label, "poly": poly_to_json(dict(r.poly))}
            for r in rels
        ]
        return json.dumps(out, indent=2), 0
    lines = [f"{r.label}: {relation_text(args.n, r, args.ascii)}" for r in rels]
    lines.append(f"{len(rels)} relations")
    return "\n".join(lines), 0


def _cmd_straighten(args):
    monomial = tuple(
        tuple(int(x) for x in col.split(",")) for col in args.columns.split(";")
    )
    trace_lines = []
    trace = trace_lines.append if args.trace else None
    result = straighten(args.n, monomial, args.ring, trace=trace)
    items = sorted(result.items())
    if args.trace:
        for line in trace_lines:
            print(line, file=sys.stderr)
    if args.format == "json":
        out = {
            "input": [list(col) for col in monomial],
            "ring": args.ring,
            "result": [
                {"coefficient": c, "tableau": tableau_to_json(args.n, tab)}
                for tab, c in items
            ],
        }
        return json.dumps(out, indent=2), 0
    if not items:
        return "0", 0
    lines = []
    for tab, c in items:
        cols = " | ".join(
            " ".join(entry_str(args.n, e, args.ascii) for e in col) for col in tab
        )
        lines.append(f"{c:+d}  [{cols}]")
    return "\n".join(lines), 0


def _sample_point(kind, n, seed):
    if kind == "classical":
        return sample_classical_flag(n, seed)
    return sample_degenerate_point(n, seed)


def _sample_points(kind, n, seeds):
    workers = int(os.environ.get("SYMPBW_WORKERS", "1"))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_sample_point, [kind] * len(seeds), [n] * len(seeds), seeds))
    return [_sample_point(kind, n, seed) for seed in seeds]


def _cmd_verify(args):
    n = args.n
    seeds = list(range(args.seed, args.seed + args.seeds))
    if args.suite in ("counts", "roundtrip"):
        if args.lam is None:
            raise ValueError(f"--lambda is required for the {args.suite} suite")
        lam = _parse_lambda(args.lam, n)
        report = check_counts(n, lam) if args.suite == "counts" else check_roundtrip(n, lam)
    elif args.suite == "classical-ideal":
        points = _sample_points("classical", n, seeds)
        report = check_vanishing(generate_ideal(n, "classical"), points)
        report["seeds"] = seeds
    elif args.suite == "degenerate-ideal":
        points = _sample_points("degenerate", n, seeds)
        report = check_vanishing(generate_ideal(n, "degenerate"), points)
        for point in points:
            for k in range(1, n + 1):
                if not check_isotropy_projection(point, n, k):
                    report["failures"].append(
                        {"seed": point.seed, "level": k, "error": "isotropy/projection failed"}
                    )
        report["ok"] = not report["failures"]
        report["seeds"] = seeds
    else:  # s-family
        points = _sample_points("classical", n, seeds)
        report = check_s_bridge(generate_ideal(n, "s-family"), points)
        report["seeds"] = seeds
    report["n"] = n
    code = 0 if report["ok"] else 1
    if args.report == "json" or args.format == "json":
        return json.dumps(report, indent=2), code
    status = "PASS" if report["ok"] else "FAIL"
    lines = [f"{status} suite={args.suite} n={n} checked={report['checked']}"]
    for failure in report["failures"]:
        lines.append(f"  {failure}")
    return "\n".join(lines), code


def build_parser():
    parser = argparse.ArgumentParser(
        prog="sympbw",
        description="Symplectic PBW tableaux, degenerate flag varieties, and their relations.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, lam=False, lam_required=False):
        p.add_argument("--n", type=int, required=True, help="rank")
        if lam:
            p.add_argument(
                "--lambda", dest="lam", required=lam_required,
                help="weight as comma-separated fundamental multiplicities m_1,...,m_n",
            )
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", help="write output to this file instead of stdout")
        p.add_argument("--ascii", action="store_true", help="render barred entries as i'")

    common(sub.add_parser("roots", help="positive roots in triangle order"))
    common(sub.add_parser("dyck", help="symplectic Dyck paths"))
    common(sub.add_parser("polytope", help="FFLV polytope inequalities and point count"),
           lam=True, lam_required=True)
    common(sub.add_parser("tableaux", help="symplectic PBW semistandard tableaux"),
           lam=True, lam_required=True)

    p = sub.add_parser("to-tableau", help="monomial to tableau")
    common(p, lam=True, lam_required=True)
    p.add_argument("--monomial", required=True,
                   help="multi-exponent as JSON (or @file)")

    p = sub.add_parser("to-monomial", help="tableau to monomial")
    common(p)
    p.add_argument("--tableau", required=True, help="tableau as JSON (or @file)")

    p = sub.add_parser("relations", help="generators of the defining ideal")
    common(p)
    p.add_argument("--kind", choices=("classical", "degenerate", "s-family"),
                   default="classical")

    p = sub.add_parser("straighten", help="rewrite a Pluecker monomial in the tableau basis")
    common(p)
    p.add_argument("--ring", choices=("classical", "degenerate"), required=True)
    p.add_argument("--columns", required=True,
                   help="monomial columns, e.g. '1,4;3' for X_{1,4} X_{3}")
    p.add_argument("--trace", action="store_true", help="print rewriting steps to stderr")

    p = sub.add_parser("verify", help="run a verification suite")
    common(p, lam=True)
    p.add_argument("--suite", required=True,
                   choices=("counts", "roundtrip", "classical-ideal", "degenerate-ideal", "s-family"))
    p.add_argument("--seeds", type=int, default=20, help="number of sampled points")
    p.add_argument("--report", choices=("text", "json"), default="text")

    return parser


_COMMANDS = {
    "roots": _cmd_roots,
    "dyck": _cmd_dyck,
    "polytope": _cmd_polytope,
    "tableaux": _cmd_tableaux,
    "to-tableau": _cmd_to_tableau,
    "to-monomial": _cmd_to_monomial,
    "relations": _cmd_relations,
    "straighten": _cmd_straighten,
    "verify": _cmd_verify,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        output, code = _COMMANDS[args.verb](args)
    except (ValueError, KeyError, json.JSONDecodeError, OSError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(output + "\n")
    else:
        print(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
