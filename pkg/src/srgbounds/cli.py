"""Command-line front door.

Exit codes: 0 success, 1 invariant violation, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog
from .cab import (
    cab,
    full_report,
    hoffman_clique_bound,
    trivial_bound,
)
from .graphio import load_graph
from .graphs import (
    heawood_line_distance3,
    is_edge_regular,
    is_strongly_regular,
    max_clique,
    paley,
)
from .quadext import QuadExt
from .srg import EdgeRegularParams, FeasibilityLevel, SrgParams, parse_params_string

_LEVELS = {
    "counting": FeasibilityLevel.COUNTING,
    "integrality": FeasibilityLevel.INTEGRALITY,
    "krein": FeasibilityLevel.KREIN,
    "absolute": FeasibilityLevel.ABSOLUTE_BOUND,
}


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="srgbounds",
        description="Exact clique-number bounds for strongly regular graph parameters",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bounds", help="bounds for one parameter tuple")
    b.add_argument("params", nargs="+",
                   help='parameter tuple "v k lambda [mu]" (commas also accepted)')
    b.add_argument("--json", action="store_true")

    s = sub.add_parser("scan", help="scan feasible tuples and compare bounds")
    s.add_argument("--max-v", type=int, required=True)
    s.add_argument("--level", choices=sorted(_LEVELS), default="absolute")
    s.add_argument("--filter", choices=["gap", "thm", "thm51"], default=None)
    s.add_argument("--pairs", action="store_true",
                   help="collapse complementary pairs to the member with k < v/2")
    s.add_argument("--format", choices=["table", "csv", "json"], default="table")
    s.add_argument("--out", default=None)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--stats", action="store_true",
                   help="print measured theorem-coverage fractions to stderr")

    vi = sub.add_parser("verify-identities", help="re-prove the polynomial identities")
    vi.add_argument("--json", action="store_true")

    pl = sub.add_parser("paley", help="construct a Paley graph")
    pl.add_argument("p", type=int)
    pl.add_argument("--clique", action="store_true")

    mc = sub.add_parser("maxclique", help="maximum clique of a graph file")
    mc.add_argument("file")

    sub.add_parser("delta3", help="report on the distance-3 line-graph fixture")

    cj = sub.add_parser("conjecture", help="scan for conjecture counterexamples")
    cj.add_argument("--max-v", type=int, required=True)

    return ap


def _cmd_bounds(args) -> int:
    p = parse_params_string(" ".join(args.params))
    if isinstance(p, SrgParams):
        rep = full_report(p)
        if args.json:
            print(json.dumps(rep.to_json_dict()))
        else:
            print(f"parameters      ({p.v},{p.k},{p.lam},{p.mu})  type {rep.type_tag.value}")
            print(f"cab             {rep.cab}  (witness C({rep.cab_witness.b},"
                  f"{rep.cab_witness.c_plus_1}) = {rep.cab_witness.value})")
            dstr = f"{rep.delsarte}" + ("  (degenerate: disconnected)" if rep.delsarte_degenerate else "")
            print(f"delsarte        {dstr}")
            print(f"trivial         {rep.trivial}")
            if rep.hoffman_complement is not None:
                print(f"hoffman (comp)  {rep.hoffman_complement}")
            print(f"thm21/thm22     {rep.thm21}/{rep.thm22}")
            if rep.improved is not None:
                print(f"improved bound  {rep.improved}")
            print(f"thm51 predicate {rep.thm51}")
    else:
        p.validate()
        c, wit = cab(p)
        if args.json:
            print(json.dumps({
                "v": p.v, "k": p.k, "lambda": p.lam, "mu": None,
                "cab": c, "cab_witness_b": wit.b, "cab_witness_y": wit.c_plus_1,
                "delsarte": None, "trivial": trivial_bound(p),
                "thm21": False, "thm22": False, "improved": None,
            }))
        else:
            print(f"parameters  ({p.v},{p.k},{p.lam})  edge-regular")
            print(f"cab         {c}  (witness C({wit.b},{wit.c_plus_1}) = {wit.value})")
            print(f"trivial     {trivial_bound(p)}")
    return 0


def _cmd_scan(args) -> int:
    cfg = catalog.ScanConfig(
        v_max=args.max_v,
        level=_LEVELS[args.level],
        jobs=args.jobs,
        filter=args.filter,
        pairs=args.pairs,
        fmt=args.format,
    )
    records, stats = catalog.scan_compare(cfg)
    if any(r.gap < 0 for r in records):
        print("invariant violation: record with negative gap", file=sys.stderr)
        return 1
    text = catalog.emit(records, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.stats:
        print(
            f"type-I tuples: {stats.type1_total}, improvement predicate: "
            f"{stats.type1_thm21} ({stats.thm21_fraction:.4f})",
            file=sys.stderr,
        )
        print(
            f"type-II tuples (conn+coconn): {stats.type2_total}, improvement "
            f"predicate: {stats.type2_thm22} ({stats.thm22_fraction:.4f})",
            file=sys.stderr,
        )
        print(
            f"type-II complementary pairs: {stats.pairs_type2_total}, covered: "
            f"{stats.pairs_type2_thm} ({stats.pair_fraction:.4f})",
            file=sys.stderr,
        )
    return 0


def _cmd_verify_identities(args) -> int:
    from . import identities

    results = []
    ok_all = True
    for case in identities.CASES:
        ok = identities.verify_identity(case)
        degree = identities.cleared_degree(case)
        ok_all &= ok
        results.append(
            {
                "name": case.name,
                "parameterization": case.parameterization,
                "degree": degree,
                "status": "PASS" if ok else "FAIL",
            }
        )
    if args.json:
        print(json.dumps(results, indent=2))
    else:
        for res in results:
            print(
                f"{res['name']:<36} {res['parameterization']:<12} "
                f"deg {res['degree']:>2}  {res['status']}"
            )
    return 0 if ok_all else 1


def _cmd_paley(args) -> int:
    g = paley(args.p)
    srg = is_strongly_regular(g)
    print(f"paley({args.p}): {g.n} vertices, {g.edge_count()} edges")
    if srg is not None:
        print(f"strongly regular ({srg.v},{srg.k},{srg.lam},{srg.mu})")
    else:
        print("not strongly regular")
        return 1
    if args.clique:
        res = max_clique(g)
        print(f"clique number {res.size}  witness {list(res.witness)}")
    return 0


def _cmd_maxclique(args) -> int:
    with open(args.file) as fh:
        g = load_graph(fh.read())
    res = max_clique(g)
    print(f"n={g.n} m={g.edge_count()} omega={res.size}")
    print("witness " + " ".join(map(str, res.witness)))
    return 0


def _cmd_delta3(args) -> int:
    g = heawood_line_distance3()
    er = is_edge_regular(g)
    if er is None:
        print("invariant violation: fixture is not edge-regular", file=sys.stderr)
        return 1
    c, wit = cab(er)
    omega = max_clique(g).size
    # fixture eigenvalues: least eigenvalue -sqrt(8); complement -1-sqrt(8)
    s = QuadExt.make(0, -1, 8)
    delsarte = (1 - QuadExt.make(er.k) / s).floor()
    s_bar = QuadExt.make(-1, -1, 8)
    hoffman = hoffman_clique_bound(er.v, er.v - er.k - 1, s_bar)
    srg = is_strongly_regular(g)
    print(f"distance-3 graph of the Heawood line graph: ({er.v},{er.k},{er.lam})")
    print(f"strongly regular: {'yes' if srg else 'no'}")
    print(f"cab       {c}  (witness C({wit.b},{wit.c_plus_1}) = {wit.value})")
    print(f"delsarte  {delsarte}  (least eigenvalue -sqrt(8))")
    print(f"hoffman   {hoffman}  (complement least eigenvalue -1-sqrt(8))")
    print(f"omega     {omega}")
    return 0


def _cmd_conjecture(args) -> int:
    cfg = catalog.ScanConfig(v_max=args.max_v)
    hits = catalog.conjecture_scan(cfg)
    if not hits:
        print(f"no counterexamples up to v = {args.max_v}")
    else:
        print(f"{len(hits)} counterexample candidate(s):")
        for p in hits:
            print(f"  ({p.v},{p.k},{p.lam},{p.mu})")
    return 0


def main(argv: list[str] | None = None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    handlers = {
        "bounds": _cmd_bounds,
        "scan": _cmd_scan,
        "verify-identities": _cmd_verify_identities,
        "paley": _cmd_paley,
        "maxclique": _cmd_maxclique,
        "delta3": _cmd_delta3,
        "conjecture": _cmd_conjecture,
    }
    try:
        return handlers[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
