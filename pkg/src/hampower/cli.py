"""Command-line entry point.

Subcommands: braid, gen, density, threshold-table, normalize, verify,
search, sweep.  Exit codes: 0 success / all checks passed, 1 verification
counterexample, 2 usage error, 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import braids, density, graphs, hamsearch, montecarlo, partitioned_paths, thresholds

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _emit_graph(g, args):
    text = graphs.to_dot(g) if getattr(args, "dot", False) else graphs.to_edge_list(g)
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="ascii") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _cmd_braid(args) -> int:
    if args.s == 1:
        g = braids.braid(args.ell, args.r, args.t)
    else:
        g = braids.s_braids(args.ell, args.r, args.t, args.s)
    _emit_graph(g, args)
    return EXIT_OK


def _cmd_gen(args) -> int:
    if args.kind == "complete":
        g = graphs.complete_graph(args.n)
    elif args.kind == "path-power":
        g = graphs.path_power(args.v, args.m)
    elif args.kind == "cycle-power":
        g = graphs.cycle_power(args.v, args.m)
    elif args.kind == "patched-bipartite":
        g = graphs.patched_bipartite(args.n, Fraction(args.eps))
    elif args.kind == "gnp":
        g = graphs.sample_gnp(args.n, args.p, args.seed)
    else:  # pragma: no cover - argparse restricts choices
        raise AssertionError(args.kind)
    _emit_graph(g, args)
    return EXIT_OK


def _cmd_density(args) -> int:
    g = graphs.load_edge_list(args.input)
    if args.balanced:
        ok, witness = density.is_strictly_balanced(g, cap=args.cap)
        payload = {"balanced": ok, "witness": None if witness is None else list(witness)}
        print(json.dumps(payload))
        return EXIT_OK if ok else EXIT_COUNTEREXAMPLE
    if args.phi:
        n, p = int(args.phi[0]), float(args.phi[1])
        rep = density.first_moment_profile(g, n, p, cap=args.cap)
        payload = {
            "log_whole": rep.log_whole,
            "log_min": rep.log_min,
            "min_vertices": list(rep.min_vertices),
            "min_profile": list(rep.min_profile),
        }
        print(json.dumps(payload))
        return EXIT_OK
    if args.opt:
        rep = density.max_density_opt(g)
    else:
        rep = density.max_density_brute(g, cap=args.cap)
    print(json.dumps(rep.to_json_dict()))
    return EXIT_OK


def _frac(x) -> str:
    return "n/a" if x is None else str(x)


def _tables_payload(m_max: int) -> dict:
    report = thresholds.build_tables(m_max)
    records = [thresholds.threshold_exponent(m) for m in range(2, m_max + 1)]
    return {
        "exponents": [
            {
                "m": r.m,
                "ell": r.ell,
                "density_at_ell": str(r.density_at_ell),
                "alpha": str(r.alpha),
                "exponent_of_n": str(-1 / r.alpha),
                "regime": r.regime,
            }
            for r in records
        ],
        "cells": {
            "alpha": [
                {"name": c.name, "computed": _frac(c.computed), "expected": _frac(c.expected), "match": c.match}
                for c in report.alpha_rows
            ],
            "optimal": [
                {"name": c.name, "computed": _frac(c.computed), "expected": _frac(c.expected), "match": c.match}
                for rows in report.optimal_rows.values()
                for c in rows
            ],
            "summary": [
                {
                    "name": c.name,
                    "computed": _frac(c.computed),
                    "expected": _frac(c.expected),
                    "match": c.match,
                    "known_inconsistent": c.known_inconsistent,
                }
                for rows in report.summary_rows.values()
                for c in rows
            ],
        },
        "discrepancies": report.discrepancies,
        "ok": report.ok,
    }


def _cmd_threshold_table(args) -> int:
    payload = _tables_payload(args.m_max)
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        print("m,ell,density_at_ell,alpha,exponent_of_n,regime")
        for row in payload["exponents"]:
            print(
                f"{row['m']},{row['ell']},{row['density_at_ell']},"
                f"{row['alpha']},{row['exponent_of_n']},{row['regime']}"
            )
    else:
        print("| m | ell | density at ell | alpha | exponent of n | regime |")
        print("|---|-----|----------------|-------|---------------|--------|")
        for row in payload["exponents"]:
            print(
                f"| {row['m']} | {row['ell']} | {row['density_at_ell']} | "
                f"{row['alpha']} | {row['exponent_of_n']} | {row['regime']} |"
            )
        for note in payload["discrepancies"]:
            print(f"NOTE: {note}")
    return EXIT_OK if payload["ok"] else EXIT_COUNTEREXAMPLE


def _cmd_normalize(args) -> int:
    path = partitioned_paths.PartitionedPath(args.m, args.labels)
    result = partitioned_paths.normalize(path)
    payload = {
        "sizes": list(result.segments.sizes),
        "first_side": result.segments.first_side,
        "labels": result.segments.to_labels(),
        "original_edges": result.original_edges,
        "normalized_edges": result.normalized_edges,
        "slack": result.slack,
        "steps": result.steps,
    }
    if args.transcript:
        payload["transcript"] = [
            {"op": s.op, "index": s.index, "before": list(s.before), "after": list(s.after)}
            for s in result.transcript
        ]
    print(json.dumps(payload))
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify targets: each returns (ok, detail lines, counterexample or None)


def _verify_tables(args):
    report = thresholds.build_tables()
    lines = [f"table cells checked; discrepancies: {len(report.discrepancies)}"]
    lines += [f"  {d}" for d in report.discrepancies]
    flagged = [d for d in report.discrepancies if "known inconsistent" in d]
    ok = report.ok and len(flagged) == len(report.discrepancies) and len(flagged) == 2
    cex = None if ok else "unexpected table mismatch"
    return ok, lines, cex


def _verify_regime(args):
    rows = thresholds.braid_regime_report(2, args.m_max)
    failing = [r.m for r in rows if not r.holds]
    ok = all(r.holds for r in rows if r.m == 7 or r.m >= 10) and all(m < 10 for m in failing)
    lines = [
        f"m={r.m}: ell={r.ell}, r={r.r}, r(r+1)={r.r_capacity}, "
        f"{'holds' if r.holds else 'fails'}"
        for r in rows
        if r.m <= 14 or not r.holds
    ]
    lines.append(f"failing m: {failing}")
    cex = None if ok else f"regime inequality failed at m in {failing}"
    return ok, lines, cex


def _verify_edge_floor(args):
    rows = partitioned_paths.check_edge_floor_exhaustive(args.m, args.lmax)
    bad = [r for r in rows if not r.ok]
    lines = [
        f"L={r.L}: valid={r.num_valid}, min_edges={r.min_edges}, floor={r.floor}, "
        f"{'ok' if r.ok else 'VIOLATED'} (minimizer {r.minimizer})"
        for r in rows
    ]
    cex = None if not bad else f"floor violated at L={bad[0].L} by {bad[0].minimizer}"
    return not bad, lines, cex


def _structure_sweep(m: int, lmax: int, clique_size: int, check):
    checked = 0
    for L in range(2, lmax + 1):
        for mask in partitioned_paths.iter_valid_label_masks(L, m):
            p = partitioned_paths.PartitionedPath(m, partitioned_paths.mask_to_labels(mask, L))
            if not partitioned_paths.clique_free(p, clique_size):
                continue
            rep = check(p)
            checked += 1
            if not rep.ok:
                return checked, p.labels
    return checked, None


def _verify_m6(args):
    checked, bad = _structure_sweep(6, args.lmax, 5, partitioned_paths.m6_structure_check)
    lines = [f"checked {checked} clique-free valid labelings up to L={args.lmax}"]
    return bad is None, lines, None if bad is None else f"structure check failed on {bad}"


def _verify_m9(args):
    checked, bad = _structure_sweep(9, args.lmax, 7, partitioned_paths.m9_structure_check)
    lines = [f"checked {checked} clique-free valid labelings up to L={args.lmax}"]
    return bad is None, lines, None if bad is None else f"structure check failed on {bad}"


def _verify_tail_margins(args):
    lines = []
    bad = None
    count = 0
    for r in range(1, args.ell_max):
        for ell in range(r + 2, min(args.ell_max, r * (r + 1) - 1) + 1):
            for t in range(2, args.t_max + 1):
                rep = density.verify_truncation_margins(ell, r, t)
                count += 1
                if not rep.ok and bad is None:
                    bad = f"(ell={ell}, r={r}, t={t})"
    lines.append(f"checked {count} parameter triples, all margins positive" if bad is None
                 else f"checked {count} parameter triples")
    return bad is None, lines, None if bad is None else f"non-positive margin at {bad}"


def _verify_balanced(args):
    lines = []
    bad = None
    for ell in range(2, args.ell_max + 1):
        for r in range(1, ell + 1):
            for t in range(2, args.t_max + 1):
                if t * ell > 15:
                    continue
                g = braids.braid(ell, r, t)
                rep = density.max_density_brute(g)
                if ell < r * (r + 1):
                    expected = density.braid_density(ell, r, t)
                    balanced, witness = density.is_strictly_balanced(g)
                    ok = rep.value == expected and balanced
                else:
                    ok = rep.value == Fraction(ell, 2)
                if not ok and bad is None:
                    bad = f"(ell={ell}, r={r}, t={t}): max density {rep.value}"
                lines.append(
                    f"ell={ell} r={r} t={t}: max={rep.value} "
                    f"{'braid' if ell < r * (r + 1) else 'clique'} regime"
                )
    return bad is None, lines, bad


_VERIFY_TARGETS = {
    "tables": _verify_tables,
    "regime": _verify_regime,
    "edge-floor": _verify_edge_floor,
    "m6": _verify_m6,
    "m9": _verify_m9,
    "tail-margins": _verify_tail_margins,
    "balanced": _verify_balanced,
}


def _cmd_verify(args) -> int:
    targets = list(_VERIFY_TARGETS) if args.target == "all" else [args.target]
    overall_ok = True
    payload = {}
    for name in targets:
        ok, lines, cex = _VERIFY_TARGETS[name](args)
        overall_ok &= ok
        payload[name] = {"ok": ok, "counterexample": cex}
        if args.format == "json":
            continue
        print(f"[{name}] {'PASS' if ok else 'FAIL'}")
        if args.verbose or not ok:
            for ln in lines:
                print(f"  {ln}")
        if cex:
            print(f"  counterexample: {cex}")
    if args.format == "json":
        payload["ok"] = overall_ok
        print(json.dumps(payload))
    else:
        print(f"verify: {'all checks passed' if overall_ok else 'FAILURES above'}")
    return EXIT_OK if overall_ok else EXIT_COUNTEREXAMPLE


def _cmd_search(args) -> int:
    g = graphs.load_edge_list(args.input)
    outcome = hamsearch.contains_ham_power(g, args.m, args.budget)
    print(json.dumps(outcome.to_json_dict()))
    if outcome.verdict == hamsearch.FOUND and args.witness_out:
        with open(args.witness_out, "w", encoding="ascii") as f:
            f.write(" ".join(map(str, outcome.witness)) + "\n")
    return EXIT_BUDGET if outcome.verdict == hamsearch.UNKNOWN else EXIT_OK


def _cmd_sweep(args) -> int:
    config = montecarlo.load_config(args.config)
    result = montecarlo.run_sweep(config, workers=args.workers)
    montecarlo.emit_csv(result, args.out)
    print(f"wrote {len(result.rows)} rows to {args.out} in {result.wall_time:.2f}s")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="hampower",
        description="Braid graphs, exact densities, containment thresholds, and sweeps.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("braid", help="emit a braid graph as an edge list")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--s", type=int, default=1, help="number of disjoint copies")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of edge list")
    p.add_argument("--out", help="write to a file instead of stdout")
    p.set_defaults(func=_cmd_braid)

    p = sub.add_parser("gen", help="emit a standard graph as an edge list")
    gsub = p.add_subparsers(dest="kind", required=True)
    q = gsub.add_parser("complete")
    q.add_argument("--n", type=int, required=True)
    q = gsub.add_parser("path-power")
    q.add_argument("--v", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    q = gsub.add_parser("cycle-power")
    q.add_argument("--v", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    q = gsub.add_parser("patched-bipartite")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--eps", required=True, help="rational like 1/12")
    q = gsub.add_parser("gnp")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--p", type=float, required=True)
    q.add_argument("--seed", type=int, default=0)
    for q in gsub.choices.values():
        q.add_argument("--dot", action="store_true")
        q.add_argument("--out")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("density", help="exact density reports for an edge-list file")
    p.add_argument("--input", required=True)
    p.add_argument("--max", action="store_true", help="maximum 1-density (default)")
    p.add_argument("--opt", action="store_true", help="use the min-cut maximizer")
    p.add_argument("--balanced", action="store_true", help="strict-balance check")
    p.add_argument("--phi", nargs=2, metavar=("N", "P"),
                   help="first-moment profile at scale N and probability P")
    p.add_argument("--cap", type=int, default=density.DEFAULT_BRUTE_CAP)
    p.set_defaults(func=_cmd_density)

    p = sub.add_parser("threshold-table", help="threshold exponents and reference tables")
    p.add_argument("--m-max", type=int, default=10)
    p.add_argument("--format", choices=("markdown", "csv", "json"), default="markdown")
    p.set_defaults(func=_cmd_threshold_table)

    p = sub.add_parser("normalize", help="normalize a partitioned-path labeling")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--labels", required=True, help="A/B string, e.g. AABAB")
    p.add_argument("--transcript", action="store_true")
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("verify", help="run finite verification suites")
    p.add_argument("target", choices=sorted(_VERIFY_TARGETS) + ["all"])
    p.add_argument("--m", type=int, default=2, help="power for edge-floor")
    p.add_argument("--lmax", type=int, default=12)
    p.add_argument("--m-max", type=int, default=200, help="range for regime")
    p.add_argument("--ell-max", type=int, default=10)
    p.add_argument("--t-max", type=int, default=4)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("search", help="decide m-th-power Hamiltonian cycle containment")
    p.add_argument("--input", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--witness-out")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("sweep", help="run a Monte Carlo sweep from a JSON config")
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=_cmd_sweep)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
