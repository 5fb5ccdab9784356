"""Command-line interface.

Exit codes: 0 pass, 1 semantic failure or refutation, 2 input error.
"""
from __future__ import annotations

import argparse
import sys
from math import comb

from . import arrow, criticality, duality, extremal
from .hypercore import HypergraphError, ParseError, complement, format_set, parse, serialize
from .solvers import DEFAULT_ENUMERATION_CAP, EnumerationOverflow

EXIT_PASS, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class Output:
    def __init__(self, fmt: str, stream=None):
        self.fmt = fmt
        self.stream = stream if stream is not None else sys.stdout

    def emit(self, pairs):
        sep = "\t" if self.fmt == "records" else ": "
        for key, value in pairs:
            self.stream.write(f"{key}{sep}{value}\n")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _range(spec: str) -> range:
    lo, sep, hi = spec.partition("..")
    return range(int(lo), int(hi if sep else lo) + 1)


def cmd_stats(args, out: Output) -> int:
    h = parse(_read(args.input))
    g = duality.gallai_check(h, strict=False)
    out.emit([("r", str(h.r)), ("edges", str(h.m))] + g.lines())
    return EXIT_PASS if g.holds else EXIT_FAIL


def cmd_check(args, out: Output) -> int:
    h = parse(_read(args.input))
    if args.kind == "tau-critical":
        rep = criticality.is_tau_critical(h)
        ok = rep.is_tau_critical
        pairs = rep.lines()
        if not ok:
            bad = rep.non_dropping_edges()
            if bad:
                pairs.append(("failing_edge", " ".join(map(str, bad[0]))))
            if rep.isolated:
                pairs.append(("failing_isolated", format_set(rep.isolated)))
        else:
            pairs.append(("t", str(rep.tau)))
    elif args.kind == "vertex-critical":
        rep = criticality.is_vertex_critical(h)
        ok = rep.is_vertex_critical
        pairs = rep.lines()
    else:
        rep = criticality.is_witness(h, cap=args.cap)
        ok = rep.is_witness
        pairs = rep.lines()
    out.emit(pairs + [("verdict", "pass" if ok else "fail")])
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_transform(args, out: Output) -> int:
    h = parse(_read(args.input))
    trace_stream = open(args.trace, "w") if args.trace else sys.stderr
    try:
        if args.direction == "complement":
            out.stream.write(serialize(complement(h)))
            return EXIT_PASS
        fn = duality.critical_to_witness if args.direction == "to-witness" else duality.witness_to_critical
        try:
            trace = fn(h)
        except criticality.PreconditionError as exc:
            trace_stream.write(f"precondition: {exc}\n")
            return EXIT_FAIL
        out.stream.write(trace.output_block())
        trace_stream.write(trace.to_text())
        return EXIT_PASS
    finally:
        if args.trace:
            trace_stream.close()


def cmd_arrow(args, out: Output) -> int:
    family = arrow.parse_family(_read(args.input))
    n = args.n if args.n is not None else family.n
    k = args.k if args.k is not None else family.k
    rep = arrow.verify_negative_arrow(family, n, k, args.t, args.u)
    out.emit(rep.lines())
    return EXIT_PASS if rep.holds else EXIT_FAIL


def cmd_search(args, out: Output) -> int:
    try:
        rec = extremal.search_v_max(args.r, args.t, args.mode, args.budget, args.workers, args.seed)
    except extremal.InfeasibleSearch as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_FAIL
    except extremal.SearchIncomplete as exc:
        sys.stderr.write(f"incomplete: {exc}\n")
        out.emit(exc.record.lines() + [("status", "incomplete")])
        return EXIT_FAIL
    out.emit(rec.lines())
    if args.store and rec.certificate is not None:
        store = extremal.CertificateStore(args.store)
        added = sum(store.add(extremal.make_certificate(h)) for h in rec.critical if h.n == rec.best_n)
        out.emit([("certificates_added", str(added))])
    return EXIT_PASS


def cmd_bounds(args, out: Output) -> int:
    rows = [extremal.bounds(args.r, t) for t in _range(args.t)]
    if args.format == "records":
        for row in rows:
            out.stream.write("\t".join(f"{k}={v}" for k, v in row.columns()) + "\n")
    else:
        names = [k for k, _ in rows[0].columns()]
        table = [names] + [[v for _, v in row.columns()] for row in rows]
        widths = [max(len(r[i]) for r in table) for i in range(len(names))]
        for r in table:
            out.stream.write(" | ".join(c.rjust(w) for c, w in zip(r, widths)) + "\n")
    ok = True
    if args.r == 3:
        span = _range(args.identity)
        ok = all(extremal.lower_gylt(3, t) == comb(t + 2, 2) for t in span)
        out.emit([("identity", f"lower_gylt(3,t) = C(t+2,2) for t={span.start}..{span.stop - 1}: "
                   f"{'ok' if ok else 'FAILED'}")])
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_verify(args, out: Output) -> int:
    status = EXIT_PASS
    for path in args.inputs:
        cert = extremal.parse_certificate(_read(path))
        rep = extremal.verify_certificate(cert)
        out.emit([("certificate", path)] + rep.lines())
        if not rep.accepted:
            status = EXIT_FAIL
    return status


def cmd_gap(args, out: Output) -> int:
    store = extremal.CertificateStore(args.store) if args.store else None
    rep = extremal.lower_bound_gap_report(args.r, args.t, store=store)
    out.emit(rep.lines())
    return EXIT_FAIL if rep.status == "refuted" else EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="taucrit", description="Exact tools for tau-critical hypergraphs.")
    p.add_argument("--format", choices=("human", "records"), default="human",
                   help="records emits key<TAB>value lines")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("stats", help="tau, alpha, omega and the complement identities")
    s.add_argument("input", nargs="?", default="-")
    s.set_defaults(func=cmd_stats)

    s = sub.add_parser("check", help="tau-criticality, vertex-criticality or witness status")
    s.add_argument("input", nargs="?", default="-")
    s.add_argument("--kind", choices=("tau-critical", "vertex-critical", "witness"), default="tau-critical")
    s.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP, help="max-clique enumeration cap")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("transform", help="complement, or move between witness and tau-critical sides")
    s.add_argument("input", nargs="?", default="-")
    s.add_argument("--direction", choices=("complement", "to-witness", "to-critical"), required=True)
    s.add_argument("--trace", help="write the trace here instead of standard error")
    s.set_defaults(func=cmd_transform)

    s = sub.add_parser("arrow", help="verify a clique family witnesses (n,k,t)^r -/-> u")
    s.add_argument("input", nargs="?", default="-")
    s.add_argument("--n", type=int)
    s.add_argument("--k", type=int)
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--u", type=int, required=True)
    s.set_defaults(func=cmd_arrow)

    s = sub.add_parser("search", help="search for the largest tau-critical hypergraphs")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--mode", choices=("exhaustive", "budgeted"), default="exhaustive")
    s.add_argument("--budget", type=int, default=extremal.DEFAULT_BUDGET, help="candidate node budget")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--seed", type=int, default=None)
    s.add_argument("--store", help="certificate store directory")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("bounds", help="exact bound formulas")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--t", default="1..10", help="value or range lo..hi")
    s.add_argument("--identity", default="1..100", help="range for the r=3 lower-bound identity check")
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("verify", help="verify certificate files")
    s.add_argument("inputs", nargs="+")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("gap", help="lower bound versus best known order")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--store")
    s.set_defaults(func=cmd_gap)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Output(args.format)
    try:
        return args.func(args, out)
    except (ParseError, HypergraphError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except EnumerationOverflow as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
