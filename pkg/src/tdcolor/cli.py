"""Command-line front end.

Exit codes: 0 success, 1 theorem violation or rejected certificate,
2 usage or input error, 3 resource guard hit.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import harness
from .coloring import verify_certificate
from .errors import CertificateError, ResourceGuardError, TDColorError
from .families import build_family
from .formats import format_certificate, parse_certificate, read_graph
from .formulas import table_csv
from .solver import MAX_SOLVER_ORDER, chromatic_number, td_chromatic_number, total_domination_number

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


def _load(args):
    if args.family:
        return build_family(args.family)
    return read_graph(args.file)


def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", help="family spec such as path:9, cycle:10, cbip:2,4, gadget:5")
    src.add_argument("--file", help="edge-list or DIMACS .col file")


def _jsonable(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else str(x)
    raise TypeError(type(x))


def cmd_solve(args, out) -> int:
    g = _load(args)
    params = ["chi", "gamma_t", "chi_dt"] if args.param == "all" else [args.param]
    solvers = {"chi": chromatic_number, "gamma_t": total_domination_number, "chi_dt": td_chromatic_number}
    results = [solvers[p](g, max_order=args.max_order) for p in params]
    if args.format == "json":
        payload = []
        for r in results:
            if r.parameter == "chi_dt":
                cert = {"colors": list(r.certificate.coloring.colors),
                        "dominated_class": list(r.certificate.dominated_class)}
            elif r.parameter == "chi":
                cert = {"colors": list(r.certificate.colors)}
            else:
                cert = {"set": sorted(r.certificate)}
            payload.append({"parameter": r.parameter, "value": r.value, "certificate": cert,
                            "nodes_explored": r.nodes_explored, "lower_bound_used": r.lower_bound_used,
                            "upper_bound_used": r.upper_bound_used})
        json.dump(payload if len(payload) > 1 else payload[0], out, indent=2)
        out.write("\n")
    else:
        for r in results:
            out.write(f"{r.parameter}={r.value}\n")
            if r.parameter == "chi_dt":
                out.write(format_certificate(r.certificate))
            elif r.parameter == "chi":
                out.write("colors " + " ".join(map(str, r.certificate.colors)) + "\n")
            else:
                out.write("set " + " ".join(map(str, sorted(r.certificate))) + "\n")
    for r in results:
        if r.parameter == "chi_dt" and args.cert_out:
            with open(args.cert_out, "w") as fh:
                fh.write(format_certificate(r.certificate))
    return EXIT_OK


def cmd_check(args, out) -> int:
    g = _load(args)
    with open(args.cert) as fh:
        try:
            cert = parse_certificate(fh.read())
        except TDColorError as exc:
            out.write(f"invalid: {exc}\n")
            return EXIT_VIOLATION
    try:
        verify_certificate(g, cert, args.value)
    except CertificateError as exc:
        out.write(f"invalid: {exc}\n")
        return EXIT_VIOLATION
    out.write(f"valid: TD-coloring with k={cert.k}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    summaries = harness.verify_exhaustive(args.nmax, args.theorem, workers=args.workers, dedup=args.dedup)
    if args.format == "json":
        json.dump([s.to_dict() for s in summaries], out, indent=2, default=_jsonable)
        out.write("\n")
    else:
        for s in summaries:
            held = "all" if s.held == s.checked else str(s.held)
            out.write(
                f"{s.theorem}: checked={s.checked}, held={held}, violations={len(s.violations)}, "
                f"skipped={s.skipped}, tight_low={s.tight_low}, tight_high={s.tight_high}\n"
            )
    return EXIT_OK if all(s.ok for s in summaries) else EXIT_VIOLATION


def cmd_table(args, out) -> int:
    ns = range(args.start, args.stop + 1)
    if not args.solve:
        out.write(table_csv(args.family, ns))
        return EXIT_OK
    text = table_csv(args.family, ns).splitlines()
    fam = text[1].split(",")[0] if len(text) > 1 else args.family
    solved = {n: harness.chi_dt(build_family(f"{fam}:{n}")) for n in ns}
    out.write(text[0] + ",solver\n")
    for line, n in zip(text[1:], ns):
        out.write(f"{line},{solved[n]}\n")
    return EXIT_OK


def cmd_search(args, out) -> int:
    if args.random:
        graphs = harness.random_universe(args.order, args.random, args.seed)
        r = harness.search_witness(args.theorem, args.endpoint, graphs=graphs)
    else:
        r = harness.search_witness(args.theorem, args.endpoint, n_max=args.nmax, dedup=args.dedup)
    if r is None:
        out.write("no witness found\n")
    else:
        json.dump(harness.report_record(r, args.endpoint), out, indent=2, default=_jsonable)
        out.write("\n")
    return EXIT_OK


def cmd_gap(args, out) -> int:
    rows = harness.gap_growth_experiment(args.kind, range(args.start, args.stop + 1), args.solve_upto)
    if args.format == "json":
        json.dump(rows, out, indent=2, default=_jsonable)
        out.write("\n")
        return EXIT_OK
    cols: list[str] = []
    for row in rows:
        cols += [c for c in row if c not in cols]
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
    w.writeheader()
    for row in rows:
        w.writerow({k: (str(v) if isinstance(v, Fraction) else v) for k, v in row.items()})
    out.write(buf.getvalue())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tdcolor", description="Exact total dominator coloring tools.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("solve", help="compute chi_dt (and optionally chi, gamma_t) with a certificate")
    _add_input(p)
    p.add_argument("--param", choices=["chi_dt", "chi", "gamma_t", "all"], default="chi_dt")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--cert-out", help="write the TD certificate to this file")
    p.add_argument("--max-order", type=int, default=MAX_SOLVER_ORDER)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check", help="re-validate a TD certificate against a graph")
    _add_input(p)
    p.add_argument("--cert", required=True)
    p.add_argument("--value", type=int, help="required number of classes")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", help="exhaustively check the operation bounds")
    p.add_argument("--theorem", action="append", help="repeatable; default is every bound")
    p.add_argument("--nmax", type=int, default=6)
    p.add_argument("--workers", type=int, default=None, help="default: CPU count")
    p.add_argument("--dedup", action="store_true", help="one graph per isomorphism class")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="closed-form values as CSV")
    p.add_argument("--family", required=True, help="path, cycle, pathk1, cyclek1 or gadget")
    p.add_argument("--from", dest="start", type=int, required=True)
    p.add_argument("--to", dest="stop", type=int, required=True)
    p.add_argument("--solve", action="store_true", help="append an exact solver column")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("search", help="find an instance attaining a bound endpoint")
    p.add_argument("--theorem", required=True)
    p.add_argument("--endpoint", choices=["low", "high"], required=True)
    p.add_argument("--nmax", type=int, default=6)
    p.add_argument("--dedup", action="store_true")
    p.add_argument("--random", type=int, metavar="COUNT", help="sample COUNT random connected graphs instead")
    p.add_argument("--order", type=int, default=9, help="order of random graphs")
    p.add_argument("--seed", type=int, help="required with --random")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("gap", help="gap-growth tables")
    p.add_argument("--kind", required=True, help="apex-gadget (T2.5) or clique-odot (C3.6)")
    p.add_argument("--from", dest="start", type=int, required=True)
    p.add_argument("--to", dest="stop", type=int, required=True)
    p.add_argument("--solve-upto", type=int, default=5)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_gap)
    return parser


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verb == "search" and args.random and args.seed is None:
        parser.error("--random requires --seed")
    try:
        return args.func(args, out)
    except ResourceGuardError as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (TDColorError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
