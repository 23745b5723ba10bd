"""Command line front end.

Every number printed here is an exact integer.  Divisor classes are
comma-separated pairs ``h,f`` meaning h*O(1) + f*F, so the classical
system O(k) - l*F is written ``k,-l``.  Exit codes: 0 success (or all
checks passed), 1 check failure, 2 usage error, 3 domain error.
"""

import argparse
import json
import sys

from . import __version__
from .blowup import BlowupStep, blowup_degree
from .classify import enumerate_cases
from .cover import analyze_cover
from .errors import FanobaseError
from .hirzebruch import SurfaceClass, forced_minimal_decomposition
from .k3pencil import (
    base_locus_dimension,
    blowup_section_reduce,
    cover_pullback,
    fano_degree,
    saint_donat_form,
)
from .report import build_report
from .scroll import DivisorClass, Scroll, h0, intersect, monomial_support
from .wps import WeightedCI, hilbert_coeffs, infer_ring

CLASS_HELP = "divisor class h,f meaning h*O(1) + f*F (the system O(k) - l*F is k,-l)"


def _csv_ints(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _divisor_class(text: str) -> DivisorClass:
    values = _csv_ints(text)
    if len(values) != 2:
        raise argparse.ArgumentTypeError(f"a class is a pair h,f; got {text!r}")
    return DivisorClass(*values)


def _class_list(text: str) -> list:
    return [_divisor_class(part) for part in text.split(";") if part.strip()]


def _int_pair(text: str) -> tuple:
    values = _csv_ints(text)
    if len(values) != 2:
        raise argparse.ArgumentTypeError(f"expected a pair of integers, got {text!r}")
    return values


def _print_report(report, as_json: bool) -> int:
    if as_json:
        print(report.to_json())
    else:
        current = None
        for record in report.records():
            if record["case"] != current:
                current = record["case"]
                print(f"== case {current}")
            status = "ok  " if record["pass"] else "FAIL"
            print(
                f"  {status} {record['name']}: expected {record['expected']}, "
                f"got {record['got']}"
            )
        summary = report.summary
        print(
            f"summary: {summary['passed']} passed, {summary['failed']} failed "
            f"({'all green' if report.all_passed else 'failures present'})"
        )
    return 0 if report.all_passed else 1


def _cmd_verify(args) -> int:
    report = build_report(__version__, max_degree=args.max_degree)
    return _print_report(report, args.json)


def _cmd_scroll(args) -> int:
    scroll = Scroll(args.d)
    if args.scroll_op == "h0":
        print(h0(scroll, args.klass))
    elif args.scroll_op == "support":
        for e in sorted(monomial_support(scroll, args.klass), reverse=True):
            print(",".join(str(v) for v in e))
    else:  # intersect
        classes = args.classes if args.classes else []
        if args.klass is not None:
            classes = [args.klass] + classes
        print(intersect(scroll, classes))
    return 0


def _cmd_surface(args) -> int:
    xi, fib = args.klass
    mu, residual = forced_minimal_decomposition(SurfaceClass(args.e, xi, fib))
    print(f"multiplicity {mu}")
    print(f"residual {residual.xi},{residual.fib}")
    return 0


def _cmd_k3(args) -> int:
    m = args.m
    start = SurfaceClass(4, 1, m)
    pulled = cover_pullback(start)
    reduced = blowup_section_reduce(pulled)
    normal_form = saint_donat_form(reduced)
    print(f"hyperplane class on Sigma_4: 1,{m}")
    print(f"cover pullback: {pulled.gamma},{pulled.ell}")
    print(f"after section blowdown: {reduced.gamma},{reduced.ell}")
    print(f"pencil multiplicity: {normal_form}")
    print(f"anticanonical degree: {fano_degree(normal_form)}")
    print(f"base locus dimension: {base_locus_dimension(normal_form)}")
    return 0


def _cmd_wps(args) -> int:
    if args.wps_op == "hilbert":
        ci = WeightedCI(args.weights, args.degrees)
        print(",".join(str(c) for c in hilbert_coeffs(ci, args.max)))
    else:  # infer
        gens, rels = infer_ring(list(args.series))
        print("generators " + ",".join(str(g) for g in gens))
        print("relations " + (",".join(str(r) for r in rels) if rels else "(none)"))
    return 0


def _cmd_cover(args) -> int:
    report = analyze_cover(args.m)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2, sort_keys=True))
        return 0
    branch = report.residual_class + report.b_mult * report.b_class
    print(f"m {report.m}")
    print(f"base {report.base!r}")
    print(f"branch {branch.h},{branch.f}")
    print(f"fixed-component {report.b_class.h},{report.b_class.f} multiplicity {report.b_mult}")
    print(f"residual {report.residual_class.h},{report.residual_class.f}")
    print(f"fiber-multiplicity {report.fiber_mult}")
    print(f"verdict {report.verdict.value}")
    return 0


def _cmd_classify(args) -> int:
    for case in enumerate_cases():
        nb = f"({case.nb.a},{case.nb.b})" if case.nb else "none"
        print(
            f"{case.label:<9} m={case.m:<3} degree={case.degree:<3} "
            f"bs_dim={case.bs_dim} W={case.w:<9} nb={nb:<9} {case.construction}"
        )
    return 0


def _cmd_blowup(args) -> int:
    print(blowup_degree(BlowupStep(args.ambient, args.curve, args.genus)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fanobase",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-paper", help="run every classification check")
    p.add_argument("--json", action="store_true", help="emit the machine-readable report")
    p.add_argument("--max-degree", type=int, default=None, metavar="N",
                   help="only verify cases of anticanonical degree <= N")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("scroll", help="linear systems and intersection numbers on scrolls")
    scroll_sub = p.add_subparsers(dest="scroll_op", required=True)
    for op, description in (
        ("h0", "dimension of the space of sections"),
        ("support", "exponent vectors with non-zero coefficient space"),
        ("intersect", "top intersection number of rank many classes"),
    ):
        q = scroll_sub.add_parser(op, help=description)
        q.add_argument("--d", type=_csv_ints, required=True, metavar="CSV",
                       help="twists d1,...,dn of the scroll")
        q.add_argument("--class", dest="klass", type=_divisor_class,
                       required=(op != "intersect"), metavar="H,F", help=CLASS_HELP)
        if op == "intersect":
            q.add_argument("--classes", type=_class_list, metavar="H,F;H,F;...",
                           help="semicolon-separated list of classes")
        q.set_defaults(func=_cmd_scroll)

    p = sub.add_parser("surface", help="divisor classes on Hirzebruch surfaces")
    surface_sub = p.add_subparsers(dest="surface_op", required=True)
    q = surface_sub.add_parser("split", help="split off forced copies of the minimal section")
    q.add_argument("--e", type=int, required=True, help="surface index")
    q.add_argument("--class", dest="klass", type=_int_pair, required=True,
                   metavar="XI,FIB", help="class xi,fib in the (minimal section, fiber) basis")
    q.set_defaults(func=_cmd_surface)

    p = sub.add_parser("k3", help="elliptic pencil lattice on the anticanonical K3")
    k3_sub = p.add_subparsers(dest="k3_op", required=True)
    q = k3_sub.add_parser("chain", help="pullback / blowdown / normal form chain for one m")
    q.add_argument("--m", type=int, required=True, help="pencil multiplicity, m >= 2")
    q.set_defaults(func=_cmd_k3)

    p = sub.add_parser("wps", help="weighted Hilbert series and ring inference")
    wps_sub = p.add_subparsers(dest="wps_op", required=True)
    q = wps_sub.add_parser("hilbert", help="expand the Hilbert series")
    q.add_argument("--weights", type=_csv_ints, required=True, metavar="CSV")
    q.add_argument("--degrees", type=_csv_ints, default=(), metavar="CSV",
                   help="relation degrees (may be empty)")
    q.add_argument("--max", type=int, default=24, metavar="N", help="truncation degree")
    q.set_defaults(func=_cmd_wps)
    q = wps_sub.add_parser("infer", help="infer generators and relations from a dimension sequence")
    q.add_argument("--series", type=_csv_ints, required=True, metavar="CSV")
    q.set_defaults(func=_cmd_wps)

    p = sub.add_parser("cover", help="branch analysis of the anticanonical double covers")
    cover_sub = p.add_subparsers(dest="cover_op", required=True)
    q = cover_sub.add_parser("analyze", help="run the branch pipeline for one m")
    q.add_argument("--m", type=int, required=True, help="family parameter, m >= 3")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=_cmd_cover)

    p = sub.add_parser("classify", help="the thirteen classification cases")
    classify_sub = p.add_subparsers(dest="classify_op", required=True)
    q = classify_sub.add_parser("enumerate", help="list all cases with their invariants")
    q.set_defaults(func=_cmd_classify)

    p = sub.add_parser("blowup", help="anticanonical degree bookkeeping for curve blowups")
    blowup_sub = p.add_subparsers(dest="blowup_op", required=True)
    q = blowup_sub.add_parser("degree", help="degree after blowing up a curve")
    q.add_argument("--ambient", type=int, required=True, help="(-K)^3 before the blowup")
    q.add_argument("--curve", type=int, required=True, help="-K . C")
    q.add_argument("--genus", type=int, required=True, help="genus of the curve")
    q.set_defaults(func=_cmd_blowup)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except FanobaseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
