"""Command-line driver.

Exit codes: 0 verified / success, 1 mathematical violation, 2 input error,
3 capacity exceeded.
"""

import argparse
import json
import sys

from . import verify as verify_mod
from .catalog import CATALOG, catalog_get, catalog_names, load_group_file
from .errors import CapacityError, InputError
from .filtrations import analyze, coinvariant_dims, p_perfect_filtration, theorem_a_filtration
from .sylow import check_prime

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_CAPACITY = 0, 1, 2, 3


def _dump(obj):
    return json.dumps(obj, indent=2, sort_keys=True)


def _yes(flag):
    return "yes" if flag else "no"


def _resolve_group(args):
    if args.file:
        return load_group_file(args.file), args.file
    if not args.name:
        raise InputError("give a catalog group name or --file PATH")
    return catalog_get(args.name), args.name


def cmd_analyze(args):
    check_prime(args.prime)
    G, name = _resolve_group(args)
    report = analyze(G, args.prime, name)
    if args.json:
        print(_dump(report.to_dict()))
    else:
        rows = [
            ("group", report.group),
            ("p", report.p),
            ("order", report.order),
            ("sylow_order", report.sylow_order),
            ("d", report.d),
            ("h1_dim_g", report.h1_dim_g),
            ("h1_dim_p", report.h1_dim_p),
            ("p_solvable", _yes(report.p_solvable["direct"])),
            ("theorem_a", f"{report.theorem_a_lhs} vs {report.theorem_a_rhs} -> {_yes(report.p_solvable['criterion'])}"),
            ("theorem_a_term_dims", report.theorem_a_term_dims),
            ("p_length", report.p_length),
            ("non_p_solvable_length", report.non_p_solvable_length),
            ("generalized_p_length", report.generalized_p_length),
            ("generalized_p_length_exhaustive", report.generalized_p_length_exhaustive),
            ("pperfect_length", report.pperfect_length),
            ("canonical_series_orders", report.canonical_series_orders),
        ]
        rows += [(k, _yes(v)) for k, v in report.bound_checks.items()]
        width = max(len(k) for k, _ in rows)
        for k, v in rows:
            print(f"{k:<{width}}  {v}")
    return EXIT_OK if report.consistent() else EXIT_VIOLATION


def cmd_filtration(args):
    check_prime(args.prime)
    G, name = _resolve_group(args)
    p = args.prime
    taf = theorem_a_filtration(G, p)
    filt = p_perfect_filtration(G, p)
    data = {
        "group": name,
        "p": p,
        "theorem_a": {
            "term_orders": taf.term_orders(),
            "term_dims": taf.term_dims(),
            "stable_order": taf.stable.order,
            "lhs_dim": taf.lhs_dim,
            "rhs_dim": taf.rhs_dim,
            "verdict": taf.verdict,
        },
        "pperfect_filtration": {
            "member_orders": filt.member_orders(),
            "coinvariant_dims": coinvariant_dims(G, p, filt),
            "factor_tags": [list(t) for t in filt.factor_tags],
            "pperfect_length": filt.pperfect_length,
        },
    }
    if args.json:
        print(_dump(data))
    else:
        print(f"{name}  p={p}")
        print("Theorem A chain (order : dim H^1(M_i)^P):")
        for o, d in zip(taf.term_orders(), taf.term_dims()):
            print(f"  {o:>8} : {d}")
        print(f"  dim H^1(P) = {taf.lhs_dim}, sum = {taf.rhs_dim}, p-solvable = {_yes(taf.verdict)}")
        print("p-perfect filtration (order : dim H_1(J_i cap P)_P):")
        for o, d in zip(filt.member_orders(), data["pperfect_filtration"]["coinvariant_dims"]):
            print(f"  {o:>8} : {d}")
        print(f"  p-perfect length = {filt.pperfect_length}")
    return EXIT_OK


def cmd_verify(args):
    groups = None
    if args.group:
        if args.group not in CATALOG:
            raise InputError(f"unknown group {args.group!r}; catalog: {', '.join(catalog_names())}")
        groups = [args.group]
    primes = None
    if args.prime is not None:
        primes = [check_prime(args.prime)]
    cases = verify_mod.run(args.suite, groups, primes)
    failures = [c for c in cases if not c.passed]
    if args.json:
        print(_dump({
            "suite": args.suite,
            "cases": len(cases),
            "passed": len(cases) - len(failures),
            "violations": [
                {k: c.to_dict()[k] for k in ("suite", "group", "prime", "expected", "actual")}
                for c in failures
            ],
        }))
    else:
        for c in cases:
            print(c.line())
        print(f"{len(cases) - len(failures)}/{len(cases)} passed")
    return EXIT_VIOLATION if failures else EXIT_OK


def cmd_catalog(args):
    for name in catalog_names():
        G = catalog_get(name)
        e = CATALOG[name]
        print(f"{name:<10} order {G.order:>5}  degree {G.degree:>3}  {e.construction}")
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="psolv", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    for cmd, fn in (("analyze", cmd_analyze), ("filtration", cmd_filtration)):
        sp = sub.add_parser(cmd)
        sp.add_argument("name", nargs="?")
        sp.add_argument("--file")
        sp.add_argument("-p", "--prime", type=int, required=True)
        sp.add_argument("--json", action="store_true")
        sp.set_defaults(func=fn)

    sp = sub.add_parser("verify")
    sp.add_argument("suite", choices=["all", *verify_mod.SUITES])
    sp.add_argument("--group")
    sp.add_argument("-p", "--prime", type=int)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("catalog")
    sp.add_argument("action", choices=["list"])
    sp.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapacityError as exc:
        print(f"capacity exceeded: {exc}", file=sys.stderr)
        return EXIT_CAPACITY


if __name__ == "__main__":
    sys.exit(main())
