"""The ``ca-forge`` command line.

Exit codes: 0 clean, 1 verification failure, 2 usage error, 3 budget
exhausted.  Every run starts with a header echoing the resolved
configuration; with --json the configuration is embedded in the document.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .discriminants import disc_table
from .dsub import MonomialShape, component_description, monomial_d_ideal, verify_prop2
from .fields import field_from_spec
from .geometry import all_tuples, tuple_ideal_generators
from .groebner import (
    DEFAULT_BUDGET,
    GREVLEX,
    LEX,
    BudgetExceeded,
    buchberger,
    ideal_dimension,
    saturate,
)
from .hasse import d_power, hs_multi, hs_uni
from .poly import ParseError, format_poly, format_upoly, parse_poly, parse_upoly, var_names
from .search import (
    BUDGET,
    DEFAULT_ENUM_BUDGET,
    EnumerationBudgetExceeded,
    bad_prime_scan,
    ca_check,
    fiber_scan,
    jc_lower_bound,
    mainprop_verify,
    search_counterexamples,
    tuple_regularity_sweep,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _parse_tuple(text: str) -> tuple:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise UsageError(f"bad tuple {text!r}") from None


def _parse_alphas(text: str) -> list:
    try:
        return [Fraction(t.strip()) for t in text.split(",") if t.strip()]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad alpha list {text!r}") from None


def _names(args, n: int) -> tuple:
    if getattr(args, "vars", None):
        names = tuple(v.strip() for v in args.vars.split(","))
        if len(names) != n:
            raise UsageError("--vars must list exactly --n names")
        return names
    return var_names(n)


def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required for {args.command}")


# -- subcommands: each returns (exit code, report dict, human lines) ------------------


def cmd_hs(args):
    _require(args, "i")
    field = field_from_spec(args.field)
    if args.uni:
        f = parse_upoly(args.uni, field)
        out = format_upoly(hs_uni(f, args.i))
        return EXIT_OK, {"kind": "univariate", "input": format_upoly(f), "i": args.i, "result": out}, [out]
    _require(args, "poly", "n")
    names = _names(args, args.n)
    p = parse_poly(args.poly, args.n, field, names)
    op = d_power if args.kind == "d" else hs_multi
    out = format_poly(op(p, args.i), names)
    return EXIT_OK, {"kind": args.kind, "input": format_poly(p, names), "i": args.i, "result": out}, [out]


def cmd_disc(args):
    _require(args, "n")
    try:
        table = disc_table(args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    entries = table.reduced_json_entries() if args.reduced else table.to_json_entries()
    if args.i is not None:
        entries = [e for e in entries if e["i"] == args.i]
        if not entries:
            raise UsageError(f"--i must lie in 1..{args.n - 1}")
    lines = [f"i={e['i']}  weighted degree {e['weighted_degree']}:  {e['poly']}" for e in entries]
    return EXIT_OK, {"entries": entries}, lines


def cmd_dsub(args):
    _require(args, "shape", "level")
    shape = MonomialShape.parse(args.shape)
    names = var_names(shape.k)
    comps = component_description(shape, args.level)
    gens = monomial_d_ideal(shape, args.level - 1) if args.level >= 1 else []
    report = {
        "shape": list(shape.r),
        "level": args.level,
        "generators": [format_poly(g, names) for g in gens],
        "components": [{"subset": list(c.subset), "weight": c.weight} for c in comps],
        "verified": None,
        "certificates": [],
    }
    code = EXIT_OK
    if args.verify:
        rep = verify_prop2(shape, args.level, args.budget)
        report.update(rep.to_json())
        code = EXIT_OK if rep.verified else EXIT_FAIL
    lines = [f"generators: {', '.join(report['generators'])}"]
    lines += [f"component {{{', '.join(map(str, c['subset']))}}}  weight {c['weight']}" for c in report["components"]]
    if args.verify:
        lines.append("verified" if report["verified"] else "VERIFICATION FAILED")
    return code, report, lines


def cmd_geom(args):
    _require(args, "n", "tuple")
    tup = _parse_tuple(args.tuple)
    field = field_from_spec(args.field)
    gens = tuple_ideal_generators(args.n, tup, args.deformed, field)
    names = var_names(args.n - 1) + (("T",) if args.deformed else ())
    polys = [format_poly(g, names) for g in gens]
    return EXIT_OK, {"n": args.n, "tuple": list(tup), "deformed": args.deformed, "variables": list(names), "generators": polys}, polys


def cmd_gb(args):
    _require(args, "polys", "n")
    field = field_from_spec(args.field)
    names = _names(args, args.n)
    gens = [parse_poly(s, args.n, field, names) for s in args.polys.split(";") if s.strip()]
    if not gens:
        raise UsageError("--polys needs at least one polynomial")
    order = LEX if args.order == "lex" else GREVLEX
    report = {"variables": list(names), "order": order.describe()}
    if args.saturate:
        f = parse_poly(args.saturate, args.n, field, names)
        gens = saturate(gens, f, args.budget)
        report["saturated_at"] = format_poly(f, names)
    gb = buchberger(gens, order, args.budget)
    report["basis"] = [format_poly(g, names) for g in gb.basis]
    report["dimension"] = ideal_dimension(gb)
    lines = report["basis"] + [f"dimension {report['dimension']}"]
    return EXIT_OK, report, lines


def cmd_ca_check(args):
    _require(args, "f")
    field = field_from_spec(args.field)
    rep = ca_check(parse_upoly(args.f, field))
    j = rep.to_json()
    lines = [
        f"f = {j['f']} over {j['field']}",
        f"gcd degrees: {j['gcd_degrees']}",
        f"hypothesis {'holds' if rep.satisfies_hypothesis else 'fails'}; "
        f"pure power: {rep.is_pure_power}; counterexample: {rep.is_counterexample}",
    ]
    return EXIT_OK, j, lines


def cmd_search(args):
    _require(args, "n", "p")
    res = search_counterexamples(args.n, args.p, args.enum_budget)
    j = res.to_json()
    lines = [f"{len(res.counterexamples)} counterexamples of degree {args.n} over GF({args.p})"]
    lines += [f"  {r.to_json()['f']}" for r in res.counterexamples]
    lines.append(f"weighted points: {len(res.xn_points)}; cross-check {'ok' if res.consistent else 'MISMATCH'}")
    return (EXIT_OK if res.consistent else EXIT_FAIL), j, lines


def cmd_badprimes(args):
    _require(args, "n", "pmax")
    counts = bad_prime_scan(args.n, args.pmax, args.enum_budget)
    j = {"n": args.n, "pmax": args.pmax, "counts": {str(p): c for p, c in counts.items()}}
    lines = [f"p={p}: {c}" for p, c in counts.items()]
    code = EXIT_BUDGET if any(c == "skipped" for c in counts.values()) else EXIT_OK
    return code, j, lines


def _sweep_exit(rep) -> int:
    if rep.verdict == "not all regular":
        return EXIT_FAIL
    if rep.verdict == "inconclusive":
        return EXIT_BUDGET
    return EXIT_OK


def cmd_regseq(args):
    _require(args, "n")
    field = field_from_spec(args.field)
    rep = tuple_regularity_sweep(args.n, args.length, field, args.budget, args.workers)
    lines = [rep.summary()]
    lines += [
        f"  ({','.join(map(str, t))}): {o['status']} (dimension {o['dimension']})"
        for t, o in sorted(rep.outcomes.items())
        if o["status"] != "regular"
    ]
    return _sweep_exit(rep), rep.to_json(), lines


def cmd_mainprop(args):
    _require(args, "n")
    rep = mainprop_verify(args.n, args.budget, args.workers)
    lines = [f"{rep.counts['regular']}/{len(rep.outcomes)} tuples have saturated dimension 1"]
    lines += [
        f"  ({','.join(map(str, t))}): dimension {o['dimension']} ({o['status']})"
        for t, o in sorted(rep.outcomes.items())
        if o["status"] != "regular"
    ]
    return _sweep_exit(rep), rep.to_json(), lines


def cmd_fibers(args):
    _require(args, "n", "alphas")
    alphas = _parse_alphas(args.alphas)
    tuples = [_parse_tuple(args.tuple)] if args.tuple else all_tuples(args.n, args.n - 1)
    rows = []
    lines = []
    budget_hit = False
    for t in tuples:
        scan = fiber_scan(args.n, t, alphas, args.budget, args.workers)
        rows.append({"tuple": list(t), "fibers": scan})
        budget_hit |= any(s["status"] == BUDGET for s in scan)
        cells = ", ".join(f"{s['alpha']}:{s['dimension']}" for s in scan)
        lines.append(f"({','.join(map(str, t))})  {cells}")
    return (EXIT_BUDGET if budget_hit else EXIT_OK), {"n": args.n, "scans": rows}, lines


def cmd_jc(args):
    _require(args, "n")
    field = field_from_spec(args.field)
    res = jc_lower_bound(args.n, args.lmax, field, args.budget, args.workers)
    lines = [f"j_C({args.n}) >= {res.bound}   q({args.n}) = {res.q}   ({res.status})"]
    return (EXIT_BUDGET if res.status == "budget" else EXIT_OK), res.to_json(), lines


COMMANDS = {
    "hs": cmd_hs,
    "disc": cmd_disc,
    "dsub": cmd_dsub,
    "geom": cmd_geom,
    "gb": cmd_gb,
    "ca-check": cmd_ca_check,
    "search": cmd_search,
    "badprimes": cmd_badprimes,
    "regseq": cmd_regseq,
    "mainprop": cmd_mainprop,
    "fibers": cmd_fibers,
    "jc": cmd_jc,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON document")
    common.add_argument("--out", help="write the report to this file instead of stdout")
    common.add_argument("--field", default="QQ", help="QQ or a prime p (also GF(p))")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="S-pair reductions per Groebner basis")
    common.add_argument("--enum-budget", type=int, default=DEFAULT_ENUM_BUDGET, help="points per enumeration")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--seed", type=int, default=0, help="recorded for reproducibility")
    common.add_argument("--n", type=int)
    common.add_argument("--i", type=int)
    common.add_argument("--p", type=int)

    parser = argparse.ArgumentParser(prog="ca-forge", description="Casas-Alvero computational toolkit")
    parser.add_argument("--version", action="version", version=f"ca-forge {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hs", parents=[common], help="Hasse-Schmidt derivatives")
    p.add_argument("--uni", help="univariate polynomial in X")
    p.add_argument("--poly", help="polynomial in x1..xN")
    p.add_argument("--vars", help="comma-separated variable names")
    p.add_argument("--kind", choices=["hs", "d"], default="hs", help="hs: HD^i, d: D^i")

    p = sub.add_parser("disc", parents=[common], help="higher discriminant tables")
    p.add_argument("--reduced", action="store_true", help="set y_n = 0")

    p = sub.add_parser("dsub", parents=[common], help="monomial D-ideals")
    p.add_argument("--shape")
    p.add_argument("--level", type=int)
    p.add_argument("--verify", action="store_true")

    p = sub.add_parser("geom", parents=[common], help="tuple-indexed generators")
    p.add_argument("--tuple")
    p.add_argument("--deformed", action="store_true")

    p = sub.add_parser("gb", parents=[common], help="Groebner basis, dimension, saturation")
    p.add_argument("--polys", help="';'-separated generators")
    p.add_argument("--vars", help="comma-separated variable names")
    p.add_argument("--order", choices=["grevlex", "lex"], default="grevlex")
    p.add_argument("--saturate", help="saturate at this polynomial first")

    p = sub.add_parser("ca-check", parents=[common], help="check one monic polynomial")
    p.add_argument("--f")

    sub.add_parser("search", parents=[common], help="exhaustive counterexample scan over GF(p)")

    p = sub.add_parser("badprimes", parents=[common], help="counterexample counts per prime")
    p.add_argument("--pmax", type=int)

    p = sub.add_parser("regseq", parents=[common], help="tuple regularity sweep")
    p.add_argument("--length", type=int)

    sub.add_parser("mainprop", parents=[common], help="deformed family, saturated dimension")

    p = sub.add_parser("fibers", parents=[common], help="fiber dimensions of the deformed family")
    p.add_argument("--tuple")
    p.add_argument("--alphas")

    p = sub.add_parser("jc", parents=[common], help="lower bound for j_C(n)")
    p.add_argument("--lmax", type=int)
    return parser


def _config(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k not in ("out",)}


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    config = _config(args)
    try:
        code, report, lines = COMMANDS[args.command](args)
    except (UsageError, ParseError, ValueError) as exc:
        print(f"ca-forge {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BudgetExceeded, EnumerationBudgetExceeded) as exc:
        print(f"ca-forge {args.command}: {exc}", file=sys.stderr)
        if args.json:
            _emit(json.dumps({"config": config, "status": "budget", "message": str(exc)}, indent=2, sort_keys=True) + "\n", args.out)
        return EXIT_BUDGET
    if args.json:
        text = json.dumps({"config": config, "exit_code": code, "report": report}, indent=2, sort_keys=True) + "\n"
    else:
        header = "# ca-forge " + json.dumps(config, sort_keys=True)
        text = "\n".join([header] + lines) + "\n"
    _emit(text, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
