"""Command line interface.

Every command prints one JSON document on stdout.  Exit codes: 0 on
success or a matching verdict, 2 on a mismatch or a failed reproduction,
1 on usage, file or parse errors (diagnostics go to stderr).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__, ainfinity, casebook
from .freealg import ParseError, Presentation, load_presentation, print_poly
from .gb import complete
from .grading import GradingError, MultiGrading, assoc_graded, criterion_check
from .hilbert import EQUAL, compare_series, expand_rational, hilbert_from_lms, parse_rational
from .order import make_order
from .scalars import QQ7, ParamField

SCHEMA_VERSION = 1
DEFAULT_MAX_DEGREE = 16


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------


def max_degree():
    raw = os.environ.get("NCG_MAX_DEGREE")
    if raw is None:
        return DEFAULT_MAX_DEGREE
    try:
        cap = int(raw)
    except ValueError:
        raise UsageError(f"NCG_MAX_DEGREE must be an integer, got {raw!r}")
    if cap < 1:
        raise UsageError("NCG_MAX_DEGREE must be positive")
    return cap


def check_bound(bound):
    if bound < 1:
        raise UsageError(f"--bound must be positive, got {bound}")
    cap = max_degree()
    if bound > cap:
        raise UsageError(f"--bound {bound} exceeds NCG_MAX_DEGREE={cap}")
    return bound


def resolve_presentation(ref: str, params=None) -> Presentation:
    """Load a presentation from a file path or a catalogue name.

    A path that does not exist but whose stem names a catalogue entry (for
    instance ``examples/J.alg``) falls back to the bundled copy.
    """
    path = Path(ref)
    if path.is_file():
        p = load_presentation(path)
    else:
        name = casebook.ALIASES.get(ref, ref)
        if name not in casebook.CATALOG:
            name = casebook.ALIASES.get(path.stem, path.stem)
        if name not in casebook.CATALOG:
            raise FileNotFoundError(f"no such file or catalogue entry: {ref}")
        p = casebook.load(name)
    if params:
        unknown = sorted(set(params) - set(p.parameters))
        if unknown:
            raise UsageError(f"unknown parameters {unknown}; the presentation has {p.parameters}")
        base = p.field.base if isinstance(p.field, ParamField) else p.field
        p = p.specialize({k: _param_value(v, base) for k, v in params.items()})
    return p


def _param_value(text, base):
    try:
        return Fraction(text)
    except ValueError:
        if base == QQ7:
            return ainfinity.parse_scalar(text, QQ7)
        raise UsageError(f"parameter value {text!r} is not a rational number")


def parse_params(items):
    out = {}
    for item in items or []:
        key, sep, value = item.partition("=")
        if not sep or not key or not value:
            raise UsageError(f"--param expects name=value, got {item!r}")
        out[key.strip()] = value.strip()
    return out


def rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"{text!r} is not a rational number")


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = [_jsonable(v) for v in x]
        return sorted(items, key=str) if isinstance(x, (set, frozenset)) else items
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    return str(x)


def envelope(command, result, ok=True):
    return {
        "schema_version": SCHEMA_VERSION,
        "ncg_version": __version__,
        "command": command,
        "ok": ok,
        "result": _jsonable(result),
    }


def render_pretty(obj, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.extend(render_pretty(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar_text(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}-")
                lines.extend(render_pretty(v, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar_text(v)}")
    else:
        lines.append(pad + _scalar_text(obj))
    return lines


def _scalar_text(v):
    if isinstance(v, bool):
        return "yes" if v else "no"
    if v == [] or v == {}:
        return "(none)"
    return str(v)


def emit(doc, pretty, stream=None):
    stream = stream or sys.stdout
    if pretty:
        stream.write("\n".join(render_pretty(doc)) + "\n")
    else:
        stream.write(json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n")


# ---------------------------------------------------------------------------
# commands; each returns (result, ok)
# ---------------------------------------------------------------------------


def cmd_gb(args):
    p = resolve_presentation(args.input, parse_params(args.param))
    order = make_order(args.order, p.alphabet)
    G = complete(p.relations, order, check_bound(args.bound))
    return {
        "presentation": p.name,
        "order": args.order,
        "bound": args.bound,
        "complete": G.complete,
        "size": len(G),
        "basis": [print_poly(g, order) for g in G.elements],
        "leading_monomials": [p.alphabet.format_word(w) for w in G.leading_monomials()],
        "assumed_nonzero": [str(a) for a in G.assumed_nonzero],
    }, True


def cmd_hilbert(args):
    p = resolve_presentation(args.input, parse_params(args.param))
    N = check_bound(args.bound)
    order = make_order(args.order, p.alphabet)
    G = complete(p.relations, order, N)
    counts = list(hilbert_from_lms(G.leading_monomials(), p.alphabet.degrees, N))
    out = {"presentation": p.name, "bound": N, "complete": G.complete, "counts": counts}
    ok = True
    if args.expect:
        num, den = parse_rational(args.expect)
        expected = list(expand_rational(num, den, N))
        cmp = compare_series(counts, expected)
        out["expected"] = expected
        out["match"] = cmp == EQUAL
        if cmp != EQUAL:
            out["first_difference"] = {"index": cmp.index, "sign": cmp.sign}
        ok = out["match"]
    return out, ok


def _grading(p, blocks):
    if blocks:
        return MultiGrading.partition(p.alphabet, [b.split(",") for b in blocks])
    return MultiGrading(p.alphabet)


def cmd_assoc_graded(args):
    p = resolve_presentation(args.input, parse_params(args.param))
    g = _grading(p, args.block)
    gr, G = assoc_graded(p, g, bound=check_bound(args.bound))
    return {
        "presentation": p.name,
        "complete": G.complete,
        "basis": [print_poly(e, G.order) for e in G.elements],
        "associated_graded": [print_poly(r) for r in gr.relations],
    }, True


def cmd_criterion(args):
    params = parse_params(args.param)
    p = resolve_presentation(args.input, params)
    target = resolve_presentation(args.target)
    g = _grading(p, args.block)
    target = casebook._lift_target(target, p)
    rep = criterion_check(p, g, target, bound=check_bound(args.bound))
    return {
        "presentation": p.name,
        "target": target.name,
        "verdict": rep.verdict,
        "exact": rep.exact,
        "witness": print_poly(rep.witness) if rep.witness is not None else None,
        "associated_graded": [print_poly(r) for r in rep.lh_ideal],
        "warnings": rep.warnings,
        "assumed_nonzero": [str(a) for a in rep.assumed_nonzero],
        "note": rep.note,
    }, rep.matches


def cmd_stasheff(args):
    names = args.solutions or None
    known = ainfinity.load_solutions()
    for n in names or []:
        if n not in known:
            raise UsageError(f"unknown solution {n!r}; choose from {sorted(known)}")
    try:
        rep = casebook.stasheff_report(names, seed=args.seed, samples=args.samples)
    except ainfinity.VerificationFailed as exc:
        return {"error": str(exc), "equation": exc.equation}, False
    for n in rep:
        rep[n]["matches_catalog"] = casebook.solution_matches_catalog(n)[0]
    ok = all(r["ok"] and r["matches_catalog"] for r in rep.values())
    return rep, ok


def cmd_points(args):
    vals = (args.u, args.v, args.w)
    if any(x is None for x in vals) and any(x is not None for x in vals):
        raise UsageError("give all of --u, --v, --w or none of them")
    return casebook.point_module_solve(*vals), True


def cmd_autocheck(args):
    try:
        res = casebook.automorphism_check(*args.matrix, args.u, args.v, args.w)
    except casebook.InvalidCandidate as exc:
        raise UsageError(str(exc))
    a1, a2, b1, b2 = (str(x) for x in args.matrix)
    res["matrix"] = [[a1, a2], [b1, b2]]
    return res, True


def cmd_orecheck(args):
    return casebook.ore_check(args.u, args.v, args.w, bound=check_bound(args.bound)), True


def cmd_casebook(args):
    if args.action == "list":
        return {k: e.description for k, e in casebook.CATALOG.items()}, True
    if args.action == "show":
        if not args.names:
            raise UsageError("casebook show needs a catalogue name")
        return {n: casebook.catalog_text(n) for n in args.names}, True
    if not args.all:
        raise UsageError("casebook run needs --all")
    dossier = casebook.run_all(seed=args.seed)
    summary = {k: v["pass"] for k, v in dossier.items()}
    return {"summary": summary, "checks": dossier}, all(summary.values())


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _add_input(sp, with_order=True):
    sp.add_argument("input", help="presentation file or catalogue name (J, U, V, O, P, Q, D21, ...)")
    sp.add_argument("--param", action="append", metavar="NAME=VALUE", help="specialise a parameter")
    if with_order:
        sp.add_argument("--order", choices=("grlex", "zr"), default="grlex")


def _add_uvw(sp, required=False):
    for name in ("u", "v", "w"):
        sp.add_argument(f"--{name}", type=rational, required=required)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="human readable output instead of JSON")
    common.add_argument("--seed", type=int, default=0, help="seed for random specialisation points")

    parser = argparse.ArgumentParser(prog="ncg", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"ncg {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True)

    sp = sub.add_parser("gb", parents=[common], help="Groebner basis up to a degree bound")
    _add_input(sp)
    sp.add_argument("--bound", type=int, default=8)
    sp.set_defaults(func=cmd_gb)

    sp = sub.add_parser("hilbert", parents=[common], help="Hilbert series coefficients")
    _add_input(sp)
    sp.add_argument("--bound", type=int, default=10)
    sp.add_argument("--expect", help='expected series, e.g. "1/((1-t)^2*(1-t^2)*(1-t^3))"')
    sp.set_defaults(func=cmd_hilbert)

    sp = sub.add_parser("assoc-graded", parents=[common], help="associated graded presentation")
    _add_input(sp, with_order=False)
    sp.add_argument("--block", action="append", help="comma separated generators of one grading block")
    sp.add_argument("--bound", type=int, default=8)
    sp.set_defaults(func=cmd_assoc_graded)

    sp = sub.add_parser("criterion", parents=[common], help="compare the associated graded ideal with a target")
    _add_input(sp, with_order=False)
    sp.add_argument("--target", required=True, help="target presentation file or catalogue name")
    sp.add_argument("--block", action="append", help="comma separated generators of one grading block")
    sp.add_argument("--bound", type=int, default=8)
    sp.set_defaults(func=cmd_criterion)

    sp = sub.add_parser("stasheff", parents=[common], help="verify catalogued structure-equation solutions")
    sp.add_argument("solutions", nargs="*", help="solution names (default: all)")
    sp.add_argument("--samples", type=int, default=3)
    sp.set_defaults(func=cmd_stasheff)

    sp = sub.add_parser("points", parents=[common], help="point-module families and assembly classes")
    _add_uvw(sp)
    sp.set_defaults(func=cmd_points)

    sp = sub.add_parser("autocheck", parents=[common], help="test a linear substitution as an automorphism of J")
    sp.add_argument("--matrix", nargs=4, type=rational, required=True, metavar=("A1", "A2", "B1", "B2"),
                    help="x1 -> A1 x1 + A2 x2, x2 -> B1 x1 + B2 x2")
    _add_uvw(sp, required=True)
    sp.set_defaults(func=cmd_autocheck)

    sp = sub.add_parser("orecheck", parents=[common], help="compare J with the Ore extension presentation")
    _add_uvw(sp)
    sp.add_argument("--bound", type=int, default=6)
    sp.set_defaults(func=cmd_orecheck)

    sp = sub.add_parser("casebook", parents=[common], help="catalogue and case-study dossier")
    sp.add_argument("action", choices=("run", "list", "show"))
    sp.add_argument("names", nargs="*")
    sp.add_argument("--all", action="store_true")
    sp.set_defaults(func=cmd_casebook)
    return parser


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and 1
    command = args.verb if args.verb != "casebook" else f"casebook {args.action}"
    try:
        max_degree()
        result, ok = args.func(args)
    except UsageError as exc:
        print(f"ncg: error: {exc}", file=stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"ncg: error: {exc}", file=stderr)
        return 1
    except ParseError as exc:
        print(f"ncg: parse error: {exc}", file=stderr)
        return 1
    except (ValueError, GradingError) as exc:
        print(f"ncg: error: {exc}", file=stderr)
        return 1
    except casebook.ReproductionFailure as exc:
        emit(envelope(command, {"stage": exc.stage, "error": str(exc)}, ok=False), args.pretty, stdout)
        return 2
    emit(envelope(command, result, ok), args.pretty, stdout)
    return 0 if ok else 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
