"""Command-line front end.

Subcommands: verify, christoffel, family, potential, residual, jacobi.
Exit codes: 0 compatible/success, 1 incompatible/not-closed, 2
degenerate-zero, 3 inconclusive, 64 usage (parse/constraint/flag errors).
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import ConstraintError, NotClosedError, ParseError
from .geometry import (
    Bivector,
    QuadratureField,
    christoffel_table,
    equation_e_residual,
    jacobiator,
    potential_from_bivector,
    quadratic_family,
)
from .scalarfield import SampleSpec, canonical_str, emit, parse
from .scalarfield.poly import to_polynomial
from .verify import cross_check, fd_gate_threshold, run_suite

EXIT_OK = 0
EXIT_INCOMPATIBLE = 1
EXIT_DEGENERATE = 2
EXIT_INCONCLUSIVE = 3
EXIT_USAGE = 64

_VERDICT_EXIT = {
    "compatible": EXIT_OK,
    "incompatible": EXIT_INCOMPATIBLE,
    "degenerate-zero": EXIT_DEGENERATE,
    "inconclusive": EXIT_INCONCLUSIVE,
}

# display order of the connection-coefficient pairs: each transposed pair
# follows its partner, diagonal entries interleaved
_TABLE_ORDER = ((1, 1), (1, 2), (2, 1), (1, 3), (3, 1), (2, 2), (2, 3), (3, 2), (3, 3))


def _add_spec_flags(p: argparse.ArgumentParser) -> None:
    d = SampleSpec()
    p.add_argument("--box", nargs=2, type=float, default=list(d.box),
                   metavar=("LO", "HI"), help="sampling box bounds per axis")
    p.add_argument("--count", type=int, default=d.count, help="number of sample points")
    p.add_argument("--seed", type=int, default=d.seed, help="sampling seed")
    p.add_argument("--exclude", type=float, default=d.excluded_radius,
                   help="radius of the excluded ball around the origin")
    p.add_argument("--abs-tol", type=float, default=d.abs_tol, help="absolute tolerance")
    p.add_argument("--rel-tol", type=float, default=d.rel_tol, help="relative tolerance")


def _add_format_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "text"), default="text",
                   help="output format")


def _build_spec(args) -> SampleSpec:
    return SampleSpec(box=(args.box[0], args.box[1]), excluded_radius=args.exclude,
                      count=args.count, seed=args.seed,
                      abs_tol=args.abs_tol, rel_tol=args.rel_tol)


def _parse_field(text: str):
    try:
        return parse(text)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return None


def _emit(payload: dict, text: str, fmt: str) -> None:
    print(json.dumps(payload) if fmt == "json" else text)


def _cmd_verify(args) -> int:
    f = _parse_field(args.f)
    if f is None:
        return EXIT_USAGE
    spec = _build_spec(args)
    # derivative oracle gate before trusting the symbolic suite
    gate_err = cross_check(f, spec, args.h)
    gate_budget = fd_gate_threshold(f, spec, args.h)
    if gate_err > gate_budget:
        print(f"warning: derivative oracle gate exceeded budget "
              f"({gate_err:.3e} > {gate_budget:.3e}); symbolic results suspect",
              file=sys.stderr)
    report = run_suite(f, spec, label=args.f)
    if args.format == "json":
        print(report.to_json())
    else:
        print(report.render_text())
    return _VERDICT_EXIT[report.verdict]


def _cmd_christoffel(args) -> int:
    f = _parse_field(args.f)
    if f is None:
        return EXIT_USAGE
    table = christoffel_table(f)
    entries = [
        {"i": i, "j": j, "k": k, "value": canonical_str(table.entry(i, j, k))}
        for (i, j) in _TABLE_ORDER for k in (1, 2, 3)
    ]
    text = "\n".join(f"Gamma[{e['i']}][{e['j']}]^{e['k']} = {e['value']}" for e in entries)
    _emit({"potential": args.f, "christoffel": entries}, text, args.format)
    return EXIT_OK


def _cmd_family(args) -> int:
    try:
        f = quadratic_family(args.a, args.b, args.c)
    except (ConstraintError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    exact_zero = True
    for comp in equation_e_residual(f).components:
        p = to_polynomial(comp)
        exact_zero = exact_zero and p is not None and p.is_zero()
    status = "pass" if exact_zero else "FAIL"
    text = f"f = {emit(f)}\nequation_E exact zero: {status}"
    _emit({"a": args.a, "b": args.b, "c": args.c, "potential": emit(f),
           "equation_E_exact_zero": exact_zero}, text, args.format)
    return EXIT_OK if exact_zero else EXIT_INCOMPATIBLE


def _cmd_potential(args) -> int:
    comps = [_parse_field(t) for t in (args.p12, args.p13, args.p23)]
    if any(c is None for c in comps):
        return EXIT_USAGE
    pi = Bivector(*comps)
    spec = _build_spec(args)
    try:
        f = potential_from_bivector(pi, spec)
    except NotClosedError as exc:
        residuals = [canonical_str(r) for r in exc.residuals]
        text = ("not closed: divergence residuals do not vanish\n"
                + "\n".join(f"residual[{i + 1}] = {r}" for i, r in enumerate(residuals)))
        _emit({"closed": False, "potential": None, "residuals": residuals},
              text, args.format)
        return EXIT_INCOMPATIBLE
    if isinstance(f, QuadratureField):
        samples = [{"point": [1.0, 0.0, 0.0], "value": f.evaluate((1, 0, 0))},
                   {"point": [1.0, 1.0, 1.0], "value": f.evaluate((1, 1, 1))}]
        text = ("non-polynomial potential reconstructed by line integral "
                "(numeric; f(0,0,0) = 0)\n"
                + "\n".join(f"f({s['point']}) = {s['value']!r}" for s in samples))
        _emit({"closed": True, "potential": None,
               "note": "line-integral reconstruction", "samples": samples},
              text, args.format)
        return EXIT_OK
    _emit({"closed": True, "potential": canonical_str(f)},
          f"f = {canonical_str(f)}", args.format)
    return EXIT_OK


def _cmd_residual(args) -> int:
    f = _parse_field(args.f)
    if f is None:
        return EXIT_USAGE
    res = equation_e_residual(f)
    names = ("dx", "dy", "dz")
    values = {n: canonical_str(c) for n, c in zip(names, res.components)}
    text = "\n".join(f"{n}: {values[n]}" for n in names)
    _emit({"potential": args.f, "residual": values}, text, args.format)
    return EXIT_OK


def _cmd_jacobi(args) -> int:
    comps = [_parse_field(t) for t in (args.p12, args.p13, args.p23)]
    if any(c is None for c in comps):
        return EXIT_USAGE
    j = jacobiator(Bivector(*comps))
    text = f"jacobiator = {canonical_str(j.c)}"
    _emit({"p12": args.p12, "p13": args.p13, "p23": args.p23,
           "jacobiator": canonical_str(j.c)}, text, args.format)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="poiscompat",
        description="Check compatibility of Poisson bivectors on R^3 "
                    "with the canonical metric.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the full residual suite on a potential")
    p.add_argument("--f", required=True, help="potential expression")
    _add_spec_flags(p)
    p.add_argument("--h", type=float, default=1e-4,
                   help="finite-difference step of the derivative oracle gate")
    _add_format_flag(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("christoffel", help="dump the 27 connection coefficients")
    p.add_argument("--f", required=True, help="potential expression")
    _add_format_flag(p)
    p.set_defaults(func=_cmd_christoffel)

    p = sub.add_parser("family", help="degree-2 solution family member for (a, b, c)")
    p.add_argument("a", type=float)
    p.add_argument("b", type=float)
    p.add_argument("c", type=float)
    _add_format_flag(p)
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("potential", help="reconstruct a potential from bivector components")
    p.add_argument("p12")
    p.add_argument("p13")
    p.add_argument("p23")
    _add_spec_flags(p)
    _add_format_flag(p)
    p.set_defaults(func=_cmd_potential)

    p = sub.add_parser("residual", help="print the PDE residual one-form of a potential")
    p.add_argument("--f", required=True, help="potential expression")
    _add_format_flag(p)
    p.set_defaults(func=_cmd_residual)

    p = sub.add_parser("jacobi", help="print the Schouten jacobiator of a bivector")
    p.add_argument("--p12", required=True)
    p.add_argument("--p13", required=True)
    p.add_argument("--p23", required=True)
    _add_format_flag(p)
    p.set_defaults(func=_cmd_jacobi)
    return parser


def _escape_expression_argv(argv: list[str]) -> list[str]:
    """Parenthesize expression arguments with a leading '-'.

    argparse treats any '-...' token as an option, which breaks
    documented invocations like `potential "x*y" "-(x*z)" "y*z"`.
    Wrapping a complete expression in parentheses does not change its
    parse, so '-(x*z)' becomes '(-(x*z))'.  Plain negative numbers are
    left alone (argparse accepts them natively).
    """
    out = []
    for tok in argv:
        if (tok.startswith("-") and not tok.startswith("--") and tok != "-h"
                and any(ch in tok for ch in "xyz()")):
            tok = f"({tok})"
        out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    argv = _escape_expression_argv(list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage problems; the contract says 64
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
