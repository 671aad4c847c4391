"""Command-line front end: ``fitzri solve|eval|verify``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import replace
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from .field import FieldMode, ZeroTest, coerce, format_scalar
from .fitzpatrick import (
    BasisState,
    NoRepresentative,
    family_statement,
    monic,
    pick_representative,
    solve,
    verify_weak,
)
from .neville import DegenerateDenominator, estimate, init_state, step
from .pairmod import OrderXi, PairElement, leading_term
from .poly import Poly
from .problem import ChainOrder, Problem, ProblemError, load_problem

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NO_REPRESENTATIVE = 2
EXIT_DEGENERATE = 3
EXIT_NOT_WEAK = 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fitzri", description="Multivariate osculatory rational interpolation.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-i", "--input", required=True, help="problem file (JSON)")
    common.add_argument("--xi", type=int, help="order parameter; overrides the file")
    common.add_argument("--varorder", help="comma-separated variables, smallest first (e.g. y,x)")
    common.add_argument("--chain", choices=[c.value for c in ChainOrder], help="order of derivative data at a node")
    common.add_argument("--abs-tol", type=float, default=ZeroTest.absolute_tol)
    common.add_argument("--rel-tol", type=float, default=ZeroTest.relative_tol)
    common.add_argument("--at", help="query point, comma-separated")

    p_solve = sub.add_parser("solve", parents=[common], help="minimal Groebner basis and a representative")
    p_solve.add_argument("--format", choices=["text", "json"], default="text")
    p_solve.add_argument("--monic", action="store_true", help="rescale each element to leading coefficient 1")

    p_eval = sub.add_parser("eval", parents=[common], help="Neville-style evaluation at one point")
    p_eval.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p_eval.add_argument(
        "--zero-sign",
        type=int,
        choices=[1, -1],
        default=-1,
        help="weight of rows whose denominator value is exactly zero",
    )

    p_verify = sub.add_parser("verify", parents=[common], help="check that a pair is a weak interpolation")
    p_verify.add_argument("--pair", help='JSON file {"a": "...", "b": "..."}')
    p_verify.add_argument("-a", dest="a_expr", help="numerator polynomial")
    p_verify.add_argument("-b", dest="b_expr", help="denominator polynomial")
    return parser


def _configure(args) -> Problem:
    p = load_problem(args.input)
    xi = p.order.xi if args.xi is None else args.xi
    if args.varorder:
        try:
            order = OrderXi.from_names(xi, [v.strip() for v in args.varorder.split(",")], p.varnames)
        except ValueError as exc:
            raise ProblemError(str(exc)) from None
    else:
        order = OrderXi(xi, p.order.varorder)
    changes = {"order": order}
    if args.chain:
        changes["chain_order"] = ChainOrder(args.chain)
    if args.at:
        changes["evaluate_at"] = _parse_point(args.at, p)
    return replace(p, **changes)


def _parse_point(text: str, p: Problem):
    parts = [t for t in text.split(",") if t.strip()]
    if len(parts) != p.n:
        raise ProblemError(f"--at needs {p.n} coordinates, got {len(parts)}")
    try:
        return tuple(coerce(t, p.field_mode) for t in parts)
    except ValueError as exc:
        raise ProblemError(str(exc)) from None


def _fmt_point(Y) -> str:
    return "(" + ", ".join(format_scalar(c) for c in Y) + ")"


def _convert(p: Problem):
    return Fraction if p.field_mode is FieldMode.EXACT else float


# solve


def solve_result(p: Problem, st: BasisState, use_monic: bool, zt: ZeroTest) -> dict:
    basis = [monic(e, st.order) if use_monic else e for e in st.basis]
    rep, rep_error = None, None
    try:
        rep = pick_representative(st, p, p.evaluate_at, zt)
        if use_monic:
            rep = monic(rep, st.order)
    except NoRepresentative as exc:
        rep_error = str(exc)
    return {
        "variables": list(p.varnames),
        "field": p.field_mode.value,
        "xi": st.order.xi,
        "varorder": [p.varnames[i] for i in st.order.varorder],
        "constraints": p.N,
        "basis": [
            {"lt": leading_term(e, st.order).render(p.varnames), "a": e.a.to_str(), "b": e.b.to_str()} for e in basis
        ],
        "family": family_statement(st),
        "representative": None if rep is None else {"a": rep.a.to_str(), "b": rep.b.to_str()},
        "representative_error": rep_error,
    }


def render_solve(result: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(result, indent=2) + "\n"
    order = " < ".join(result["varorder"])
    lines = [
        f"variables: {', '.join(result['variables'])}  field: {result['field']}  xi: {result['xi']}  lex: {order}",
        f"constraints: {result['constraints']}",
        f"minimal Groebner basis ({len(result['basis'])} elements, ascending by leading term):",
    ]
    for j, e in enumerate(result["basis"], 1):
        lines.append(f"  [{j}] LT {e['lt']}")
        lines.append(f"      a_{j} = {e['a']}")
        lines.append(f"      b_{j} = {e['b']}")
    lines.append(f"family: {result['family']}")
    rep = result["representative"]
    if rep is None:
        lines.append(f"representative: none ({result['representative_error']})")
    else:
        lines.append(f"representative: a(X) = {rep['a']}")
        lines.append(f"                b(X) = {rep['b']}")
    return "\n".join(lines) + "\n"


# eval


def eval_rows(p: Problem, zt: ZeroTest, zero_sign: int):
    if p.evaluate_at is None:
        raise ProblemError("eval needs a query point: use --at or 'evaluate_at' in the file")
    for i, node in enumerate(p.nodes):
        if not node.is_simple:
            raise ProblemError(f"node {i}: eval supports value-only data; use solve for derivative data")
    zero = (0,) * p.n
    points = [node.point for node in p.nodes]
    values = [node.data[zero] for node in p.nodes]
    st = init_state(points, values, p.evaluate_at, p.order, zt)
    rows = []
    for i in range(st.L):
        step(st)
        rows.append((i + 1, points[i], values[i], estimate(st, zero_sign).value))
    return rows


def render_eval(rows, fmt: str) -> str:
    if fmt == "json":
        doc = [
            {"index": i, "point": [format_scalar(c) for c in pt], "value": format_scalar(v), "estimate": format_scalar(e)}
            for i, pt, v, e in rows
        ]
        return json.dumps({"steps": doc, "final": format_scalar(rows[-1][3]) if rows else None}, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", "point", "value", "estimate"])
        for i, pt, v, e in rows:
            w.writerow([i, _fmt_point(pt), format_scalar(v), format_scalar(e)])
        return buf.getvalue()
    lines = [f"{'i':>3}  {'point':<24} {'value':<24} estimate"]
    for i, pt, v, e in rows:
        lines.append(f"{i:>3}  {_fmt_point(pt):<24} {format_scalar(v):<24} {format_scalar(e)}")
    if rows:
        lines.append(_final(rows[-1][3]))
    return "\n".join(lines) + "\n"


def _final(value) -> str:
    if isinstance(value, float):
        return f"{value:.10g}"
    return format_scalar(value)


# verify


def _read_pair(args, p: Problem) -> PairElement:
    if args.pair:
        try:
            doc = json.loads(Path(args.pair).read_text(encoding="utf-8"))
            a_text, b_text = doc["a"], doc["b"]
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise ProblemError(f"cannot read pair file: {exc}") from None
    elif args.a_expr is not None and args.b_expr is not None:
        a_text, b_text = args.a_expr, args.b_expr
    else:
        raise ProblemError("verify needs --pair FILE or both -a and -b")
    try:
        conv = _convert(p)
        return PairElement(Poly.parse(a_text, p.varnames, conv), Poly.parse(b_text, p.varnames, conv))
    except (ValueError, ZeroDivisionError) as exc:
        raise ProblemError(f"cannot parse pair: {exc}") from None


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse reports usage errors with status 2, which is reserved here
        return EXIT_INPUT if exc.code == 2 else (exc.code or EXIT_OK)
    out = sys.stdout
    try:
        zt = ZeroTest(args.abs_tol, args.rel_tol)
        p = _configure(args)
        if args.command == "solve":
            st = solve(p, zt)
            result = solve_result(p, st, args.monic, zt)
            out.write(render_solve(result, args.format))
            return EXIT_OK if result["representative"] is not None else EXIT_NO_REPRESENTATIVE
        if args.command == "eval":
            rows = eval_rows(p, zt, args.zero_sign)
            out.write(render_eval(rows, args.format))
            return EXIT_OK
        pair = _read_pair(args, p)
        ok = verify_weak(pair, p, zt)
        out.write(("weak interpolation: yes" if ok else "weak interpolation: no") + "\n")
        return EXIT_OK if ok else EXIT_NOT_WEAK
    except (ProblemError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except DegenerateDenominator as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE


if __name__ == "__main__":
    sys.exit(main())
