"""Interpolation problems: nodes, lower sets, data, and the constraint chain."""

from __future__ import annotations

import json
from enum import Enum
from dataclasses import dataclass, replace
from fractions import Fraction
from pathlib import Path
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from .field import FieldMode, Scalar, coerce, format_scalar
from .pairmod import OrderXi
from .poly import Monomial, Poly, shifted_power

LowerSet = FrozenSet[Monomial]


class ProblemError(ValueError):
    """Invalid problem input."""


class ChainOrder(str, Enum):
    GRADED = "graded"  # total degree, then lex under the variable order
    LISTED = "listed"  # the order the data was given in


def is_lower_set(A: Iterable[Monomial]) -> bool:
    A = {tuple(a) for a in A}
    if len({len(a) for a in A}) > 1:
        raise ValueError("monomials of mixed arity")
    return not missing_divisors(A)


def missing_divisors(A: Iterable[Monomial]) -> Dict[Monomial, List[Monomial]]:
    """Map each element of A to its immediate divisors that are absent from A."""
    A = {tuple(a) for a in A}
    out = {}
    for a in sorted(A):
        gaps = []
        for i, e in enumerate(a):
            if e:
                down = a[:i] + (e - 1,) + a[i + 1 :]
                if down not in A:
                    gaps.append(down)
        if gaps:
            out[a] = gaps
    return out


def chain(A: Iterable[Monomial], order: OrderXi) -> List[Monomial]:
    """Order a lower set so every prefix is again a lower set (degree, then lex)."""
    A = {tuple(a) for a in A}
    if not is_lower_set(A):
        raise ProblemError(f"not a lower set: {sorted(A)}")
    return sorted(A, key=order.mono_key)


def listed_chain(seq: Sequence[Monomial]) -> List[Monomial]:
    """Validate that every prefix of ``seq`` is a lower set and return it."""
    out = []
    for alpha in seq:
        out.append(tuple(alpha))
        if not is_lower_set(out):
            raise ProblemError(f"listed data order is not a chain of lower sets at alpha {list(alpha)}")
    return out


@dataclass(frozen=True)
class Node:
    point: Tuple[Scalar, ...]
    data: Mapping[Monomial, Scalar]

    @property
    def mult(self) -> LowerSet:
        return frozenset(self.data)

    @property
    def is_simple(self) -> bool:
        return set(self.data) == {(0,) * len(self.point)}


@dataclass(frozen=True)
class Constraint:
    node_index: int  # 0-based position in Problem.nodes
    point: Tuple[Scalar, ...]
    alpha: Monomial
    prefix: LowerSet


@dataclass(frozen=True)
class Problem:
    varnames: Tuple[str, ...]
    field_mode: FieldMode
    nodes: Tuple[Node, ...]
    order: OrderXi
    evaluate_at: Optional[Tuple[Scalar, ...]] = None
    chain_order: ChainOrder = ChainOrder.GRADED

    def __post_init__(self):
        validate(self)

    @property
    def n(self) -> int:
        return len(self.varnames)

    @property
    def N(self) -> int:
        return sum(len(node.data) for node in self.nodes)

    @property
    def one(self) -> Scalar:
        return coerce(1, self.field_mode)

    def with_order(self, order: OrderXi) -> "Problem":
        return replace(self, order=order)

    def scalar(self, value) -> Scalar:
        return coerce(value, self.field_mode)


def validate(p: Problem) -> None:
    n = len(p.varnames)
    if n < 1:
        raise ProblemError("at least one variable is required")
    if len(set(p.varnames)) != n:
        raise ProblemError(f"duplicate variable names {list(p.varnames)}")
    if len(p.order.varorder) != n or sorted(p.order.varorder) != list(range(n)):
        raise ProblemError("variable order is not a permutation of the variables")
    seen = set()
    for i, node in enumerate(p.nodes):
        if len(node.point) != n:
            raise ProblemError(f"node {i}: point has dimension {len(node.point)}, expected {n}")
        key = tuple(node.point)
        if key in seen:
            raise ProblemError(f"node {i}: duplicate point {[format_scalar(c) for c in key]}")
        seen.add(key)
        if not node.data:
            raise ProblemError(f"node {i}: no data")
        for alpha in node.data:
            if len(alpha) != n or any(e < 0 for e in alpha):
                raise ProblemError(f"node {i}: bad alpha {list(alpha)}")
        gaps = missing_divisors(node.data)
        if gaps:
            offending = ", ".join(f"{list(a)} (missing {[list(g) for g in gs]})" for a, gs in gaps.items())
            raise ProblemError(f"node {i}: data is not a lower set; offending alpha: {offending}")
        if p.chain_order is ChainOrder.LISTED:
            try:
                listed_chain(list(node.data))
            except ProblemError as exc:
                raise ProblemError(f"node {i}: {exc}") from None
    if p.evaluate_at is not None and len(p.evaluate_at) != n:
        raise ProblemError(f"evaluate_at has dimension {len(p.evaluate_at)}, expected {n}")


def build_h(node: Node, varnames: Sequence[str], one: Scalar = Fraction(1)) -> Poly:
    """sum over alpha in the lower set of f^(alpha) * (X - Y)^alpha, expanded."""
    h = Poly.zero(varnames)
    for alpha, value in node.data.items():
        h = h + shifted_power(node.point, alpha, varnames, one) * value
    return h


def constraints(p: Problem) -> List[Constraint]:
    """The N constraints: nodes in input order, then chain order inside each node."""
    out = []
    for i, node in enumerate(p.nodes):
        prefix = set()
        if p.chain_order is ChainOrder.LISTED:
            ordered = listed_chain(list(node.data))
        else:
            ordered = chain(node.data, p.order)
        for alpha in ordered:
            prefix.add(alpha)
            out.append(Constraint(i, node.point, alpha, frozenset(prefix)))
    return out


def make_problem(
    varnames: Sequence[str],
    nodes: Iterable[Tuple[Sequence, Mapping[Sequence[int], object]]],
    *,
    field_mode: FieldMode | str = FieldMode.EXACT,
    xi: int = 0,
    varorder: Optional[Sequence[str]] = None,
    evaluate_at: Optional[Sequence] = None,
    chain_order: ChainOrder | str = ChainOrder.GRADED,
) -> Problem:
    """Convenience constructor; values may be ints, Fractions, floats or strings."""
    mode = FieldMode(field_mode)
    varnames = tuple(varnames)
    order = OrderXi.from_names(xi, varorder or varnames, varnames)
    built = []
    for point, data in nodes:
        built.append(
            Node(
                tuple(coerce(c, mode) for c in point),
                {tuple(int(e) for e in a): coerce(v, mode) for a, v in data.items()},
            )
        )
    at = tuple(coerce(c, mode) for c in evaluate_at) if evaluate_at is not None else None
    return Problem(varnames, mode, tuple(built), order, at, ChainOrder(chain_order))


def cauchy_problem(varnames, points, values, **kw) -> Problem:
    zero = (0,) * len(varnames)
    return make_problem(varnames, [(pt, {zero: v}) for pt, v in zip(points, values)], **kw)


def problem_from_dict(doc: Mapping) -> Problem:
    try:
        varnames = doc["variables"]
        mode = FieldMode(doc.get("field", "rational"))
        raw_nodes = doc.get("nodes", [])
    except (KeyError, ValueError) as exc:
        raise ProblemError(f"malformed problem document: {exc}") from None
    if not isinstance(varnames, list) or not all(isinstance(v, str) for v in varnames):
        raise ProblemError("'variables' must be a list of names")
    nodes = []
    try:
        for i, raw in enumerate(raw_nodes):
            data = {}
            for entry in raw["data"]:
                alpha = tuple(int(e) for e in entry["alpha"])
                if alpha in data:
                    raise ProblemError(f"node {i}: alpha {list(alpha)} given twice")
                data[alpha] = _literal(entry["value"])
            nodes.append((tuple(_literal(c) for c in raw["point"]), data))
        at = doc.get("evaluate_at")
        return make_problem(
            varnames,
            nodes,
            field_mode=mode,
            xi=int(doc.get("xi", 0)),
            varorder=doc.get("varorder"),
            evaluate_at=[_literal(c) for c in at] if at is not None else None,
            chain_order=doc.get("chain", "graded"),
        )
    except ProblemError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ProblemError(f"malformed problem document: {exc}") from None


def _literal(v):
    # numeric literals are strings in the file format; bare JSON numbers are tolerated
    if isinstance(v, bool):
        raise ValueError(f"not a number: {v!r}")
    if isinstance(v, (int, float)):
        return str(v)
    return v


def load_problem(path: str | Path) -> Problem:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ProblemError(f"{path}: invalid JSON ({exc})") from None
    return problem_from_dict(doc)


def problem_to_dict(p: Problem) -> dict:
    doc = {
        "variables": list(p.varnames),
        "field": p.field_mode.value,
        "xi": p.order.xi,
        "varorder": [p.varnames[i] for i in p.order.varorder],
        "nodes": [
            {
                "point": [format_scalar(c) for c in node.point],
                "data": [{"alpha": list(a), "value": format_scalar(v)} for a, v in node.data.items()],
            }
            for node in p.nodes
        ],
    }
    if p.chain_order is not ChainOrder.GRADED:
        doc["chain"] = p.chain_order.value
    if p.evaluate_at is not None:
        doc["evaluate_at"] = [format_scalar(c) for c in p.evaluate_at]
    return doc
