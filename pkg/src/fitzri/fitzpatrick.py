"""Incremental minimal Groebner basis of the weak-interpolation module.

Starting from {(1, 0), (0, 1)}, each constraint ``a = b*h_l (mod I_{l,j})``
cuts the current module down by one dimension. The basis is updated with the
pivot/elimination step: the first element (in ``<_xi`` order) with a nonzero
residue becomes the pivot, later elements are reduced against it, and the
pivot itself is replaced by its products with ``x_s - y_{l,s}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, List, Optional, Sequence, Tuple

from .field import DEFAULT_ZERO_TEST, Scalar, ZeroTest, check_nonzero, scalar_is_zero
from .pairmod import ModTerm, OrderXi, PairElement, leading, leading_term, minimalize
from .poly import Poly, poly_shift, unit
from .problem import Constraint, Problem, build_h, constraints


class NoRepresentative(Exception):
    """No basis element (or pairwise sum) has a denominator free of zeros at the nodes."""

    def __init__(self, state: "BasisState", message: str = "no representative with b(Y_i) != 0 found"):
        super().__init__(message)
        self.state = state


@dataclass(frozen=True)
class BasisState:
    basis: Tuple[PairElement, ...]
    k: int
    order: OrderXi

    @property
    def leading_terms(self) -> List[ModTerm]:
        return [leading_term(e, self.order) for e in self.basis]

    def __len__(self):
        return len(self.basis)


def initial_state(varnames: Sequence[str], order: OrderXi, one: Scalar) -> BasisState:
    zero = Poly.zero(varnames)
    unit_poly = Poly.constant(one, varnames)
    return BasisState((PairElement(unit_poly, zero), PairElement(zero, unit_poly)), 0, order)


def _shifted_residual(e: PairElement, c: Constraint, h: Poly) -> Poly:
    return poly_shift(e.b * h - e.a, c.point)


def residue(e: PairElement, c: Constraint, h: Poly) -> Scalar:
    """Taylor coefficient of b*h - a at the constraint's node, at its new alpha.

    Assumes ``e`` already satisfies every earlier constraint at this node, so
    this single coefficient is the full congruence residue.
    """
    return _shifted_residual(e, c, h).coeff(c.alpha)


def update_basis(st: BasisState, c: Constraint, h: Poly, zt: ZeroTest = DEFAULT_ZERO_TEST) -> BasisState:
    order = st.order
    basis = sorted(st.basis, key=lambda e: order.key(leading_term(e, order)))
    nus, pivot = [], None
    for t, e in enumerate(basis):
        shifted = _shifted_residual(e, c, h)
        nu = shifted.coeff(c.alpha)
        nus.append(nu)
        if pivot is None and check_nonzero(nu, shifted.max_abs_coeff(), zt):
            pivot = t
    if pivot is None:
        return BasisState(tuple(basis), st.k + 1, order)

    piv, piv_nu = basis[pivot], nus[pivot]
    n = len(c.point)
    varnames = piv.varnames
    one = piv_nu / piv_nu
    spawned = []
    for s in order.varorder:
        factor = Poly({unit(n, s): one, (0,) * n: -c.point[s]}, varnames)
        spawned.append(piv.mul_poly(factor))
    reduced = [basis[t] - piv.scale(nus[t] / piv_nu) for t in range(pivot + 1, len(basis))]
    new_basis = minimalize(basis[:pivot] + spawned + reduced, order)
    return BasisState(tuple(new_basis), st.k + 1, order)


def solve_steps(p: Problem, zt: ZeroTest = DEFAULT_ZERO_TEST) -> Iterator[BasisState]:
    """Yield the basis before any constraint and after each one."""
    st = initial_state(p.varnames, p.order, p.one)
    yield st
    hs = [build_h(node, p.varnames, p.one) for node in p.nodes]
    for c in constraints(p):
        st = update_basis(st, c, hs[c.node_index], zt)
        yield st


def solve(p: Problem, zt: ZeroTest = DEFAULT_ZERO_TEST) -> BasisState:
    st = None
    for st in solve_steps(p, zt):
        pass
    return st


def _b_nonzero(e: PairElement, points, zt: ZeroTest) -> bool:
    scale = e.b.max_abs_coeff()
    return all(not scalar_is_zero(e.b(Y), scale, zt) for Y in points)


def pick_representative(
    st: BasisState, p: Problem, Y0: Optional[Sequence[Scalar]] = None, zt: ZeroTest = DEFAULT_ZERO_TEST
) -> PairElement:
    """First basis element, then first pairwise sum, whose b is nonzero at all nodes (and Y0)."""
    points = [node.point for node in p.nodes]
    if Y0 is not None:
        points.append(tuple(Y0))
    for e in st.basis:
        if _b_nonzero(e, points, zt):
            return e
    for e1, e2 in combinations(st.basis, 2):
        e = e1 + e2
        if _b_nonzero(e, points, zt):
            return e
    raise NoRepresentative(st)


def verify_weak(e: PairElement, p: Problem, zt: ZeroTest = DEFAULT_ZERO_TEST) -> bool:
    for node in p.nodes:
        h = build_h(node, p.varnames, p.one)
        shifted = poly_shift(e.b * h - e.a, node.point)
        scale = shifted.max_abs_coeff()
        for alpha in node.data:
            if not scalar_is_zero(shifted.coeff(alpha), scale, zt):
                return False
    return True


def monic(e: PairElement, order: OrderXi) -> PairElement:
    _, lc = leading(e, order)
    return e.scale(1 / lc)


def family_statement(st: BasisState) -> str:
    m = len(st.basis)
    terms = " + ".join(f"c_{j}*(a_{j}, b_{j})" for j in range(1, m + 1))
    return f"(a, b) = {terms}, with c_1, ..., c_{m} arbitrary polynomials"
