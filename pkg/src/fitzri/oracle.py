"""Brute-force check of the solver by dense exact linear algebra.

The weak-interpolation conditions are linear in the coefficients of ``a``
and ``b``. Inside a degree box they form a homogeneous system whose null
space is computed by fraction-exact Gaussian elimination. This path shares
nothing with the incremental solver beyond Taylor-coefficient extraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .fitzpatrick import BasisState
from .field import FieldMode
from .pairmod import PairElement
from .poly import Monomial, Poly, monomials_up_to, taylor_coeff
from .problem import Problem, build_h

MAX_UNKNOWNS = 200


@dataclass(frozen=True)
class DegreeBox:
    max_deg_a: int
    max_deg_b: int

    def __post_init__(self):
        if self.max_deg_a < 0 or self.max_deg_b < 0:
            raise ValueError("degree bounds must be nonnegative")


def box_compatible(box: DegreeBox, xi: int) -> bool:
    """True when the box is downward closed under ``<_xi``.

    Only then is every bounded weak interpolation a combination of basis
    multiples that themselves fit in the box.
    """
    return box.max_deg_b + xi <= box.max_deg_a <= box.max_deg_b + xi + 1


def rref(rows: List[List[Fraction]], ncols: int) -> Tuple[List[List[Fraction]], List[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    M = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if pr is None:
            continue
        M[r], M[pr] = M[pr], M[r]
        inv = 1 / M[r][c]
        M[r] = [v * inv for v in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(rows: List[List[Fraction]], ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows: List[List[Fraction]], ncols: int) -> List[List[Fraction]]:
    R, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(R, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def _unknowns(p: Problem, box: DegreeBox):
    ma = monomials_up_to(p.n, box.max_deg_a)
    mb = monomials_up_to(p.n, box.max_deg_b)
    return ma, mb


def condition_matrix(p: Problem, box: DegreeBox) -> List[List[Fraction]]:
    if p.field_mode is not FieldMode.EXACT:
        raise ValueError("the oracle runs in exact mode only")
    ma, mb = _unknowns(p, box)
    if len(ma) + len(mb) > MAX_UNKNOWNS:
        raise ValueError(f"degree box {box} needs {len(ma) + len(mb)} unknowns (limit {MAX_UNKNOWNS})")
    rows = []
    for node in p.nodes:
        h = build_h(node, p.varnames, p.one)
        b_images = [Poly({m: Fraction(1)}, p.varnames) * h for m in mb]
        for alpha in node.data:
            row = [-taylor_coeff(Poly({m: Fraction(1)}, p.varnames), node.point, alpha) for m in ma]
            row += [taylor_coeff(q, node.point, alpha) for q in b_images]
            rows.append([Fraction(v) for v in row])
    return rows


def to_vector(e: PairElement, p: Problem, box: DegreeBox) -> List[Fraction]:
    ma, mb = _unknowns(p, box)
    ia = {m: i for i, m in enumerate(ma)}
    ib = {m: i for i, m in enumerate(mb)}
    v = [Fraction(0)] * (len(ma) + len(mb))
    for m, c in e.a.items():
        if m not in ia:
            raise ValueError(f"a-term {m} outside the box")
        v[ia[m]] = Fraction(c)
    for m, c in e.b.items():
        if m not in ib:
            raise ValueError(f"b-term {m} outside the box")
        v[len(ma) + ib[m]] = Fraction(c)
    return v


def from_vector(v: Sequence[Fraction], p: Problem, box: DegreeBox) -> PairElement:
    ma, mb = _unknowns(p, box)
    a = Poly(dict(zip(ma, v[: len(ma)])), p.varnames)
    b = Poly(dict(zip(mb, v[len(ma) :])), p.varnames)
    return PairElement(a, b)


def brute_solutions(p: Problem, box: DegreeBox) -> List[PairElement]:
    """Linear basis of all weak interpolations with deg a <= A and deg b <= B."""
    ma, mb = _unknowns(p, box)
    ncols = len(ma) + len(mb)
    rows = condition_matrix(p, box)
    return [from_vector(v, p, box) for v in nullspace(rows, ncols)]


def _fits(e: PairElement, box: DegreeBox) -> bool:
    return e.a.total_degree() <= box.max_deg_a and e.b.total_degree() <= box.max_deg_b


def box_multiples(basis: Sequence[PairElement], n: int, box: DegreeBox) -> List[PairElement]:
    """Every monomial multiple u*g of a basis element that stays inside the box."""
    out = []
    top = max(box.max_deg_a, box.max_deg_b)
    for g in basis:
        for u in monomials_up_to(n, top):
            e = g.mul_monomial(u)
            if _fits(e, box):
                out.append(e)
    return out


def dims_match(p: Problem, st: BasisState, box: DegreeBox) -> bool:
    """Basis multiples inside the box span exactly the brute-force solution space."""
    if not box_compatible(box, st.order.xi):
        raise ValueError(f"box {box} is not downward closed under xi={st.order.xi}")
    ma, mb = _unknowns(p, box)
    ncols = len(ma) + len(mb)
    rows = condition_matrix(p, box)
    dim = ncols - rank(rows, ncols)
    vecs = [to_vector(e, p, box) for e in box_multiples(st.basis, p.n, box)]
    for v in vecs:
        for row in rows:
            if sum(a * b for a, b in zip(row, v)) != 0:
                return False
    return rank(vecs, ncols) == dim
