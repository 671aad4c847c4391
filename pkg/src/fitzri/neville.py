"""Neville-style evaluation of a Cauchy rational interpolant at one point.

This runs the same pivot/elimination recursion as
:func:`fitzri.fitzpatrick.update_basis` on simple (value-only) data, but each
basis element is represented only by

* its residues ``b_i(Y_j)*f_j - a_i(Y_j)`` at every node ``j``,
* its evaluation pair ``(a_i(Y0), b_i(Y0))`` at the query point, and
* its leading term,

so the interpolant's value at ``Y0`` is obtained without ever forming a
polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .field import DEFAULT_ZERO_TEST, Scalar, ZeroTest, check_nonzero, coerce, mode_of, scalar_is_zero, sgn
from .pairmod import FIRST, SECOND, ModTerm, OrderXi, modterm_divides
from .poly import unit


class DegenerateDenominator(ArithmeticError):
    """The sign-weighted denominator vanished."""


@dataclass
class WRow:
    residues: List[Scalar]
    evalpair: Tuple[Scalar, Scalar]
    lt: ModTerm

    def scale(self) -> float:
        return float(max((abs(r) for r in self.residues), default=0))


@dataclass
class Estimate:
    value: Scalar
    per_row: List[Tuple[Scalar, Scalar, Optional[Scalar]]]


@dataclass
class NevilleState:
    rows: List[WRow]
    k: int
    points: Tuple[Tuple[Scalar, ...], ...]
    values: Tuple[Scalar, ...]
    Y0: Tuple[Scalar, ...]
    order: OrderXi
    zt: ZeroTest = field(default=DEFAULT_ZERO_TEST)

    @property
    def L(self) -> int:
        return len(self.points)

    def sort_rows(self) -> None:
        self.rows.sort(key=lambda r: self.order.key(r.lt))


def init_state(
    points: Sequence[Sequence[Scalar]],
    values: Sequence[Scalar],
    Y0: Sequence[Scalar],
    order: OrderXi,
    zt: ZeroTest = DEFAULT_ZERO_TEST,
) -> NevilleState:
    points = tuple(tuple(p) for p in points)
    if len(set(points)) != len(points):
        raise ValueError("duplicate interpolation points")
    if len(values) != len(points):
        raise ValueError("one value per point is required")
    n = len(Y0)
    if any(len(p) != n for p in points):
        raise ValueError("points and query point differ in dimension")
    sample = values[0] if values else (Y0[0] if n else 0)
    one, zero = coerce(1, mode_of(sample)), coerce(0, mode_of(sample))
    const = (0,) * n
    rows = [
        WRow([-one] * len(points), (one, zero), ModTerm(const, FIRST)),
        WRow([v * one for v in values], (zero, one), ModTerm(const, SECOND)),
    ]
    return NevilleState(rows, 0, points, tuple(values), tuple(Y0), order, zt)


def step(st: NevilleState) -> NevilleState:
    """Consume the next point in place and return the state."""
    if st.k >= st.L:
        raise ValueError("all points already consumed")
    k = st.k  # 0-based column of the point being added
    st.k += 1
    st.sort_rows()
    rows = st.rows
    pivot = None
    for i, row in enumerate(rows):
        if check_nonzero(row.residues[k], row.scale(), st.zt):
            pivot = i
            break
    if pivot is None:
        return st

    prow = rows[pivot]
    pk = prow.residues[k]
    for row in rows[pivot + 1 :]:
        ratio = row.residues[k] / pk
        if ratio == 0:
            continue
        row.residues = [r - ratio * q for r, q in zip(row.residues, prow.residues)]
        row.evalpair = (row.evalpair[0] - ratio * prow.evalpair[0], row.evalpair[1] - ratio * prow.evalpair[1])

    Yk = st.points[k]
    n = len(Yk)
    spawned = []
    for s in st.order.varorder:
        d0 = st.Y0[s] - Yk[s]
        spawned.append(
            WRow(
                [r * (Yj[s] - Yk[s]) for r, Yj in zip(prow.residues, st.points)],
                (prow.evalpair[0] * d0, prow.evalpair[1] * d0),
                prow.lt.times(unit(n, s)),
            )
        )
    st.rows = _prune(rows[:pivot] + spawned + rows[pivot + 1 :], st.order)
    return st


def _prune(rows: List[WRow], order: OrderXi) -> List[WRow]:
    ranked = sorted(enumerate(rows), key=lambda ir: (order.key(ir[1].lt), ir[0]))
    kept: List[WRow] = []
    for _, row in ranked:
        if not any(modterm_divides(k.lt, row.lt) for k in kept):
            kept.append(row)
    return kept


def estimate(st: NevilleState, zero_sign: int = -1) -> Estimate:
    """Sign-weighted combination sum sgn(b_i)*a_i / sum sgn(b_i)*b_i over current rows.

    Rows whose ``b_i(Y0)`` is exactly zero still contribute ``zero_sign * a_i``
    to the numerator. The default of -1 is the weighting that reproduces the
    reference step-by-step estimates; pass +1 for the ``sgn(0) = 1``
    convention.
    """
    if not st.rows:
        raise ValueError("no rows")
    if zero_sign not in (1, -1):
        raise ValueError("zero_sign must be +1 or -1")
    num = den = 0
    per_row = []
    for row in st.rows:
        a, b = row.evalpair
        w = zero_sign if b == 0 else sgn(b)
        num = num + w * a
        den = den + w * b
        ratio = None if scalar_is_zero(b, abs(a), st.zt) else a / b
        per_row.append((a, b, ratio))
    if scalar_is_zero(den, float(abs(num)), st.zt):
        raise DegenerateDenominator(f"sign-weighted denominator {den!r} vanishes")
    return Estimate(num / den, per_row)


def run(
    points: Sequence[Sequence[Scalar]],
    values: Sequence[Scalar],
    Y0: Sequence[Scalar],
    order: OrderXi,
    zt: ZeroTest = DEFAULT_ZERO_TEST,
    zero_sign: int = -1,
) -> List[Estimate]:
    """Estimates after each of the L steps."""
    st = init_state(points, values, Y0, order, zt)
    out = []
    for _ in range(st.L):
        step(st)
        out.append(estimate(st, zero_sign))
    return out
