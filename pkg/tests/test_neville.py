from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import cauchy_data
from fitzri.field import scalar_is_zero
from fitzri.neville import DegenerateDenominator, NevilleState, WRow, estimate, init_state, run, step
from fitzri.pairmod import FIRST, SECOND, ModTerm, OrderXi

YX = OrderXi(0, (1, 0))
F = Fraction


def test_init_rows():
    st = init_state([(0, 0), (1, 0)], [F(2), F(3)], (F(1, 2), F(1, 2)), YX)
    assert [r.residues for r in st.rows] == [[-1, -1], [2, 3]]
    assert [r.evalpair for r in st.rows] == [(1, 0), (0, 1)]
    assert [r.lt for r in st.rows] == [ModTerm((0, 0), FIRST), ModTerm((0, 0), SECOND)]


def test_init_rejects_bad_input():
    with pytest.raises(ValueError):
        init_state([(0, 0), (0, 0)], [F(1), F(2)], (0, 0), YX)
    with pytest.raises(ValueError):
        init_state([(0, 0)], [F(1), F(2)], (0, 0), YX)
    with pytest.raises(ValueError):
        init_state([(0, 0, 0)], [F(1)], (0, 0), YX)


def test_first_step_by_hand():
    # one point (0, 0) with value f, query (dx, dy): rows (f, 1), (dy, 0)*, (dx, 0)*
    f, dx, dy = F(5), F(1, 4), F(1, 3)
    st = step(init_state([(0, 0)], [f], (dx, dy), YX))
    assert [(r.evalpair, r.lt) for r in st.rows] == [
        ((f, 1), ModTerm((0, 0), SECOND)),
        ((dy, 0), ModTerm((0, 1), FIRST)),
        ((dx, 0), ModTerm((1, 0), FIRST)),
    ]
    assert estimate(st).value == f - dx - dy
    assert estimate(st, zero_sign=1).value == f + dx + dy
    with pytest.raises(ValueError):
        step(st)


def test_estimate_reports_row_ratios():
    st = step(init_state([(0, 0)], [F(5)], (F(1), F(1)), YX))
    per_row = estimate(st).per_row
    assert per_row[0] == (5, 1, 5)
    assert per_row[1][2] is None


def test_degenerate_denominator():
    st = NevilleState([WRow([F(0)], (F(1), F(0)), ModTerm((0, 0), FIRST))], 1, ((0, 0),), (F(1),), (0, 0), YX)
    with pytest.raises(DegenerateDenominator):
        estimate(st)
    with pytest.raises(ValueError):
        estimate(st, zero_sign=0)


def test_constant_data_is_reproduced():
    pts = [(0, 0), (1, 0), (0, 1), (1, 1), (2, 1)]
    est = run(pts, [F(3)] * 5, (F(1, 2), F(2)), YX)
    ratios = [r for _, _, r in est[-1].per_row if r is not None]
    assert ratios == [3]
    # rows with b(Y0) = 0 still feed the weighted numerator, so the combined value differs
    assert est[-1].value != 3


@settings(max_examples=60, deadline=None)
@given(cauchy_data())
def test_zero_column_invariant(data):
    points, values, Y0, varorder, xi = data
    order = OrderXi(xi, (0, 1) if varorder == ("x", "y") else (1, 0))
    st = init_state(points, values, Y0, order)
    for _ in range(len(points)):
        step(st)
        for row in st.rows:
            assert all(r == 0 for r in row.residues[: st.k])


def test_zero_column_invariant_float():
    pts = [(1.75, 1.75), (2.25, 1.75), (1.75, 2.25), (2.25, 2.25), (1.85, 1.85)]
    vals = [x * x - y / 3 + 1 / (x + y) for x, y in pts]
    st = init_state(pts, vals, (2.0, 2.0), YX)
    for _ in pts:
        step(st)
        for row in st.rows:
            assert all(scalar_is_zero(r, row.scale() + 1) for r in row.residues[: st.k])
