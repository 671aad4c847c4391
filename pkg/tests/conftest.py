import sys
from fractions import Fraction
from pathlib import Path

from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from fitzri.problem import make_problem  # noqa: E402

ROOT = Path(__file__).resolve().parent.parent
PROBLEMS = ROOT / "problems"

small_frac = st.fractions(min_value=-5, max_value=5, max_denominator=6)
exponent = st.tuples(st.integers(0, 3), st.integers(0, 3))


@st.composite
def polys2(draw, max_terms=5):
    from fitzri.poly import Poly

    terms = draw(st.dictionaries(exponent, small_frac, max_size=max_terms))
    return Poly(terms, ("x", "y"))


# lower sets of size <= 3 in two variables, each listed as a valid chain
LOWER_SETS = [
    [(0, 0)],
    [(0, 0), (1, 0)],
    [(0, 0), (0, 1)],
    [(0, 0), (1, 0), (2, 0)],
    [(0, 0), (0, 1), (0, 2)],
    [(0, 0), (1, 0), (0, 1)],
]


@st.composite
def exact_problems(draw, max_nodes=4, max_xi=1):
    L = draw(st.integers(1, max_nodes))
    coords = st.tuples(st.integers(-3, 3), st.integers(-3, 3))
    points = draw(st.lists(coords, min_size=L, max_size=L, unique=True))
    nodes = []
    for pt in points:
        A = draw(st.sampled_from(LOWER_SETS))
        nodes.append((pt, {a: draw(small_frac) for a in A}))
    xi = draw(st.integers(0, max_xi))
    varorder = draw(st.sampled_from([("x", "y"), ("y", "x")]))
    return make_problem(("x", "y"), nodes, xi=xi, varorder=varorder)


@st.composite
def cauchy_data(draw, max_nodes=8):
    L = draw(st.integers(1, max_nodes))
    coords = st.tuples(st.integers(-4, 4), st.integers(-4, 4))
    pts = draw(st.lists(coords, min_size=L + 1, max_size=L + 1, unique=True))
    Y0, points = pts[0], pts[1:]
    values = [draw(st.fractions(min_value=-4, max_value=4, max_denominator=4)) for _ in points]
    varorder = draw(st.sampled_from([("x", "y"), ("y", "x")]))
    xi = draw(st.integers(0, 1))
    return points, [Fraction(v) for v in values], Y0, varorder, xi


# acceptance results, printed once at the end of the run
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, title, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {title}  {detail}")
