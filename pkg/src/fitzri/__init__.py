"""Multivariate osculatory rational interpolation via incremental Groebner bases."""

from .field import ConditioningWarning, FieldMode, ZeroTest
from .fitzpatrick import BasisState, NoRepresentative, pick_representative, solve, solve_steps, verify_weak
from .neville import DegenerateDenominator, estimate, init_state, run, step
from .pairmod import FIRST, SECOND, ModTerm, OrderXi, PairElement, leading_term, minimalize
from .poly import Poly
from .problem import ChainOrder, Problem, ProblemError, cauchy_problem, load_problem, make_problem

__all__ = [
    "BasisState", "ChainOrder", "ConditioningWarning", "DegenerateDenominator", "FIRST", "FieldMode",
    "ModTerm", "NoRepresentative", "OrderXi", "PairElement", "Poly", "Problem", "ProblemError", "SECOND",
    "ZeroTest", "cauchy_problem", "estimate", "init_state", "leading_term", "load_problem", "make_problem",
    "minimalize", "pick_representative", "run", "solve", "solve_steps", "step", "verify_weak",
]
