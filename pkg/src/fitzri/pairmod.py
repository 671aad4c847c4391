"""Pairs (a, b) in P^2 and the module term order ``<_xi``.

The order compares ``X^alpha*FIRST`` against ``X^beta*SECOND`` by
``|alpha| <= |beta| + xi``; inside one component it is graded lex with a
configurable variable order. All of this folds into one sort key
``(effective degree, component, lex exponents)`` where the effective degree
of a SECOND term is ``|beta| + xi``. Ties in effective degree resolve to
FIRST, matching the non-strict inequality.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import List, NamedTuple, Sequence, Tuple

from .field import Scalar
from .poly import Monomial, Poly, mono_divides, mono_mul

LESS, EQUAL, GREATER = -1, 0, 1


class Component(IntEnum):
    FIRST = 0
    SECOND = 1


FIRST = Component.FIRST
SECOND = Component.SECOND


class ModTerm(NamedTuple):
    mono: Monomial
    component: Component

    def times(self, u: Monomial) -> "ModTerm":
        return ModTerm(mono_mul(self.mono, u), self.component)

    def render(self, varnames: Sequence[str]) -> str:
        factors = []
        for name, e in zip(varnames, self.mono):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        m = "*".join(factors) or "1"
        return f"({m}, 0)" if self.component == FIRST else f"(0, {m})"


@dataclass(frozen=True)
class OrderXi:
    """``<_xi`` with lex taken over ``varorder`` listed from smallest to largest.

    ``varorder`` holds variable indices; ``(1, 0)`` over variables ``x, y``
    means ``y < x``.
    """

    xi: int
    varorder: Tuple[int, ...]

    @classmethod
    def from_names(cls, xi: int, varorder: Sequence[str], varnames: Sequence[str]) -> "OrderXi":
        varnames = list(varnames)
        if sorted(varorder) != sorted(varnames) or len(set(varorder)) != len(varorder):
            raise ValueError(f"varorder {list(varorder)} is not a permutation of {varnames}")
        return cls(int(xi), tuple(varnames.index(v) for v in varorder))

    def lex_key(self, m: Monomial) -> Tuple[int, ...]:
        return tuple(m[i] for i in reversed(self.varorder))

    def key(self, t: ModTerm):
        deg = sum(t.mono)
        if t.component == SECOND:
            deg += self.xi
        return (deg, int(t.component), self.lex_key(t.mono))

    def mono_key(self, m: Monomial):
        return (sum(m), self.lex_key(m))


def cmp_modterm(s: ModTerm, t: ModTerm, order: OrderXi) -> int:
    if len(s.mono) != len(t.mono):
        raise ValueError("arity mismatch")
    ks, kt = order.key(s), order.key(t)
    if ks < kt:
        return LESS
    if ks > kt:
        return GREATER
    return EQUAL


def modterm_divides(s: ModTerm, t: ModTerm) -> bool:
    return s.component == t.component and mono_divides(s.mono, t.mono)


@dataclass(frozen=True)
class PairElement:
    a: Poly
    b: Poly

    def __post_init__(self):
        if self.a.varnames != self.b.varnames:
            raise ValueError("components use different variables")

    @property
    def varnames(self):
        return self.a.varnames

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def __add__(self, other: "PairElement") -> "PairElement":
        return PairElement(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "PairElement") -> "PairElement":
        return PairElement(self.a - other.a, self.b - other.b)

    def scale(self, c: Scalar) -> "PairElement":
        return PairElement(self.a * c, self.b * c)

    def mul_poly(self, p: Poly) -> "PairElement":
        return PairElement(self.a * p, self.b * p)

    def mul_monomial(self, u: Monomial) -> "PairElement":
        return PairElement(self.a.mul_monomial(u), self.b.mul_monomial(u))

    def support(self):
        for m, c in self.a.items():
            yield ModTerm(m, FIRST), c
        for m, c in self.b.items():
            yield ModTerm(m, SECOND), c

    def evaluate(self, Y) -> Tuple[Scalar, Scalar]:
        return self.a(Y), self.b(Y)

    def render(self) -> str:
        return f"({self.a.to_str()}, {self.b.to_str()})"


def leading(e: PairElement, order: OrderXi) -> Tuple[ModTerm, Scalar]:
    """Leading term and leading coefficient of a nonzero pair."""
    if e.is_zero():
        raise ValueError("zero element has no leading term")
    return max(e.support(), key=lambda tc: order.key(tc[0]))


def leading_term(e: PairElement, order: OrderXi) -> ModTerm:
    return leading(e, order)[0]


def minimalize(G: Sequence[PairElement], order: OrderXi) -> List[PairElement]:
    """Drop elements whose LT is divisible by another retained LT; sort ascending.

    Equal LTs keep the earliest element. Leading coefficients are left alone.
    """
    ranked = sorted(
        ((leading_term(g, order), idx, g) for idx, g in enumerate(G)),
        key=lambda r: (order.key(r[0]), r[1]),
    )
    kept: List[Tuple[ModTerm, PairElement]] = []
    for lt, _, g in ranked:
        # a divisor always sorts no later than its multiple
        if not any(modterm_divides(k, lt) for k, _ in kept):
            kept.append((lt, g))
    return [g for _, g in kept]
