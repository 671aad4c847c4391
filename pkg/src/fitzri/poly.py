"""Sparse multivariate polynomials over the exact or float field.

A monomial is a plain tuple of exponents; a :class:`Poly` maps monomials to
nonzero coefficients. Term order is never stored here -- callers sort with an
explicit key (see :mod:`fitzri.pairmod`).
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import comb
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from .field import Scalar, ZeroTest, format_scalar, scalar_is_zero

Monomial = Tuple[int, ...]


def mono_degree(m: Monomial) -> int:
    return sum(m)


def mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(m1, m2))


def mono_divides(m1: Monomial, m2: Monomial) -> bool:
    return all(a <= b for a, b in zip(m1, m2))


def unit(n: int, i: int) -> Monomial:
    return tuple(1 if j == i else 0 for j in range(n))


def monomials_up_to(n: int, degree: int):
    """All exponent tuples of total degree <= degree, graded then reverse-lex."""
    out = []

    def rec(prefix, left, slots):
        if slots == 1:
            out.append(prefix + (left,))
            return
        for e in range(left, -1, -1):
            rec(prefix + (e,), left - e, slots - 1)

    for d in range(degree + 1):
        if n == 0:
            if d == 0:
                out.append(())
            continue
        rec((), d, n)
    return out


class Poly:
    """Immutable sparse polynomial in ``len(varnames)`` variables."""

    __slots__ = ("_terms", "varnames")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None, varnames: Sequence[str] = ("x",)):
        self.varnames = tuple(varnames)
        n = len(self.varnames)
        clean: Dict[Monomial, Scalar] = {}
        for m, c in (terms or {}).items():
            m = tuple(int(e) for e in m)
            if len(m) != n:
                raise ValueError(f"monomial {m} has arity {len(m)}, expected {n}")
            if any(e < 0 for e in m):
                raise ValueError(f"negative exponent in {m}")
            if c != 0:
                clean[m] = c
        self._terms = clean

    # construction helpers
    @classmethod
    def constant(cls, c: Scalar, varnames: Sequence[str]) -> "Poly":
        return cls({(0,) * len(varnames): c}, varnames)

    @classmethod
    def zero(cls, varnames: Sequence[str]) -> "Poly":
        return cls({}, varnames)

    @classmethod
    def var(cls, name: str, varnames: Sequence[str], one: Scalar = Fraction(1)) -> "Poly":
        i = list(varnames).index(name)
        return cls({unit(len(varnames), i): one}, varnames)

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Scalar], varnames: Tuple[str, ...]) -> "Poly":
        p = cls.__new__(cls)
        p.varnames = varnames
        p._terms = {m: c for m, c in terms.items() if c != 0}
        return p

    @property
    def nvars(self) -> int:
        return len(self.varnames)

    @property
    def terms(self) -> Mapping[Monomial, Scalar]:
        return self._terms

    def items(self):
        return self._terms.items()

    def coeff(self, m: Monomial) -> Scalar:
        return self._terms.get(tuple(m), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def max_abs_coeff(self) -> float:
        return float(max((abs(c) for c in self._terms.values()), default=0))

    def pruned(self, zt: ZeroTest, scale: float = 0.0) -> "Poly":
        """Drop coefficients that pass the zero test (a no-op for exact coefficients)."""
        return Poly._raw({m: c for m, c in self._terms.items() if not scalar_is_zero(c, scale, zt)}, self.varnames)

    def _check(self, other: "Poly"):
        if other.nvars != self.nvars:
            raise ValueError(f"arity mismatch: {self.nvars} vs {other.nvars}")

    # arithmetic
    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(other, self.varnames)
        self._check(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return Poly._raw(out, self.varnames)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({m: -c for m, c in self._terms.items()}, self.varnames)

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(other, self.varnames)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly._raw({m: c * other for m, c in self._terms.items()}, self.varnames)
        self._check(other)
        out: Dict[Monomial, Scalar] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Poly._raw(out, self.varnames)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        one = 1.0 if any(isinstance(c, float) for c in self._terms.values()) else Fraction(1)
        out = Poly.constant(one, self.varnames)
        for _ in range(k):
            out = out * self
        return out

    def mul_monomial(self, u: Monomial) -> "Poly":
        return Poly._raw({mono_mul(m, u): c for m, c in self._terms.items()}, self.varnames)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.varnames == other.varnames and self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.varnames, frozenset(self._terms.items())))

    def __repr__(self):
        return f"Poly({self.to_str()!r})"

    def __str__(self):
        return self.to_str()

    # evaluation, shift, Taylor coefficients
    def __call__(self, Y: Sequence[Scalar]) -> Scalar:
        return poly_eval(self, Y)

    def to_str(self) -> str:
        if not self._terms:
            return "0"
        out = ""
        for m in sorted(self._terms, key=lambda m: (-sum(m), tuple(-e for e in m))):
            c = self._terms[m]
            neg = c < 0
            mag = -c if neg else c
            factors = []
            for name, e in zip(self.varnames, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            if not factors or mag != 1:
                factors.insert(0, format_scalar(mag))
            body = "*".join(factors)
            if not out:
                out = "-" + body if neg else body
            else:
                out += (" - " if neg else " + ") + body
        return out

    @classmethod
    def parse(cls, text: str, varnames: Sequence[str], convert=Fraction) -> "Poly":
        return _Parser(text, tuple(varnames), convert).parse()


def _check_point(p: Poly, Y: Sequence) -> None:
    if len(Y) != p.nvars:
        raise ValueError(f"point of dimension {len(Y)} for a polynomial in {p.nvars} variables")


def poly_eval(p: Poly, Y: Sequence[Scalar]) -> Scalar:
    _check_point(p, Y)
    total = 0
    for m, c in p.items():
        term = c
        for y, e in zip(Y, m):
            if e:
                term = term * y**e
        total = total + term
    return total


def poly_shift(p: Poly, Y: Sequence[Scalar]) -> Poly:
    """Return q with q(X) = p(X + Y)."""
    _check_point(p, Y)
    out: Dict[Monomial, Scalar] = {}
    for m, c in p.items():
        for beta in _sub_exponents(m):
            coef = c
            for e, b, y in zip(m, beta, Y):
                if e != b:
                    coef = coef * comb(e, b) * y ** (e - b)
            out[beta] = out.get(beta, 0) + coef
    return Poly._raw(out, p.varnames)


def taylor_coeff(p: Poly, Y: Sequence[Scalar], alpha: Monomial) -> Scalar:
    """Coefficient of X^alpha in ``poly_shift(p, Y)``, i.e. (1/alpha!) d^alpha p at Y."""
    _check_point(p, Y)
    if len(alpha) != p.nvars:
        raise ValueError("arity mismatch between alpha and polynomial")
    total = 0
    for m, c in p.items():
        if not mono_divides(alpha, m):
            continue
        coef = c
        for e, a, y in zip(m, alpha, Y):
            if e != a:
                coef = coef * comb(e, a) * y ** (e - a)
        total = total + coef
    return total


def taylor_coeffs(p: Poly, Y: Sequence[Scalar], alphas: Iterable[Monomial]) -> Dict[Monomial, Scalar]:
    shifted = poly_shift(p, Y)
    return {tuple(a): shifted.coeff(a) for a in alphas}


def _sub_exponents(m: Monomial):
    if not m:
        yield ()
        return
    for head in range(m[0] + 1):
        for rest in _sub_exponents(m[1:]):
            yield (head,) + rest


def shifted_power(Y: Sequence[Scalar], alpha: Monomial, varnames: Sequence[str], one: Scalar) -> Poly:
    """Expanded (X - Y)^alpha."""
    out = Poly.constant(one, varnames)
    for i, e in enumerate(alpha):
        if e:
            lin = Poly({unit(len(varnames), i): one, (0,) * len(varnames): -Y[i]}, varnames)
            out = out * lin**e
    return out


_TOKEN = re.compile(r"\s*(?:(\d+(?:\.\d*)?(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?)|([A-Za-z_]\w*)|(\S))")


class _Parser:
    """Recursive-descent parser for +, -, *, /, ^ and parentheses."""

    def __init__(self, text, varnames, convert):
        self.varnames = varnames
        self.convert = convert
        self.tokens = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            mt = _TOKEN.match(text, pos)
            if not mt or mt.end() == pos:
                raise ValueError(f"cannot tokenize {text[pos:]!r}")
            num, name, sym = mt.groups()
            if num is not None:
                self.tokens.append(("num", num))
            elif name is not None:
                self.tokens.append(("name", name))
            elif sym is not None:
                self.tokens.append(("sym", sym))
            pos = mt.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, sym):
        kind, val = self.take()
        if kind != "sym" or val != sym:
            raise ValueError(f"expected {sym!r}, got {val!r}")

    def parse(self) -> Poly:
        if not self.tokens:
            raise ValueError("empty polynomial expression")
        p = self.expr()
        if self.i != len(self.tokens):
            raise ValueError(f"unexpected token {self.peek()[1]!r}")
        return p

    def expr(self):
        p = self.term()
        while self.peek() in (("sym", "+"), ("sym", "-")):
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.unary()
        while self.peek() in (("sym", "*"), ("sym", "/")):
            op = self.take()[1]
            q = self.unary()
            if op == "*":
                p = p * q
            else:
                if q.total_degree() > 0 or q.is_zero():
                    raise ValueError("division only by nonzero constants")
                p = p * (1 / q.coeff((0,) * len(self.varnames)))
        return p

    def unary(self):
        if self.peek() == ("sym", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("sym", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("sym", "^"):
            self.take()
            kind, val = self.take()
            if kind != "num" or not val.isdigit():
                raise ValueError("exponent must be a nonnegative integer")
            return base ** int(val)
        return base

    def atom(self):
        kind, val = self.take()
        one = self.convert("1")
        if kind == "num":
            return Poly.constant(self.convert(val), self.varnames)
        if kind == "name":
            if val not in self.varnames:
                raise ValueError(f"unknown variable {val!r}")
            return Poly.var(val, self.varnames, one)
        if (kind, val) == ("sym", "("):
            p = self.expr()
            self.expect(")")
            return p
        raise ValueError(f"unexpected token {val!r}")
