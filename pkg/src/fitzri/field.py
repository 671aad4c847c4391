"""Coefficient fields.

Two fields are supported: exact rationals (``fractions.Fraction``) and
binary64 floats. A scalar's field is carried by its Python type, so the
polynomial and solver code is written once and runs in either mode.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Union

Scalar = Union[Fraction, float]


class FieldMode(str, Enum):
    EXACT = "rational"
    FLOAT = "float64"


class ConditioningWarning(UserWarning):
    """A float residue landed just above the zero threshold."""


@dataclass(frozen=True)
class ZeroTest:
    absolute_tol: float = 1e-10
    relative_tol: float = 1e-9

    def __post_init__(self):
        if self.absolute_tol < 0 or self.relative_tol < 0:
            raise ValueError("tolerances must be nonnegative")

    def threshold(self, scale: float) -> float:
        return self.absolute_tol + self.relative_tol * scale


DEFAULT_ZERO_TEST = ZeroTest()


def mode_of(s) -> FieldMode:
    return FieldMode.FLOAT if isinstance(s, float) else FieldMode.EXACT


def coerce(value, mode: FieldMode) -> Scalar:
    """Convert ``value`` (int, Fraction, float or numeric string) into ``mode``."""
    mode = FieldMode(mode)
    if isinstance(value, str):
        return parse_scalar(value, mode)
    if mode is FieldMode.EXACT:
        if isinstance(value, float):
            if not math.isfinite(value):
                raise ValueError(f"non-finite value {value!r}")
            return Fraction(value)
        return Fraction(value)
    out = float(value)
    if not math.isfinite(out):
        raise ValueError(f"non-finite value {value!r}")
    return out


def parse_scalar(text: str, mode: FieldMode) -> Scalar:
    """Parse a numeric literal; ``"3/4"`` and decimals are accepted in both modes."""
    text = text.strip()
    mode = FieldMode(mode)
    try:
        exact = Fraction(text)
    except (ValueError, ZeroDivisionError):
        exact = None
    if mode is FieldMode.EXACT:
        if exact is None:
            raise ValueError(f"not a rational literal: {text!r}")
        return exact
    if exact is not None and "/" in text:
        return float(exact)
    try:
        out = float(text)
    except ValueError:
        raise ValueError(f"not a float literal: {text!r}") from None
    if not math.isfinite(out):
        raise ValueError(f"non-finite value {text!r}")
    return out


def format_scalar(s: Scalar) -> str:
    """Exact scalars as ``p/q`` (or ``p``), floats as the shortest round-trip repr."""
    if isinstance(s, float):
        return repr(s)
    s = Fraction(s)
    if s.denominator == 1:
        return str(s.numerator)
    return f"{s.numerator}/{s.denominator}"


def scalar_is_zero(s: Scalar, scale: float = 0.0, zt: ZeroTest = DEFAULT_ZERO_TEST) -> bool:
    if scale < 0:
        raise ValueError("scale must be nonnegative")
    if isinstance(s, float):
        return abs(s) <= zt.threshold(scale)
    return s == 0


def check_nonzero(s: Scalar, scale: float = 0.0, zt: ZeroTest = DEFAULT_ZERO_TEST) -> bool:
    """Like ``not scalar_is_zero`` but warns when a float value is within 10x of the threshold."""
    if scalar_is_zero(s, scale, zt):
        return False
    if isinstance(s, float) and abs(s) <= 10 * zt.threshold(scale):
        warnings.warn(
            f"residue {s!r} is within 10x of the zero threshold {zt.threshold(scale):.3g}",
            ConditioningWarning,
            stacklevel=3,
        )
    return True


def sgn(s: Scalar) -> int:
    return 1 if s >= 0 else -1
