"""Exact scalar substrate: rationals, exact angle values and formal angle sums.

Rationals are plain :class:`fractions.Fraction`.  An :class:`AngleValue`
represents an angle in [0, pi] through the sign and the square of its
cosine, which keeps the geometry exact even when the cosine itself is a
quadratic irrational.  An :class:`ExactValue` is a rational number plus a
formal Q-linear combination of ``arccos(angle)/(2*pi)`` terms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

import mpmath

RationalLike = Union[Fraction, int]

#: Angles theta with rational cos(theta)^2 and theta/pi rational; by Niven's
#: theorem (applied to cos(2*theta) = 2 cos^2 - 1) these are the only ones.
#: Maps cos_squared -> arccos(sqrt(cos_squared)) / (2*pi).
_RATIONAL_TURNS = {
    Fraction(0): Fraction(1, 4),
    Fraction(1, 4): Fraction(1, 6),
    Fraction(1, 2): Fraction(1, 8),
    Fraction(3, 4): Fraction(1, 12),
    Fraction(1): Fraction(0),
}


def parse_rational(text: str) -> Fraction:
    """Parse 'p/q' or 'p' into an exact Fraction."""
    return Fraction(text.strip())


def format_rational(x: Fraction) -> str:
    """Serialize a Fraction as 'p/q', or 'p' when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def primitive_integer_vector(v: Sequence[RationalLike]) -> tuple[int, ...]:
    """Unique integer vector w with gcd 1 and w = lambda*v for lambda > 0.

    Raises ValueError on the zero vector.
    """
    fracs = [Fraction(c) for c in v]
    if all(c == 0 for c in fracs):
        raise ValueError("zero direction")
    den = math.lcm(*(c.denominator for c in fracs))
    ints = [int(c * den) for c in fracs]
    g = math.gcd(*ints)
    return tuple(c // g for c in ints)


@dataclass(frozen=True)
class AngleValue:
    """The angle theta = arccos(sign * sqrt(cos_squared)) in [0, pi]."""

    sign: int
    cos_squared: Fraction

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"invalid sign {self.sign}")
        cs = Fraction(self.cos_squared)
        if not 0 <= cs <= 1:
            raise ValueError(f"cos_squared {cs} outside [0,1]")
        if (self.sign == 0) != (cs == 0):
            raise ValueError("sign is 0 exactly when cos_squared is 0")
        object.__setattr__(self, "cos_squared", cs)

    def rational_turn(self) -> Fraction | None:
        """arccos/(2*pi) as an exact rational, when the angle admits one."""
        if self.sign == 0:
            return Fraction(1, 4)
        turn = _RATIONAL_TURNS.get(self.cos_squared)
        if turn is None:
            return None
        return turn if self.sign > 0 else Fraction(1, 2) - turn

    def supplement(self) -> "AngleValue":
        """The angle pi - theta (cosine negated)."""
        return AngleValue(-self.sign, self.cos_squared)

    def eval_numeric(self, precision: int = 53) -> mpmath.mpf:
        """arccos value at the given binary precision."""
        with mpmath.workprec(precision + 8):
            c = self.sign * mpmath.sqrt(mpmath.mpf(self.cos_squared.numerator)
                                        / self.cos_squared.denominator)
            return mpmath.acos(c)


def angle_of_cos_ratio(num: RationalLike, den_sq: RationalLike) -> AngleValue:
    """AngleValue of the angle whose cosine is num / sqrt(den_sq).

    Callers pass the rational dot product and the rational product of
    squared norms, so the cosine never needs an explicit square root.
    """
    num = Fraction(num)
    den_sq = Fraction(den_sq)
    if den_sq <= 0:
        raise ValueError("den_sq must be positive")
    cs = num * num / den_sq
    if cs > 1:
        raise ValueError(f"not a cosine: ({num})^2 / ({den_sq}) > 1")
    return AngleValue(0 if num == 0 else (1 if num > 0 else -1), cs)


@dataclass(frozen=True)
class ExactValue:
    """rational_part + sum of coeff * arccos(angle)/(2*pi), canonicalized.

    Canonical form: angles with sign -1 are rewritten through their
    supplement, angles with a rational number of turns are folded into the
    rational part, identical angles are merged and zero coefficients
    dropped.  Equality on canonical forms is decidable exactly.
    """

    rational_part: Fraction
    angle_terms: tuple[tuple[Fraction, AngleValue], ...] = ()

    def __post_init__(self):
        rat = Fraction(self.rational_part)
        acc: dict[Fraction, Fraction] = {}
        for coeff, angle in self.angle_terms:
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            if angle.sign < 0:
                # arccos(-c) = pi - arccos(c)
                rat += coeff / 2
                coeff = -coeff
                angle = angle.supplement()
            turn = angle.rational_turn()
            if turn is not None:
                rat += coeff * turn
                continue
            acc[angle.cos_squared] = acc.get(angle.cos_squared, Fraction(0)) + coeff
        terms = tuple(
            (c, AngleValue(1, cs))
            for cs, c in sorted(acc.items())
            if c != 0
        )
        object.__setattr__(self, "rational_part", rat)
        object.__setattr__(self, "angle_terms", terms)

    @staticmethod
    def of(x: RationalLike) -> "ExactValue":
        return ExactValue(Fraction(x))

    @staticmethod
    def angle_turn(angle: AngleValue, coeff: RationalLike = 1) -> "ExactValue":
        """coeff * arccos(angle)/(2*pi) as an ExactValue."""
        return ExactValue(Fraction(0), ((Fraction(coeff), angle),))

    @property
    def is_rational(self) -> bool:
        return not self.angle_terms

    def as_rational(self) -> Fraction:
        if self.angle_terms:
            raise ValueError(f"not a pure rational: {self}")
        return self.rational_part

    def __add__(self, other: Union["ExactValue", RationalLike]) -> "ExactValue":
        other = _coerce(other)
        return ExactValue(self.rational_part + other.rational_part,
                          self.angle_terms + other.angle_terms)

    __radd__ = __add__

    def __neg__(self) -> "ExactValue":
        return ExactValue(-self.rational_part,
                          tuple((-c, a) for c, a in self.angle_terms))

    def __sub__(self, other: Union["ExactValue", RationalLike]) -> "ExactValue":
        return self + (-_coerce(other))

    def __rsub__(self, other: RationalLike) -> "ExactValue":
        return _coerce(other) - self

    def __mul__(self, scalar: RationalLike) -> "ExactValue":
        s = Fraction(scalar)
        return ExactValue(self.rational_part * s,
                          tuple((c * s, a) for c, a in self.angle_terms))

    __rmul__ = __mul__

    def __truediv__(self, scalar: RationalLike) -> "ExactValue":
        return self * (Fraction(1) / Fraction(scalar))

    def eval_numeric(self, precision: int = 53) -> float:
        """Numeric value, accurate to 2^(-precision+8); deterministic."""
        if precision < 53:
            raise ValueError("precision must be at least 53 bits")
        with mpmath.workprec(precision + 8):
            total = mpmath.mpf(self.rational_part.numerator) / self.rational_part.denominator
            two_pi = 2 * mpmath.pi
            for coeff, angle in self.angle_terms:
                c = mpmath.mpf(coeff.numerator) / coeff.denominator
                total += c * angle.eval_numeric(precision) / two_pi
            return float(total)

    def __str__(self) -> str:
        parts = [format_rational(self.rational_part)]
        for coeff, angle in self.angle_terms:
            parts.append(
                f"{format_rational(coeff)}*arccos(sqrt({format_rational(angle.cos_squared)}))/(2pi)"
            )
        return " + ".join(parts)


def _coerce(x: Union[ExactValue, RationalLike]) -> ExactValue:
    if isinstance(x, ExactValue):
        return x
    return ExactValue.of(x)


def exact_sum(values: Iterable[Union[ExactValue, RationalLike]]) -> ExactValue:
    total = ExactValue.of(0)
    for v in values:
        total = total + v
    return total
