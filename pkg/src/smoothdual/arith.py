"""Exact coordinates for unramified quasicharacters.

An unramified quasicharacter w -> z^{d(w)} is determined by z in C^x.  We
write z = q^{-s} e^{2 pi i theta} and keep (s, theta) as exact rationals, so
the norm character | | sits at (1, 0) and | |^k at (k, 0).  The residue
cardinality q only shows up when rendering to floats.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import ValidationError

Rational = Fraction


def parse_rational(value, location=None) -> Fraction:
    """Accept "p/q", "p", an int, or a Fraction; reject floats and junk."""
    if isinstance(value, bool):
        raise ValidationError(f"expected a rational, got {value!r}", location)
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if "." in text or "e" in text.lower():
            raise ValidationError(f"expected an exact rational 'p/q', got {value!r}", location)
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            pass
    raise ValidationError(f"expected a rational 'p/q', got {value!r}", location)


def format_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True, order=True)
class TwistCoord:
    """z = q^{-s} e^{2 pi i theta}, with theta kept in [0, 1)."""

    s: Fraction = Fraction(0)
    theta: Fraction = Fraction(0)

    def __post_init__(self):
        if type(self.s) is not Fraction:
            object.__setattr__(self, "s", Fraction(self.s))
        theta = self.theta if type(self.theta) is Fraction else Fraction(self.theta)
        if not 0 <= theta.numerator < theta.denominator:
            theta %= 1
        object.__setattr__(self, "theta", theta)

    def inverse(self) -> TwistCoord:
        return TwistCoord(-self.s, -self.theta)

    def to_json(self) -> dict:
        return {"s": format_rational(self.s), "theta": format_rational(self.theta)}

    @classmethod
    def from_json(cls, data, location=None) -> TwistCoord:
        if not isinstance(data, dict) or set(data) - {"s", "theta"}:
            raise ValidationError(f"twist must be an object with keys 's' and 'theta', got {data!r}", location)
        return cls(
            parse_rational(data.get("s", "0"), location),
            parse_rational(data.get("theta", "0"), location),
        )

    def __repr__(self):
        return f"TwistCoord({format_rational(self.s)}, {format_rational(self.theta)})"


IDENTITY = TwistCoord()


def twist_mul(a: TwistCoord, b: TwistCoord) -> TwistCoord:
    return TwistCoord(a.s + b.s, a.theta + b.theta)


@lru_cache(maxsize=256)
def norm_power(k) -> TwistCoord:
    """Coordinate of | |^k."""
    return TwistCoord(Fraction(k), Fraction(0))


def canonicalize_mod_torsion(z: TwistCoord, t: int) -> TwistCoord:
    """Reduce the angle into [0, 1/t).

    A cuspidal orbit with t unramified self-twists is C^x / mu_t, so angles
    differing by a multiple of 1/t name the same point.
    """
    if t < 1:
        raise ValueError(f"torsion must be >= 1, got {t}")
    return TwistCoord(z.s, z.theta % Fraction(1, t))


def twist_to_complex(z: TwistCoord, q: int) -> tuple[float, float]:
    """Float rendering of z for display.  Never feed this back into exact code."""
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    mag = float(q) ** (-float(z.s))
    angle = 2 * math.pi * float(z.theta)
    return (mag * math.cos(angle), mag * math.sin(angle))
