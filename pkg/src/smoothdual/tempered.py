"""Tempered locus and the retraction onto it.

Write each segment as psi |.|^{(1-r)/2} rho (x) sp(r) with rho of unitary
determinant.  In coordinates the exponent of psi is s + (r-1)/2; the
retraction replaces psi by psi/|psi|, i.e. sends that exponent to 0 and
leaves the angle alone.  The homotopy scales the exponent linearly.
"""
from __future__ import annotations

from fractions import Fraction

from .arith import parse_rational
from .errors import ValidationError
from .params import ComponentIndex, WDParam, alpha, retwist, with_segments


def psi_exponent(seg) -> Fraction:
    return seg.central_exponent


def baseline_exponent(length) -> Fraction:
    """Raw exponent (1 - r)/2 of a tempered segment of length r."""
    return Fraction(1 - length, 2)


def is_tempered(p: WDParam) -> bool:
    return all(psi_exponent(seg) == 0 for seg in p.segments)


def retract(p: WDParam) -> WDParam:
    return with_segments(p, [retwist(seg, baseline_exponent(seg.length)) for seg in p.segments])


def homotopy(p: WDParam, t) -> WDParam:
    """Point at time t of the path from p (t = 0) to retract(p) (t = 1)."""
    t = parse_rational(t)
    if not 0 <= t <= 1:
        raise ValidationError(f"homotopy time must lie in [0, 1], got {t}")
    return with_segments(p, [
        retwist(seg, (1 - t) * psi_exponent(seg) + baseline_exponent(seg.length))
        for seg in p.segments
    ])


def stratum_of(p: WDParam) -> ComponentIndex:
    return alpha(p).component
