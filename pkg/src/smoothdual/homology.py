"""Betti numbers of extended-quotient components and HP of Hecke blocks.

Every component is a product of factors Sym^m C^x.  Sending an unordered
m-tuple of nonzero numbers to the coefficients of the monic polynomial with
those roots identifies Sym^m C^x with C^{m-1} x C^x (the constant term is
+-(product of roots), nonzero; the other m-1 coefficients are free).  So each
factor retracts onto a circle with Poincare polynomial 1 + t, and a component
with K factors has (1 + t)^K.  HP_0 / HP_1 of the block are the even / odd
Betti sums over its components.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import ValidationError
from .spectrum import ComponentShape, InertialClass, component_catalog

CIRCLE = (1, 1)


@dataclass(frozen=True)
class PoincarePolynomial:
    coefficients: tuple

    def __post_init__(self):
        coeffs = list(self.coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    def __call__(self, t):
        return sum(c * t**i for i, c in enumerate(self.coefficients))

    def __mul__(self, other):
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return PoincarePolynomial(())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return PoincarePolynomial(tuple(out))

    @property
    def even(self):
        return sum(self.coefficients[0::2])

    @property
    def odd(self):
        return sum(self.coefficients[1::2])

    def to_json(self):
        return list(self.coefficients)


ONE = PoincarePolynomial((1,))


def symmetric_power_poincare(m: int) -> PoincarePolynomial:
    """Sym^m C^x, m >= 1: homotopy equivalent to a circle."""
    if m < 1:
        raise ValueError(f"symmetric power must be >= 1, got {m}")
    return PoincarePolynomial(CIRCLE)


def component_poincare(shape: ComponentShape) -> PoincarePolynomial:
    if shape.K < 1:
        raise ValueError("component has no factors")
    poly = ONE
    for _, _, m in shape.factors:
        poly = poly * symmetric_power_poincare(m)
    return poly


def component_hp(shape: ComponentShape) -> tuple[int, int]:
    poly = component_poincare(shape)
    return (poly.even, poly.odd)


def block_components(cls: InertialClass):
    """Per-component homology rows, in catalog order."""
    rows = []
    for index, shape in component_catalog(cls):
        poly = component_poincare(shape)
        rows.append((index, shape, poly, (poly.even, poly.odd)))
    return rows


def block_hp(cls: InertialClass) -> tuple[int, int]:
    hp0 = hp1 = 0
    for _, _, _, (even, odd) in block_components(cls):
        hp0 += even
        hp1 += odd
    return (hp0, hp1)


def hp_over_selection(classes) -> tuple[int, int]:
    classes = list(classes)
    if len(set(classes)) != len(classes):
        raise ValidationError("duplicate inertial class in selection")
    hp0 = hp1 = 0
    for cls in classes:
        a, b = block_hp(cls)
        hp0 += a
        hp1 += b
    return (hp0, hp1)


def block_report(cls: InertialClass) -> dict:
    rows = block_components(cls)
    return {
        "class": cls.to_json(),
        "components": [
            {"index": index.to_json(), "K": shape.K, "poincare": poly.to_json(), "hp": list(hp)}
            for index, shape, poly, hp in rows
        ],
        "block_hp": [sum(r[3][0] for r in rows), sum(r[3][1] for r in rows)],
    }
