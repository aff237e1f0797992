"""Seeded random inventories, parameters and extended points.

Exponents s come from {k/d : d <= 4, |s| <= 4}; angles from {k/d : d <= 12}.
"""
from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache

from .arith import TwistCoord, canonicalize_mod_torsion
from .params import ExtendedPoint, SegmentParam, WDParam, validate_param
from .partitions import enumerate_partitions
from .spectrum import ComponentIndex, CuspidalLabel, Inventory, enumerate_inertial_classes, shape_of

EXPONENT_GRID = sorted({Fraction(k, d) for d in range(1, 5) for k in range(-4 * d, 4 * d + 1)})
ANGLE_GRID = sorted({Fraction(k, d) for d in range(1, 13) for k in range(d)})


@lru_cache(maxsize=None)
def _angles(torsion):
    # reduce the grid once instead of canonicalizing every draw
    return tuple(canonicalize_mod_torsion(TwistCoord(0, theta), torsion).theta for theta in ANGLE_GRID)


def random_twist(rng: random.Random, torsion=1) -> TwistCoord:
    return TwistCoord(rng.choice(EXPONENT_GRID), rng.choice(_angles(torsion)))


def random_inventory(rng: random.Random, max_labels=3, max_dim=3, max_torsion=3) -> Inventory:
    count = rng.randint(1, max_labels)
    return Inventory(
        CuspidalLabel(f"c{i}", rng.randint(1, max_dim), rng.randint(1, max_torsion))
        for i in range(count)
    )


def random_param(rng: random.Random, inv: Inventory, n: int) -> WDParam | None:
    """A validated parameter of dimension n, or None when n cannot be filled."""
    classes = enumerate_inertial_classes(inv, n)
    if not classes:
        return None
    cls = rng.choice(classes)
    segments = []
    for label_id, m in cls.entries:
        label = inv[label_id]
        for r in rng.choice(enumerate_partitions(m)):
            segments.append(SegmentParam(label_id, random_twist(rng, label.torsion), r))
    return validate_param(WDParam(tuple(segments), n), inv)


def random_instance(rng: random.Random, max_n=8, inv=None):
    """(inventory, parameter) with n drawn uniformly from 1..max_n."""
    if inv is not None and not any(enumerate_inertial_classes(inv, n) for n in range(1, max_n + 1)):
        raise ValueError(f"inventory cannot fill any GL(n) with n <= {max_n}")
    while True:
        inventory = inv if inv is not None else random_inventory(rng)
        p = random_param(rng, inventory, rng.randint(1, max_n))
        if p is not None:
            return inventory, p


def random_point(rng: random.Random, inv: Inventory, component: ComponentIndex) -> ExtendedPoint:
    coords = {
        (c, t): [random_twist(rng, inv[c].torsion) for _ in range(n)]
        for c, t, n in shape_of(component).factors
    }
    dims = {c: inv[c].dim for c, _ in component.parts}
    return ExtendedPoint(component, coords, dims)
