"""Randomized property suites behind `smoothdual check`.

Each runner returns a JSON-ready report; failing instances are kept in full.
"""
from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .arith import format_rational
from .params import alpha, beta, infinitesimal_character
from .sampling import random_instance, random_point
from .spectrum import CuspidalLabel, InertialClass, Inventory, component_catalog
from .tempered import homotopy, is_tempered, psi_exponent, retract, stratum_of

MAX_REPORTED = 20

TWO_LABELS = Inventory([CuspidalLabel("chi", 1, 1), CuspidalLabel("tau", 2, 1)])

TIME_GRID = sorted({Fraction(k, d) for d in range(1, 13) for k in range(d + 1)})


def _report(name, seed, samples, checked, failures, **extra):
    return {
        "check": name,
        "seed": seed,
        "samples": samples,
        **extra,
        "instances": checked,
        "failures": len(failures),
        "counterexamples": failures[:MAX_REPORTED],
        "passed": not failures,
    }


def check_diagram(seed, samples, max_n=8, inv=None):
    """beta(alpha(p)) == infinitesimal_character(p) on random parameters."""
    rng = random.Random(seed)
    failures = []
    for _ in range(samples):
        inventory, p = random_instance(rng, max_n, inv)
        via_extended = beta(alpha(p))
        direct = infinitesimal_character(p)
        if via_extended != direct:
            failures.append({
                "inventory": inventory.to_json(),
                "param": p.to_json(),
                "beta_alpha": via_extended.to_json(),
                "inf_ch": direct.to_json(),
            })
    return _report("diagram", seed, samples, samples, failures, max_n=max_n)


def classes_with_bounded_multiplicity(inv, max_mult):
    ids = [label.id for label in inv]
    out = []
    for ms in itertools.product(range(max_mult + 1), repeat=len(ids)):
        if any(ms):
            out.append(InertialClass.build(inv, dict(zip(ids, ms))))
    return out


def check_injectivity(seed, samples, inv=None, max_mult=4):
    """Distinct points on one component should have distinct beta images.

    `samples` pairs with distinct coordinates are drawn on every component of
    every class whose multiplicities are all <= max_mult.
    """
    inv = inv if inv is not None else TWO_LABELS
    rng = random.Random(seed)
    failures = []
    components = pairs = 0
    for cls in classes_with_bounded_multiplicity(inv, max_mult):
        for index, _ in component_catalog(cls):
            components += 1
            drawn = 0
            while drawn < samples:
                x, y = random_point(rng, inv, index), random_point(rng, inv, index)
                if x == y:
                    continue
                drawn += 1
                image = beta(x)
                if image == beta(y):
                    failures.append({
                        "class": cls.to_json(),
                        "x": x.to_json(),
                        "y": y.to_json(),
                        "beta": image.to_json(),
                    })
            pairs += drawn
    return _report("injectivity", seed, samples, pairs, failures,
                   max_mult=max_mult, components=components)


def retraction_violations(p, t):
    """Names of the retraction properties that fail for parameter p at time t."""
    bad = []
    r = retract(p)
    if retract(r) != r:
        bad.append("idempotent")
    if not is_tempered(r):
        bad.append("lands_in_tempered")
    if is_tempered(p) != (r == p):
        bad.append("fixes_exactly_tempered")
    if homotopy(p, 0) != p:
        bad.append("start_is_identity")
    if homotopy(p, 1) != r:
        bad.append("end_is_retract")
    h = homotopy(p, t)
    if not (stratum_of(h) == stratum_of(p) == stratum_of(r)):
        bad.append("stratum_invariant")

    def angles_and_lengths(q):
        return sorted((seg.label, seg.length, seg.twist.theta) for seg in q.segments)

    if not (angles_and_lengths(h) == angles_and_lengths(p) == angles_and_lengths(r)):
        bad.append("angles_lengths_invariant")
    expected = sorted((seg.label, seg.length, seg.twist.theta, (1 - t) * psi_exponent(seg)) for seg in p.segments)
    actual = sorted((seg.label, seg.length, seg.twist.theta, psi_exponent(seg)) for seg in h.segments)
    if expected != actual:
        bad.append("linear_in_time")
    return bad


def check_retraction(seed, samples, max_n=8, inv=None):
    rng = random.Random(seed)
    failures = []
    for _ in range(samples):
        inventory, p = random_instance(rng, max_n, inv)
        t = rng.choice(TIME_GRID)
        bad = retraction_violations(p, t)
        if bad:
            failures.append({
                "inventory": inventory.to_json(),
                "param": p.to_json(),
                "t": format_rational(t),
                "violated": bad,
            })
    return _report("retraction", seed, samples, samples, failures, max_n=max_n)


CHECKS = {
    "diagram": check_diagram,
    "injectivity": check_injectivity,
    "retraction": check_retraction,
}
