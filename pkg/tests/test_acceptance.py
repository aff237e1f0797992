"""Exit criteria.  Everything is exact; there are no numerical tolerances.

Run with `pytest tests/test_acceptance.py`; the terminal summary prints one
PASS/FAIL line per criterion.
"""
import itertools
import json
import subprocess
import sys
from collections import Counter
from fractions import Fraction as F
from math import factorial, prod

import pytest

from conftest import GOLDEN
from oracles import brute_block_hp, brute_centralizers, brute_partitions
from smoothdual.arith import TwistCoord as Z
from smoothdual.checks import TWO_LABELS, check_diagram, check_injectivity, check_retraction
from smoothdual.cli import RunConfig, cmd_catalog
from smoothdual.homology import block_hp, component_poincare
from smoothdual.params import (
    ExtendedPoint,
    SegmentParam,
    WDParam,
    beta,
    infinitesimal_character,
    langlands_data,
    sp_realization_check,
    validate_param,
)
from smoothdual.partitions import centralizer_order, conjugacy_class_size, enumerate_partitions
from smoothdual.spectrum import ComponentIndex, InertialClass, Inventory, component_catalog
from smoothdual.tempered import is_tempered, retract

SEED = 20240601
HALF = F(1, 2)
INV = str(GOLDEN / "inventory_chi.json")


def criterion(number, title):
    return pytest.mark.criterion(number, title)


def make(inv, *segs):
    segments = tuple(SegmentParam(label, Z(s, theta), r) for label, s, theta, r in segs)
    return validate_param(WDParam(segments, 0), inv, sum(inv[s.label].dim * s.length for s in segments))


@criterion(1, "GL(2) example: two components, beta twisted on [2], identity on [1,1] (golden JSON)")
def test_gl2_worked_example(chi):
    report = cmd_catalog(RunConfig(INV, 2))
    assert report == json.loads((GOLDEN / "catalog_gl2.json").read_text())
    [cls] = report["classes"]
    assert [c["shape"] for c in cls["components"]] == [[["chi", 2, 1]], [["chi", 1, 2]]]

    for case in json.loads((GOLDEN / "beta_gl2.json").read_text()):
        x = ExtendedPoint.from_json(case, chi)
        assert beta(x).to_json() == case["beta"]

    # the same statement for arbitrary coordinates
    for s, theta in itertools.product([F(-3, 2), 0, F(1, 3), 2], [0, F(1, 4), F(5, 6)]):
        z = Z(s, theta)
        on_circle = ExtendedPoint(ComponentIndex({"chi": [2]}), {("chi", 2): [z]}, {"chi": 1})
        assert beta(on_circle).support == (("chi", z), ("chi", Z(s + 1, theta)))
        w = Z(-s, theta)
        on_sym2 = ExtendedPoint(ComponentIndex({"chi": [1, 1]}), {("chi", 1): [z, w]}, {"chi": 1})
        assert Counter(beta(on_sym2).support) == Counter([("chi", z), ("chi", w)])


@criterion(2, "point examples: Steinberg inf.ch., psi.det Langlands order, retract of psi.det")
def test_paper_point_examples(chi):
    steinberg = make(chi, ("chi", -HALF, 0, 2))
    assert infinitesimal_character(steinberg).support == (("chi", Z(-HALF)), ("chi", Z(HALF)))

    psi_det = make(chi, ("chi", -HALF, 0, 1), ("chi", HALF, 0, 1))
    assert [s.twist for s in langlands_data(psi_det)] == [Z(HALF), Z(-HALF)]

    r = retract(psi_det)
    assert [s.twist for s in r.segments] == [Z(0, 0), Z(0, 0)]
    assert is_tempered(r)


@criterion(3, "diagram: beta(alpha(p)) == inf.ch.(p) on 10^4 random parameters, n <= 8")
def test_diagram_commutes():
    report = check_diagram(SEED, 10_000, max_n=8)
    assert report["instances"] == 10_000
    assert report["failures"] == 0, report["counterexamples"]


@criterion(4, "injectivity: 10^3 distinct pairs per component, all m_c <= 4, two labels")
def test_beta_injective_on_sampled_pairs():
    report = check_injectivity(SEED, 1000, TWO_LABELS, max_mult=4)
    # classes: (m_chi, m_tau) in {0..4}^2 minus (0, 0); components: (sum p(m))^2 - 1
    assert report["components"] == (1 + 1 + 2 + 3 + 5) ** 2 - 1
    assert report["instances"] == 1000 * report["components"]
    assert report["failures"] == 0, report["counterexamples"]


@criterion(5, "retraction: idempotent, fixes tempered, endpoints, strata, angles/lengths on 10^4 params")
def test_retraction_properties():
    report = check_retraction(SEED, 10_000, max_n=8)
    assert report["instances"] == 10_000
    assert report["failures"] == 0, report["counterexamples"]


@criterion(6, "combinatorics: counts = prod p(m_c), centralizers vs S_r (r <= 6), class equation")
def test_combinatorial_oracles(chi_tau):
    for r in range(11):
        assert set(enumerate_partitions(r)) == brute_partitions(r)
        assert sum(conjugacy_class_size(p) for p in enumerate_partitions(r)) == factorial(r)
    for m1, m2 in itertools.product(range(11), repeat=2):
        if m1 or m2:
            cls = InertialClass.build(chi_tau, {"chi": m1, "tau": m2})
            expected = prod(len(brute_partitions(m)) for m in (m1, m2) if m)
            assert len(component_catalog(cls)) == expected
    for r in range(1, 7):
        assert {p: centralizer_order(p) for p in enumerate_partitions(r)} == brute_centralizers(r)


@criterion(7, "HP: block {(chi,2)} = (2,2); {(chi,r)} vs brute force r <= 12; P(1) = 2^K, P(-1) = 0")
def test_periodic_cyclic_homology(chi, chi_tau):
    assert block_hp(InertialClass.build(chi, {"chi": 2})) == (2, 2)
    for r in range(1, 13):
        assert block_hp(InertialClass.build(chi, {"chi": r})) == brute_block_hp(r)
    for m1, m2 in itertools.product(range(7), repeat=2):
        if not (m1 or m2):
            continue
        cls = InertialClass.build(chi_tau, {"chi": m1, "tau": m2})
        for _, shape in component_catalog(cls):
            poly = component_poincare(shape)
            assert poly(1) == 2**shape.K
            assert poly(-1) == 0
        hp0, hp1 = block_hp(cls)
        assert hp0 == hp1


@criterion(8, "sp(r): rho N rho^-1 = x N as exact Laurent matrices, 1 <= r <= 10")
def test_sp_relation():
    assert all(sp_realization_check(r) for r in range(1, 11))


@criterion(9, "product law for {(chi,2),(tau,1)}")
def test_product_law(chi_tau):
    both = InertialClass.build(chi_tau, {"chi": 2, "tau": 1})
    left = InertialClass.build(chi_tau, {"chi": 2})
    right = InertialClass.build(chi_tau, {"tau": 1})
    product = Counter(
        ComponentIndex(a.parts + b.parts)
        for (a, _), (b, _) in itertools.product(component_catalog(left), component_catalog(right))
    )
    assert Counter(i for i, _ in component_catalog(both)) == product
    # HP of a product: Kunneth on every component pair
    hp = [0, 0]
    for (_, sa), (_, sb) in itertools.product(component_catalog(left), component_catalog(right)):
        poly = component_poincare(sa) * component_poincare(sb)
        hp[0] += poly.even
        hp[1] += poly.odd
    assert block_hp(both) == tuple(hp) == (4, 4)


def _cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "smoothdual", *args], capture_output=True, check=False,
    )


@criterion(10, "determinism: repeated catalog and check runs are byte-identical")
def test_determinism(write_json):
    inv = write_json("two.json", TWO_LABELS.to_json())
    runs = [
        ("catalog", "--inventory", inv, "--n", "5"),
        ("check", "diagram", "--seed", "99", "--samples", "500"),
        ("check", "retraction", "--seed", "99", "--samples", "500"),
        ("check", "injectivity", "--seed", "99", "--samples", "5", "--max-mult", "2"),
    ]
    for args in runs:
        first, second = _cli(*args), _cli(*args)
        assert first.returncode == second.returncode == 0, first.stderr
        assert first.stdout == second.stdout
        assert first.stdout.endswith(b"\n")
    other_seed = _cli("check", "diagram", "--seed", "100", "--samples", "500")
    assert json.loads(other_seed.stdout)["seed"] == 100
