"""Transport between resolution matrices and Kronecker modules."""

import random

import pytest

from reguli.errors import DegenerateMatrix
from reguli.exact import BidegreeForm, LinearFormP3
from reguli.fmbridge import (
    SpecialPoint,
    canonical_special_module,
    certify_to_q,
    contract_resolution,
    transport_to_p3,
    transport_to_q,
)
from reguli.grconic import line_at_parameter
from reguli.kronecker import (
    KroneckerModule,
    StratumLabel,
    classify_stratum,
    det_quadric,
    is_equivalent,
)
from reguli.quadgeom import (
    Q_FORM,
    ResolutionData,
    RulingFamily,
    ruling_family_in_q,
    segre_linear,
    segre_quadric,
)
from reguli.sampling import random_linear_form, random_stable_module

X = LinearFormP3.variable("x")
Y = LinearFormP3.variable("y")
Z = LinearFormP3.variable("z")
W = LinearFormP3.variable("w")
O = LinearFormP3.zero()


def module(a, b, c, d):
    return KroneckerModule([[a, b], [c, d]])


def resolution_of(forms):
    return ResolutionData(
        1, matrix=[[segre_linear(f) for f in row] for row in forms]
    )


def test_transport_worked_example():
    n = resolution_of([[-1 * (Y - 2 * W), 2 * W], [X - Z, X]])
    assert transport_to_p3(n) == module(2 * W - Y, 2 * W, X - Z, X)
    assert det_quadric(transport_to_p3(n)) == -1 * (X * Y - 2 * (Z * W))


def test_transport_monomials():
    n = ResolutionData(
        1,
        matrix=[
            [BidegreeForm.monomial(1, 1, 1, 1), BidegreeForm.zero(1, 1)],
            [BidegreeForm.zero(1, 1), BidegreeForm.monomial(1, 1, 0, 0)],
        ],
    )
    assert transport_to_p3(n) == module(X, O, O, Y)


def test_transport_rejects_degenerate():
    with pytest.raises(ValueError):
        # det identically zero is rejected at construction already
        resolution_of([[X, Y], [X, Y]])
    with pytest.raises(DegenerateMatrix):
        transport_to_q(module(X, Y, O, O))


def test_transport_to_q_monomial():
    r = transport_to_q(module(X, O, O, Y))
    assert r == ResolutionData(
        1,
        matrix=[
            [BidegreeForm.monomial(1, 1, 1, 1), BidegreeForm.zero(1, 1)],
            [BidegreeForm.zero(1, 1), BidegreeForm.monomial(1, 1, 0, 0)],
        ],
    )


def test_transport_to_q_rejects_det_proportional_to_q():
    # the canonical special modules have det = xy - zw, which dies on Q:
    # their sheaves resolve through the ruling kinds, not through a matrix
    with pytest.raises(DegenerateMatrix):
        transport_to_q(module(X, Z, W, Y))


def test_round_trip_random_modules():
    rng = random.Random(33)
    for _ in range(25):
        m = random_stable_module(rng)
        cert = certify_to_q(m)
        assert cert.round_trip_ok
        assert transport_to_p3(transport_to_q(m)) == m


def test_det_compatibility_identity():
    rng = random.Random(35)
    for _ in range(25):
        m = random_stable_module(rng)
        assert segre_quadric(det_quadric(m)) == transport_to_q(m).det()


def test_canonical_special_modules():
    d10 = canonical_special_module(SpecialPoint.D10)
    d01 = canonical_special_module(SpecialPoint.D01)
    assert d10 == module(X, Z, W, Y)
    assert d01 == module(X, W, Z, Y)
    for m in (d10, d01):
        assert classify_stratum(m) is StratumLabel.STABLE
        assert det_quadric(m) == Q_FORM
    ok, _ = is_equivalent(d10, d01)
    assert not ok


def test_special_modules_sweep_opposite_families():
    d10 = canonical_special_module(SpecialPoint.D10)
    d01 = canonical_special_module(SpecialPoint.D01)
    for s, t in [(1, 0), (0, 1), (1, 1), (2, -3)]:
        assert ruling_family_in_q(line_at_parameter(d10, s, t)) is RulingFamily.SECOND_FACTOR
        assert ruling_family_in_q(line_at_parameter(d01, s, t)) is RulingFamily.FIRST_FACTOR


def test_contract_resolution_dispatch():
    b = segre_quadric(X * Y - 2 * (Z * W))
    assert contract_resolution(ResolutionData(2, b=b)) == canonical_special_module(
        SpecialPoint.D10
    )
    assert contract_resolution(ResolutionData(3, b=b)) == canonical_special_module(
        SpecialPoint.D01
    )


def test_block_transport_polystable_classification():
    rng = random.Random(37)
    for _ in range(10):
        g = random_linear_form(rng)
        while True:
            h = random_linear_form(rng)
            if not g.proportional_to(h):
                break
        distinct = resolution_of([[g, O], [O, h]])
        assert classify_stratum(transport_to_p3(distinct)) is StratumLabel.Y1
        same = resolution_of([[g, O], [O, 3 * g]])
        assert classify_stratum(transport_to_p3(same)) is StratumLabel.Y0
        extension = resolution_of([[g, h], [O, 3 * g]])
        assert classify_stratum(transport_to_p3(extension)) is StratumLabel.Z0


def test_block_transport_det_is_product_of_supports():
    rng = random.Random(39)
    g = random_linear_form(rng)
    h = random_linear_form(rng)
    n = resolution_of([[g, O], [O, h]])
    if not det_quadric_is_zero(g, h):
        assert det_quadric(transport_to_p3(n)) == g * h


def det_quadric_is_zero(g, h):
    return (g * h).is_zero
