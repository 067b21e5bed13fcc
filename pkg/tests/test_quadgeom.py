"""Segre charts, pair validation, divisor ideals and the resolution chain."""

import random

import pytest

from reguli.errors import LineOnQ, NotARuling, NotInIdeal, PairValidationError
from reguli.exact import BidegreeForm, LinearFormP3, Matrix
from reguli.quadgeom import (
    LineInP3,
    PairFault,
    Q_FORM,
    ResolutionData,
    RulingFamily,
    decompose_on_quadric,
    divisor_ideal_forms,
    linear_from_segre,
    resolution_from_pair,
    ruling_family_in_q,
    segre_linear,
    segre_point,
    segre_preimage,
    segre_quadric,
    validate_pair,
)
from reguli.sampling import random_pair, random_ruling_pair

X = LinearFormP3.variable("x")
Y = LinearFormP3.variable("y")
Z = LinearFormP3.variable("z")
W = LinearFormP3.variable("w")

WORKED_QUADRIC = X * Y - 2 * (Z * W)
WORKED_LINE = LineInP3((1, 0, 1, 0), (0, 2, 0, 1))


# ---------------------------------------------------------------------------
# Segre conversions
# ---------------------------------------------------------------------------


def test_segre_linear_images():
    assert segre_linear(X) == BidegreeForm.monomial(1, 1, 1, 1)  # su
    assert segre_linear(Y) == BidegreeForm.monomial(1, 1, 0, 0)  # tv
    assert segre_linear(Z) == BidegreeForm.monomial(1, 1, 1, 0)  # sv
    assert segre_linear(W) == BidegreeForm.monomial(1, 1, 0, 1)  # tu


def test_segre_round_trip_on_linear_forms():
    rng = random.Random(1)
    for _ in range(20):
        form = LinearFormP3([rng.randint(-5, 5) for _ in range(4)])
        assert linear_from_segre(segre_linear(form)) == form


def test_segre_kills_exactly_q():
    assert segre_quadric(Q_FORM).is_zero
    assert segre_quadric(3 * Q_FORM).is_zero
    assert not segre_quadric(WORKED_QUADRIC).is_zero


def test_segre_point_and_preimage():
    assert segre_point((1, 0), (1, 0)) == (1, 0, 0, 0)
    rng = random.Random(2)
    for _ in range(30):
        st = (rng.randint(-4, 4), rng.randint(-4, 4))
        uv = (rng.randint(-4, 4), rng.randint(-4, 4))
        if st == (0, 0) or uv == (0, 0):
            continue
        point = segre_point(st, uv)
        st2, uv2 = segre_preimage(point)
        assert segre_point(st2, uv2) == point or _projectively_equal(
            segre_point(st2, uv2), point
        )


def _projectively_equal(a, b):
    from reguli.exact import _proportional

    return _proportional(list(a), list(b))


def test_preimage_rejects_points_off_q():
    from reguli.errors import PointNotOnQ

    with pytest.raises(PointNotOnQ):
        segre_preimage((1, 1, 0, 0))


# ---------------------------------------------------------------------------
# pair validation
# ---------------------------------------------------------------------------


def test_validate_worked_pair():
    assert validate_pair(WORKED_QUADRIC, WORKED_LINE) is None


def test_validate_equals_q():
    ruling = LineInP3((0, 1, 0, 0), (0, 0, 0, 1))
    assert validate_pair(Q_FORM, ruling) is PairFault.EQUALS_Q


def test_validate_line_on_q():
    ruling = LineInP3((0, 1, 0, 0), (0, 0, 0, 1))  # x = z = 0
    assert validate_pair(WORKED_QUADRIC, ruling) is PairFault.LINE_ON_Q


def test_validate_singular_and_missing_line():
    assert (
        validate_pair(X * Y, LineInP3((0, 0, 1, 0), (0, 0, 0, 1)))
        is PairFault.SINGULAR_QUADRIC
    )
    q = X * X + Y * Y + Z * Z + W * W
    assert (
        validate_pair(q, WORKED_LINE) is PairFault.LINE_NOT_ON_QUADRIC
    )


# ---------------------------------------------------------------------------
# divisor ideal
# ---------------------------------------------------------------------------


def test_divisor_ideal_worked_example():
    c1, c2 = divisor_ideal_forms(WORKED_LINE)
    assert (c1, c2) == (X - Z, Y - 2 * W)


def test_divisor_ideal_coordinate_line():
    c1, c2 = divisor_ideal_forms(LineInP3((1, 0, 0, 0), (0, 1, 0, 0)))
    assert (c1, c2) == (Z, W)


def test_divisor_ideal_rejects_rulings():
    with pytest.raises(LineOnQ):
        divisor_ideal_forms(LineInP3((1, 0, 0, 0), (0, 0, 0, 1)))  # y = z = 0


def test_divisor_ideal_independent_of_span():
    rng = random.Random(3)
    for _ in range(15):
        base = LineInP3((1, 0, 1, 0), (0, 2, 0, 1))
        a, b, c, d = (rng.randint(-4, 4) for _ in range(4))
        if a * d - b * c == 0:
            continue
        respanned = LineInP3(
            base.point_at(a, b),
            base.point_at(c, d),
        )
        assert divisor_ideal_forms(respanned) == divisor_ideal_forms(base)


# ---------------------------------------------------------------------------
# decomposition in the divisor ideal
# ---------------------------------------------------------------------------


def test_decompose_worked_identity():
    b = segre_quadric(WORKED_QUADRIC)
    c1 = segre_linear(X - Z)
    c2 = segre_linear(Y - 2 * W)
    a1, a2 = decompose_on_quadric(b, c1, c2)
    assert a1 * c1 + a2 * c2 == b
    # the canonical echelon solution of the worked chain
    assert a1 == 2 * BidegreeForm.monomial(1, 1, 0, 1)  # 2tu
    assert a2 == BidegreeForm.monomial(1, 1, 1, 1)       # su


def test_decompose_multiple_of_c1():
    c1 = segre_linear(X - Z)
    c2 = segre_linear(Y - 2 * W)
    m = segre_linear(W + 3 * X)
    a1, a2 = decompose_on_quadric(c1 * m, c1, c2)
    assert a1 * c1 + a2 * c2 == c1 * m


def test_decompose_rejects_generic_form():
    c1 = segre_linear(X - Z)
    c2 = segre_linear(Y - 2 * W)
    generic = segre_quadric(X * X + Y * Y + Z * Z + W * W + X * Y)
    with pytest.raises(NotInIdeal):
        decompose_on_quadric(generic, c1, c2)


def test_decompose_ambiguity_is_the_syzygy():
    b = segre_quadric(WORKED_QUADRIC)
    c1 = segre_linear(X - Z)
    c2 = segre_linear(Y - 2 * W)
    a1, a2 = decompose_on_quadric(b, c1, c2)
    for lam in (1, -2, 5):
        shifted1 = a1 - lam * c2
        shifted2 = a2 + lam * c1
        assert shifted1 * c1 + shifted2 * c2 == b


# ---------------------------------------------------------------------------
# resolution construction
# ---------------------------------------------------------------------------


def test_resolution_worked_chain():
    r = resolution_from_pair(WORKED_QUADRIC, WORKED_LINE)
    assert r.kind == 1
    expected = [
        [-1 * segre_linear(Y - 2 * W), 2 * BidegreeForm.monomial(1, 1, 0, 1)],
        [segre_linear(X - Z), BidegreeForm.monomial(1, 1, 1, 1)],
    ]
    assert [list(row) for row in r.matrix] == expected
    assert r.det() == -segre_quadric(WORKED_QUADRIC)


def test_resolution_det_stable_under_syzygy_shift():
    r = resolution_from_pair(WORKED_QUADRIC, WORKED_LINE)
    c2, a1 = -1 * r.matrix[0][0], r.matrix[0][1]
    c1, a2 = r.matrix[1][0], r.matrix[1][1]
    for lam in (2, -3):
        shifted = ResolutionData(
            1, matrix=[[-1 * c2, a1 - lam * c2], [c1, a2 + lam * c1]]
        )
        assert shifted.det() == r.det()


def test_resolution_rank_drop_on_curve():
    # N has rank < 2 exactly over points of the supporting curve b = 0
    r = resolution_from_pair(WORKED_QUADRIC, WORKED_LINE)
    b = segre_quadric(WORKED_QUADRIC)
    # the point ([1:0],[0:1]) = (0,0,0,1): on Q and on the worked quadric
    st, uv = (1, 0), (0, 1)
    assert b.evaluate(st, uv) == 0
    values = Matrix([[e.evaluate(st, uv) for e in row] for row in r.matrix])
    assert values.rank() <= 1


def test_resolution_ruling_routes():
    r3 = resolution_from_pair(WORKED_QUADRIC, LineInP3((0, 1, 0, 0), (0, 0, 0, 1)))
    assert r3.kind == 3 and r3.b == segre_quadric(WORKED_QUADRIC)
    r2 = resolution_from_pair(WORKED_QUADRIC, LineInP3((0, 1, 0, 0), (0, 0, 1, 0)))
    assert r2.kind == 2


def test_resolution_propagates_faults():
    q = X * X + Y * Y + Z * Z + W * W
    with pytest.raises(PairValidationError) as info:
        resolution_from_pair(q, WORKED_LINE)
    assert info.value.fault is PairFault.LINE_NOT_ON_QUADRIC


def test_resolution_on_random_transported_pairs():
    rng = random.Random(5)
    for _ in range(10):
        q, line = random_pair(rng, "standard")
        r = resolution_from_pair(q, line)
        assert r.kind == 1
        assert r.det() == -segre_quadric(q)


# ---------------------------------------------------------------------------
# ruling families
# ---------------------------------------------------------------------------


def test_ruling_families():
    assert (
        ruling_family_in_q(LineInP3((0, 1, 0, 0), (0, 0, 0, 1)))
        is RulingFamily.FIRST_FACTOR
    )  # x = z = 0 has constant [s:t]
    assert (
        ruling_family_in_q(LineInP3((0, 1, 0, 0), (0, 0, 1, 0)))
        is RulingFamily.SECOND_FACTOR
    )  # x = w = 0


def test_ruling_family_rejects_off_q():
    with pytest.raises(NotARuling):
        ruling_family_in_q(LineInP3((1, 0, 0, 0), (0, 1, 0, 0)))  # z = w = 0


def test_random_ruling_pairs_route_to_special_kinds():
    rng = random.Random(7)
    for _ in range(10):
        q, line = random_ruling_pair(rng)
        r = resolution_from_pair(q, line)
        family = ruling_family_in_q(line)
        assert r.kind == (2 if family is RulingFamily.SECOND_FACTOR else 3)
        assert r.b == segre_quadric(q)
