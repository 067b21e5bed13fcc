"""Acceptance suite: one test per criterion, at the stated sample counts and
runtime budgets.  All arithmetic is exact; every comparison is equality.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one PASS line per
criterion.
"""

import random
import time

from reguli.exact import BidegreeForm
from reguli.fmbridge import (
    SpecialPoint,
    canonical_special_module,
    contract_resolution,
    transport_to_p3,
    transport_to_q,
)
from reguli.grconic import conic_diagnostics, line_at_parameter, parameter_of_line, phi
from reguli.kronecker import (
    StratumLabel,
    act,
    classify_stratum,
    dependency_form,
    det_quadric,
)
from reguli.motivic import euler, pipeline_m2, proj_space, sym2
from reguli.quadgeom import (
    Q_FORM,
    ResolutionData,
    RulingFamily,
    resolution_from_pair,
    ruling_family_in_q,
    segre_quadric,
)
from reguli.sampling import (
    random_group_element,
    random_linear_form,
    random_module,
    random_normal_form,
    random_pair,
    random_ruling_pair,
    random_stable_module,
)


def report(number: int, name: str) -> None:
    print(f"acceptance {number} ({name}): PASS")


def test_acceptance_1_motivic_goldens():
    start = time.monotonic()
    table = pipeline_m2()
    assert list(table["M2_zero_plus"].coeffs) == [
        1, 4, 8, 9, 10, 10, 10, 9, 8, 4, 1,
    ]
    assert list(table["M2"].coeffs) == [1, 3, 3, 3, 2, 3, 3, 4, 3, 1]
    assert str(table["M2"]) == (
        "p^9 + 3p^8 + 4p^7 + 3p^6 + 3p^5 + 2p^4 + 3p^3 + 3p^2 + 3p + 1"
    )
    assert euler(table["M2"]) == 26
    assert euler(table["R"]) == 10
    assert euler(table["R"]) == 0 + euler(sym2(proj_space(3)))
    assert time.monotonic() - start < 1.0
    report(1, "motivic golden values")


def test_acceptance_2_stratum_classifier_soundness():
    start = time.monotonic()
    rng = random.Random(2024)
    per_stratum = 1000
    failures = 0
    for label in (StratumLabel.Y0, StratumLabel.Z0, StratumLabel.Y1, StratumLabel.Z1):
        for _ in range(per_stratum):
            base = random_normal_form(rng, label)
            moved = act(random_group_element(rng), base)
            if classify_stratum(moved) is not label:
                failures += 1
    elapsed = time.monotonic() - start
    assert failures == 0
    assert elapsed < 30.0, f"took {elapsed:.1f}s"
    report(2, f"classifier sound on 4x{per_stratum} conjugated normal forms")


def test_acceptance_3_stability_frequency():
    start = time.monotonic()
    rng = random.Random(333)
    total = 1000
    stable = 0
    for _ in range(total):
        m = random_module(rng)
        if classify_stratum(m) is StratumLabel.STABLE:
            stable += 1
            assert dependency_form(m).is_nonzero_constant
    elapsed = time.monotonic() - start
    assert stable >= 990, f"only {stable}/1000 stable"
    assert elapsed < 10.0, f"took {elapsed:.1f}s"
    report(3, f"stability frequency {stable}/1000")


def test_acceptance_4_plucker_certificate():
    start = time.monotonic()
    rng = random.Random(444)
    for _ in range(500):
        m = random_stable_module(rng)
        diag = conic_diagnostics(phi(m))
        assert diag.plucker_ok
        assert diag.basepoint_gcd.is_nonzero_constant
    from reguli.sampling import random_semistable_module

    for _ in range(500):
        m, _ = random_semistable_module(rng)
        # gcd of the six pencil minors: nonconstant exactly off the stable locus
        assert not dependency_form(m).is_nonzero_constant
    elapsed = time.monotonic() - start
    assert elapsed < 30.0, f"took {elapsed:.1f}s"
    report(4, "plucker certificate and basepoint dichotomy on 500+500 modules")


def test_acceptance_5_fitting_support_coherence():
    rng = random.Random(555)
    parameters = [(1, 0), (0, 1), (1, 1), (2, 3), (-3, 5)]
    for _ in range(200):
        m = random_stable_module(rng)
        dq = det_quadric(m)
        for s, t in parameters:
            line = line_at_parameter(m, s, t)
            # zero restriction means every point of the line is on the quadric
            assert line.restrict(dq).is_zero
    report(5, "200 modules x 5 parameters, swept lines on the Fitting quadric")


def _random_type1(rng: random.Random) -> ResolutionData:
    while True:
        entries = [
            [
                BidegreeForm(
                    1, 1, [[rng.randint(-9, 9) for _ in range(2)] for _ in range(2)]
                )
                for _ in range(2)
            ]
            for _ in range(2)
        ]
        det = entries[0][0] * entries[1][1] - entries[0][1] * entries[1][0]
        if not det.is_zero:
            return ResolutionData(1, matrix=entries)


def test_acceptance_6_fm_transport():
    rng = random.Random(666)
    for _ in range(200):
        n = _random_type1(rng)
        m = transport_to_p3(n)
        assert transport_to_q(m) == n
        assert segre_quadric(det_quadric(m)) == n.det()
    report(6, "transport round trip and det compatibility on 200 matrices")


def test_acceptance_7_end_to_end_diagram():
    start = time.monotonic()
    rng = random.Random(777)
    for index in range(100):
        base = "standard" if index % 2 == 0 else "monomial"
        q, line = random_pair(rng, base)
        resolution = resolution_from_pair(q, line)
        assert resolution.kind == 1
        assert resolution.det() == -segre_quadric(q)
        module = transport_to_p3(resolution)
        assert classify_stratum(module) is StratumLabel.STABLE
        assert det_quadric(module).proportional_to(q)
        assert parameter_of_line(module, line) is not None
    elapsed = time.monotonic() - start
    assert elapsed < 60.0, f"took {elapsed:.1f}s"
    report(7, "100 transported pairs pass every diagram stage")


def test_acceptance_8_contraction_of_divisors():
    rng = random.Random(888)
    for _ in range(50):
        q, line = random_ruling_pair(rng)
        resolution = resolution_from_pair(q, line)
        family = ruling_family_in_q(line)
        expected_kind = 2 if family is RulingFamily.SECOND_FACTOR else 3
        assert resolution.kind == expected_kind
        expected_point = (
            SpecialPoint.D10 if expected_kind == 2 else SpecialPoint.D01
        )
        assert contract_resolution(resolution) == canonical_special_module(
            expected_point
        )
    d10 = canonical_special_module(SpecialPoint.D10)
    d01 = canonical_special_module(SpecialPoint.D01)
    conic10, conic01 = phi(d10), phi(d01)
    # distinct conics: p14 vanishes identically on exactly one of them
    assert not conic10.forms[2].is_zero and conic01.forms[2].is_zero
    # both sweep the fixed quadric xy - zw
    assert det_quadric(d10) == Q_FORM and det_quadric(d01) == Q_FORM
    for s, t in [(1, 0), (0, 1), (1, 2), (4, -3)]:
        for m in (d10, d01):
            assert line_at_parameter(m, s, t).restrict(Q_FORM).is_zero
    report(8, "50 ruling pairs contract to the two special modules")


def test_acceptance_9_polystable_transport():
    rng = random.Random(999)
    zero = BidegreeForm.zero(1, 1)
    from reguli.quadgeom import segre_linear

    for _ in range(100):
        g = random_linear_form(rng)
        while True:
            h = random_linear_form(rng)
            if not g.proportional_to(h):
                break
        sg, sh = segre_linear(g), segre_linear(h)
        distinct = ResolutionData(1, matrix=[[sg, zero], [zero, sh]])
        assert classify_stratum(transport_to_p3(distinct)) is StratumLabel.Y1
        proportional = ResolutionData(1, matrix=[[sg, zero], [zero, 3 * sg]])
        assert classify_stratum(transport_to_p3(proportional)) is StratumLabel.Y0
        extension = ResolutionData(1, matrix=[[sg, sh], [zero, 3 * sg]])
        assert classify_stratum(transport_to_p3(extension)) is StratumLabel.Z0
        # the diagonal blocks are exactly the two support conics
        assert det_quadric(transport_to_p3(distinct)) == g * h
    report(9, "polystable block transport matches the boundary classification")
