"""Seeded random generators for modules, forms and test geometry.

All functions take an explicit ``random.Random`` so every consumer (tests,
the CLI selftest, the acceptance suite) is reproducible.  Coefficients are
small integers; rejection loops only guard against measure-zero
degeneracies, so they terminate almost immediately.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .exact import LinearFormP3, Matrix, QuadricForm
from .kronecker import (
    GroupElement,
    KroneckerModule,
    StratumLabel,
    classify_stratum,
    normal_form_sample,
)
from .quadgeom import LineInP3, Q_FORM, segre_point, validate_pair

COEFF_RANGE = (-9, 9)

#: the worked pair: a smooth quadric with a rational line on it, off Q
STANDARD_PAIR_QUADRIC = QuadricForm([0, 1, 0, 0, 0, 0, 0, 0, -2, 0])  # xy - 2zw
STANDARD_PAIR_LINE = ((1, 0, 1, 0), (0, 2, 0, 1))

#: a pair with monomial data: xz - yw and the coordinate line x = y = 0
MONOMIAL_PAIR_QUADRIC = QuadricForm([0, 0, 1, 0, 0, 0, -1, 0, 0, 0])  # xz - yw
MONOMIAL_PAIR_LINE = ((0, 0, 1, 0), (0, 0, 0, 1))


def rand_coeff(rng: random.Random, lo: int = COEFF_RANGE[0], hi: int = COEFF_RANGE[1]) -> Fraction:
    return Fraction(rng.randint(lo, hi))


def random_linear_form(rng: random.Random, nonzero: bool = True) -> LinearFormP3:
    while True:
        form = LinearFormP3([rand_coeff(rng) for _ in range(4)])
        if not nonzero or not form.is_zero:
            return form


def random_invertible(rng: random.Random, n: int, lo: int = -5, hi: int = 5) -> Matrix:
    while True:
        m = Matrix([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)])
        if m.det() != 0:
            return m


def random_group_element(rng: random.Random) -> GroupElement:
    return GroupElement(random_invertible(rng, 2), random_invertible(rng, 2))


def random_module(rng: random.Random) -> KroneckerModule:
    while True:
        entries = [[LinearFormP3([rand_coeff(rng) for _ in range(4)]) for _ in range(2)]
                   for _ in range(2)]
        if not all(e.is_zero for row in entries for e in row):
            return KroneckerModule(entries)


def random_stable_module(rng: random.Random) -> KroneckerModule:
    while True:
        m = random_module(rng)
        if classify_stratum(m) is StratumLabel.STABLE:
            return m


def independent_form_pair(rng: random.Random) -> tuple[LinearFormP3, LinearFormP3]:
    while True:
        g = random_linear_form(rng)
        h = random_linear_form(rng)
        if not g.proportional_to(h):
            return g, h


def random_normal_form(rng: random.Random, label: StratumLabel) -> KroneckerModule:
    """A fresh sample of the requested boundary stratum's normal form."""
    if label is StratumLabel.Y0:
        return normal_form_sample(
            label, (random_invertible(rng, 2), random_linear_form(rng))
        )
    if label is StratumLabel.Z0:
        g, h = independent_form_pair(rng)
        stu = tuple(rng.choice([v for v in range(-5, 6) if v]) for _ in range(3))
        return normal_form_sample(label, (g, h, stu))
    if label is StratumLabel.Y1:
        return normal_form_sample(label, independent_form_pair(rng))
    if label is StratumLabel.Z1:
        while True:
            g, h = independent_form_pair(rng)
            k = random_linear_form(rng)
            span = Matrix([list(g.coeffs), list(h.coeffs), list(k.coeffs)])
            if span.rank() == 3:
                return normal_form_sample(label, (g, h, k))
    raise ValueError(f"no normal form for {label}")


def random_semistable_module(rng: random.Random) -> tuple[KroneckerModule, StratumLabel]:
    """A strictly semistable module (conjugated normal form) with its stratum."""
    label = rng.choice(
        [StratumLabel.Y0, StratumLabel.Z0, StratumLabel.Y1, StratumLabel.Z1]
    )
    base = random_normal_form(rng, label)
    from .kronecker import act

    return act(random_group_element(rng), base), label


def base_pair(name: str) -> tuple[QuadricForm, LineInP3]:
    if name == "standard":
        return STANDARD_PAIR_QUADRIC, LineInP3(*STANDARD_PAIR_LINE)
    if name == "monomial":
        return MONOMIAL_PAIR_QUADRIC, LineInP3(*MONOMIAL_PAIR_LINE)
    raise ValueError(f"unknown base pair {name!r}")


def random_pair(
    rng: random.Random, base: str = "standard"
) -> tuple[QuadricForm, LineInP3]:
    """Push a valid base pair through a random rational change of coordinates.

    A random smooth quadric over the rationals need not carry rational
    lines, so valid test pairs are produced by transport instead.
    """
    q, line = base_pair(base)
    t = random_invertible(rng, 4, lo=-3, hi=3)
    t_inv = t.inverse()
    moved_q = q.substitute(t_inv)
    moved_line = line.transform(t)
    assert validate_pair(moved_q, moved_line) is None
    return moved_q, moved_line


def random_ruling_line(rng: random.Random) -> LineInP3:
    """A random rational line inside Q, from either ruling family."""
    param = (rng.randint(-5, 5), rng.randint(1, 5))
    if rng.random() < 0.5:
        # constant [s:t]: sweep [u:v]
        p1 = segre_point(param, (1, 0))
        p2 = segre_point(param, (0, 1))
    else:
        p1 = segre_point((1, 0), param)
        p2 = segre_point((0, 1), param)
    return LineInP3(p1, p2)


def random_ruling_pair(rng: random.Random) -> tuple[QuadricForm, LineInP3]:
    """A smooth quadric different from Q through a random ruling of Q."""
    line = random_ruling_line(rng)
    conditions = Matrix(
        [
            [
                QuadricForm([1 if k == i else 0 for k in range(10)]).evaluate(pt)
                for i in range(10)
            ]
            for pt in (
                line.points[0],
                line.points[1],
                line.point_at(1, 1),
            )
        ]
    )
    basis = conditions.kernel_basis()
    while True:
        coeffs = [Fraction(0)] * 10
        for vec in basis:
            c = rand_coeff(rng, -3, 3)
            coeffs = [a + c * b for a, b in zip(coeffs, vec)]
        q = QuadricForm(coeffs)
        if q.is_zero or q.proportional_to(Q_FORM):
            continue
        if q.gram_rank() != 4:
            continue
        assert line.on_quadric(q)
        return q, line
