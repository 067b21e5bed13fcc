"""From a stable Kronecker module to a parametrized conic in Gr(2,4).

The pencil N(s,t) = s*R1 + t*R2 stacks the coefficient rows of the column
combination of the module.  For a stable module N(s,t) has rank 2 at every
parameter, and the kernel planes trace a degree-2 curve in the Grassmannian,
recorded by six binary quadratics in Pluecker order.

Sign convention (fixed once, validated by the swept-line checks): with
q_ij(s,t) the 2x2 minor of N on columns (i,j),

    p12 = q34,  p13 = -q24,  p14 = q23,
    p23 = q14,  p24 = -q13,  p34 = q12.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .errors import NotStable
from .exact import BinaryForm, Matrix, gcd_binary_forms, rat
from .kronecker import (
    KroneckerModule,
    StratumLabel,
    classify_stratum,
    dependency_form,
)
from .quadgeom import LineInP3

#: Pluecker coordinate order used everywhere
PLUECKER_ORDER = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


@dataclass(frozen=True)
class PencilMatrix:
    """The two 2x4 coefficient slices of a module's columns.

    Evaluation s*R1 + t*R2 reproduces the coefficient stack of the column
    combination at [s:t].
    """

    r1: Matrix
    r2: Matrix

    @classmethod
    def from_module(cls, m: KroneckerModule) -> "PencilMatrix":
        return cls(*m.column_slices())

    def evaluate(self, s, t) -> Matrix:
        s, t = rat(s), rat(t)
        return Matrix(
            [
                [s * a + t * b for a, b in zip(row1, row2)]
                for row1, row2 in zip(self.r1.data, self.r2.data)
            ]
        )


class ConicInGrassmannian:
    """Six binary quadratics (p12, p13, p14, p23, p24, p34) in (s, t)."""

    __slots__ = ("forms",)

    def __init__(self, forms: Sequence[BinaryForm]):
        fs = tuple(forms)
        if len(fs) != 6 or any(f.degree != 2 for f in fs):
            raise ValueError("a conic is six binary quadratics")
        if all(f.is_zero for f in fs):
            raise ValueError("the zero tuple is not a conic")
        self.forms = fs

    def plucker_defect(self) -> BinaryForm:
        """The quartic p12*p34 - p13*p24 + p14*p23; zero iff the image is in Gr(2,4)."""
        p12, p13, p14, p23, p24, p34 = self.forms
        return p12 * p34 - p13 * p24 + p14 * p23

    def evaluate(self, s, t) -> tuple[Fraction, ...]:
        return tuple(f.evaluate(s, t) for f in self.forms)

    def __eq__(self, other) -> bool:
        return isinstance(other, ConicInGrassmannian) and self.forms == other.forms

    def same_image_point(self, other: "ConicInGrassmannian", s, t, s2, t2) -> bool:
        """Whether the two parametrizations hit the same P^5 point."""
        a = self.evaluate(s, t)
        b = other.evaluate(s2, t2)
        from .exact import _proportional

        return any(v != 0 for v in a) and any(v != 0 for v in b) and _proportional(a, b)

    def __repr__(self) -> str:
        from .exact import format_binary

        return "ConicInGrassmannian(" + ", ".join(
            format_binary(f) for f in self.forms
        ) + ")"


@dataclass(frozen=True)
class ConicDiagnostics:
    plucker_ok: bool
    basepoint_gcd: BinaryForm
    degree: int


def _pencil_minors(m: KroneckerModule) -> list[BinaryForm]:
    """The six 2x2 minors q_ij(s,t) of the pencil, in column-pair order."""
    r1, r2 = m.column_slices()
    entries = [
        [BinaryForm([r1[i][j], r2[i][j]]) for j in range(4)] for i in range(2)
    ]
    return [
        entries[0][i] * entries[1][j] - entries[0][j] * entries[1][i]
        for i, j in combinations(range(4), 2)
    ]


def phi(m: KroneckerModule) -> ConicInGrassmannian:
    """Kernel-Pluecker coordinates of the pencil of a stable module.

    Raises NotStable (with the dependency form as diagnostic) off the stable
    locus, where the parametrization would acquire basepoints.
    """
    if classify_stratum(m) is not StratumLabel.STABLE:
        dep = dependency_form(m)
        raise NotStable(
            "phi is regular only on stable modules; dependency form "
            f"{dep.coeffs} has projective roots",
            dependency_form=dep,
        )
    q12, q13, q14, q23, q24, q34 = _pencil_minors(m)
    return ConicInGrassmannian([q34, -q24, q23, q14, -q13, q12])


def line_at_parameter(m: KroneckerModule, s, t) -> LineInP3:
    """The line in P^3 swept at parameter [s:t]: the kernel plane of N(s,t)."""
    s, t = rat(s), rat(t)
    if s == 0 and t == 0:
        raise ValueError("[0:0] is not a projective parameter")
    kernel = PencilMatrix.from_module(m).evaluate(s, t).kernel_basis()
    if len(kernel) != 2:
        dep = dependency_form(m)
        raise NotStable(
            f"pencil does not have rank 2 at [{s}:{t}]", dependency_form=dep
        )
    return LineInP3(kernel[0], kernel[1])


def parameter_of_line(
    m: KroneckerModule, line: LineInP3
) -> Optional[tuple[Fraction, Fraction]]:
    """The parameter [s:t] whose swept line is the given one, if any.

    Solves N(s,t) v = 0 for both spanning points: four linear conditions on
    (s, t).  Rank arguments make this field-insensitive, so a rational
    parameter exists whenever a complex one does; None means no parameter.
    """
    r1, r2 = m.column_slices()
    rows = []
    for point in line.points:
        c1 = r1.apply(point)
        c2 = r2.apply(point)
        rows.extend([[a, b] for a, b in zip(c1, c2)])
    kernel = Matrix(rows).kernel_basis()
    if not kernel:
        return None
    if len(kernel) > 1:
        raise NotStable("every parameter fixes the line; module is degenerate")
    s, t = kernel[0]
    return (s, t)


def conic_diagnostics(c: ConicInGrassmannian) -> ConicDiagnostics:
    """Exact Pluecker check, basepoint gcd, and degree of the reduced map."""
    gcd = gcd_binary_forms(list(c.forms))
    return ConicDiagnostics(
        plucker_ok=c.plucker_defect().is_zero,
        basepoint_gcd=gcd,
        degree=2 - gcd.degree,
    )


def swept_quadric(m: KroneckerModule):
    """The surface swept by the parametrized lines: the determinant quadric."""
    from .kronecker import det_quadric

    return det_quadric(m)
