"""Kronecker modules: 2x2 matrices of linear forms on P^3 with the
PGL2 x PGL2 action, decided semistability and the stratification of the
strictly semistable locus.

The stratum of a semistable module is read off two exact invariants that
are insensitive to field extension:

* the dimension of the endomorphism-pair space {(P, Q) : Q M = M P}, and
* the Gram rank of the determinant quadric.

Both are constant on orbits, which the test-suite checks by conjugating
normal forms with random group elements.
"""

from __future__ import annotations

import itertools
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

from .errors import DegenerateParams, SingularGroupElement
from .exact import (
    BinaryForm,
    LinearFormP3,
    Matrix,
    QuadricForm,
    gcd_binary_forms,
    rat,
)


class StratumLabel(Enum):
    UNSTABLE = "UNSTABLE"
    STABLE = "STABLE"
    Y0 = "Y0"
    Z0 = "Z0"
    Y1 = "Y1"
    Z1 = "Z1"

    def __str__(self) -> str:
        return self.value


class SemistabilityLevel(Enum):
    UNSTABLE = "UNSTABLE"
    STRICTLY_SEMISTABLE = "STRICTLY_SEMISTABLE"
    STABLE = "STABLE"

    def __str__(self) -> str:
        return self.value


class KroneckerModule:
    """A 2x2 matrix of linear forms; rows index the target, columns the source."""

    __slots__ = ("entries",)

    def __init__(self, entries: Sequence[Sequence[LinearFormP3]]):
        rows = tuple(tuple(row) for row in entries)
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise ValueError("a Kronecker module is a 2x2 matrix of linear forms")
        if all(e.is_zero for row in rows for e in row):
            raise ValueError("the zero matrix is not a point of the projective space")
        self.entries = rows

    def __getitem__(self, i: int) -> tuple[LinearFormP3, LinearFormP3]:
        return self.entries[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, KroneckerModule) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def scale(self, c) -> "KroneckerModule":
        c = rat(c)
        if c == 0:
            raise ValueError("cannot scale a module by zero")
        return KroneckerModule([[c * e for e in row] for row in self.entries])

    def transpose(self) -> "KroneckerModule":
        e = self.entries
        return KroneckerModule([[e[0][0], e[1][0]], [e[0][1], e[1][1]]])

    def column_slices(self) -> tuple[Matrix, Matrix]:
        """2x4 coefficient matrices R1, R2 of the two columns.

        Row i of Rj holds the coefficients of entry (i, j), so the pencil
        s*R1 + t*R2 stacks the coefficient rows of the column combination.
        """
        e = self.entries
        r1 = Matrix([list(e[0][0].coeffs), list(e[1][0].coeffs)])
        r2 = Matrix([list(e[0][1].coeffs), list(e[1][1].coeffs)])
        return r1, r2

    def row_slices(self) -> tuple[Matrix, Matrix]:
        return self.transpose().column_slices()

    def __repr__(self) -> str:
        from .exact import format_linear

        rows = "; ".join(
            ", ".join(format_linear(e) for e in row) for row in self.entries
        )
        return f"KroneckerModule([{rows}])"


class GroupElement:
    """A pair (A, B) acting on modules by M -> A M B^-1.

    ``left`` changes the target basis (mixes rows), ``right`` the source
    basis (mixes columns).
    """

    __slots__ = ("left", "right")

    def __init__(self, left: Matrix, right: Matrix):
        for m in (left, right):
            if m.rows != 2 or m.cols != 2:
                raise ValueError("group elements are pairs of 2x2 matrices")
            if m.det() == 0:
                raise SingularGroupElement("group factor is not invertible")
        self.left = left
        self.right = right

    @classmethod
    def identity(cls) -> "GroupElement":
        return cls(Matrix.identity(2), Matrix.identity(2))

    def inverse(self) -> "GroupElement":
        return GroupElement(self.left.inverse(), self.right.inverse())

    def __repr__(self) -> str:
        return f"GroupElement(left={self.left!r}, right={self.right!r})"


def act(g: GroupElement, m: KroneckerModule) -> KroneckerModule:
    """The action A M B^-1, computed entrywise on linear forms."""
    b_inv = g.right.inverse()
    a = g.left
    e = m.entries
    out = []
    for i in range(2):
        row = []
        for j in range(2):
            acc = LinearFormP3.zero()
            for k in range(2):
                for l in range(2):
                    c = a[i][k] * b_inv[l][j]
                    if c:
                        acc = acc + c * e[k][l]
            row.append(acc)
        out.append(row)
    return KroneckerModule(out)


def pencil_stack(m: KroneckerModule, s, t) -> Matrix:
    """The 2x4 coefficient stack of the column combination s*col1 + t*col2."""
    r1, r2 = m.column_slices()
    s, t = rat(s), rat(t)
    return Matrix(
        [
            [s * a + t * b for a, b in zip(row1, row2)]
            for row1, row2 in zip(r1.data, r2.data)
        ]
    )


def dependency_form(m: KroneckerModule) -> BinaryForm:
    """Gcd of the six 2x2 minors of the column-combination stack.

    The combination parameter [a1 : a2] runs over source subspaces; the gcd
    has a root exactly where the image of the combined map drops below
    dimension 2.  Returns the zero form when every minor vanishes identically.
    """
    r1, r2 = m.column_slices()
    # entry (i, c) of the stack is the degree-1 binary form a1*R1[i][c] + a2*R2[i][c]
    minors = []
    for c1, c2 in itertools.combinations(range(4), 2):
        f1 = BinaryForm([r1[0][c1], r2[0][c1]])
        f2 = BinaryForm([r1[0][c2], r2[0][c2]])
        g1 = BinaryForm([r1[1][c1], r2[1][c1]])
        g2 = BinaryForm([r1[1][c2], r2[1][c2]])
        minors.append(f1 * g2 - f2 * g1)
    return gcd_binary_forms(minors)


def _combination_rank(r1: Matrix, r2: Matrix) -> int:
    """Rank of the 8x2 stack whose columns are the two flattened slices."""
    flat1 = [c for row in r1.data for c in row]
    flat2 = [c for row in r2.data for c in row]
    return Matrix([[a, b] for a, b in zip(flat1, flat2)]).rank()


def semistability_level(m: KroneckerModule) -> SemistabilityLevel:
    """Unstable when a zero column or zero row is reachable by the action.

    A zero column is reachable iff the two column slices are linearly
    dependent as 8-vectors; the row-side test is symmetric.  On the
    semistable part, stability is equivalent to the dependency form being a
    nonzero constant.
    """
    col_rank = _combination_rank(*m.column_slices())
    row_rank = _combination_rank(*m.row_slices())
    if col_rank <= 1 or row_rank <= 1:
        return SemistabilityLevel.UNSTABLE
    if dependency_form(m).is_nonzero_constant:
        return SemistabilityLevel.STABLE
    return SemistabilityLevel.STRICTLY_SEMISTABLE


def end_algebra_dim(m: KroneckerModule) -> int:
    """Dimension of the space of scalar 2x2 pairs (P, Q) with Q M = M P.

    The 16 coefficient equations in the 8 unknowns (q11,...,q22,p11,...,p22)
    form an exact linear system; scalar pairs always solve it, so the
    dimension is at least 1.  Invariant under the group action.
    """
    e = m.entries
    rows = []
    for i in range(2):
        for j in range(2):
            # coefficient of each P^3 variable in (QM - MP)[i][j]
            for v in range(4):
                row = [Fraction(0)] * 8
                for k in range(2):
                    row[2 * i + k] += e[k][j].coeffs[v]      # q[i][k] * m[k][j]
                    row[4 + 2 * k + j] -= e[i][k].coeffs[v]  # m[i][k] * p[k][j]
                rows.append(row)
    system = Matrix(rows)
    return system.cols - system.rank()


def det_quadric(m: KroneckerModule) -> QuadricForm:
    """The determinant m11*m22 - m12*m21; supports the cokernel sheaf."""
    e = m.entries
    return e[0][0] * e[1][1] - e[0][1] * e[1][0]


def classify_stratum(m: KroneckerModule) -> StratumLabel:
    """Full stratum label: unstable / stable, or one of Y0, Z0, Y1, Z1."""
    level = semistability_level(m)
    if level is SemistabilityLevel.UNSTABLE:
        return StratumLabel.UNSTABLE
    if level is SemistabilityLevel.STABLE:
        return StratumLabel.STABLE
    dim = end_algebra_dim(m)
    if dim >= 4:
        return StratumLabel.Y0
    if dim == 1:
        return StratumLabel.Z1
    rank = det_quadric(m).gram_rank()
    return StratumLabel.Z0 if rank == 1 else StratumLabel.Y1


def _solution_space(m1: KroneckerModule, m2: KroneckerModule):
    """Basis of the space of pairs (A, B) with A m1 = m2 B.

    Unknown order: a11, a12, a21, a22, b11, b12, b21, b22.
    """
    rows = []
    for i in range(2):
        for j in range(2):
            for v in range(4):
                row = [Fraction(0)] * 8
                for k in range(2):
                    row[2 * i + k] += m1.entries[k][j].coeffs[v]
                    row[4 + 2 * k + j] -= m2.entries[i][k].coeffs[v]
                rows.append(row)
    return Matrix(rows).kernel_basis()


def _expand_det_product(basis) -> dict[tuple[int, ...], Fraction]:
    """det(A(w)) * det(B(w)) as a polynomial in the basis coordinates w."""

    def linear(entry_idx):
        # coefficient vector of the entry as a linear function of w
        return [vec[entry_idx] for vec in basis]

    def mul(p, q):
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in p.items():
            for e2, c2 in q.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return {k: v for k, v in out.items() if v != 0}

    def from_linear(coeffs):
        d = len(basis)
        out = {}
        for i, c in enumerate(coeffs):
            if c:
                key = tuple(1 if j == i else 0 for j in range(d))
                out[key] = c
        return out

    def det_poly(offset):
        a = from_linear(linear(offset + 0))
        b = from_linear(linear(offset + 1))
        c = from_linear(linear(offset + 2))
        d = from_linear(linear(offset + 3))
        ad, bc = mul(a, d), mul(b, c)
        out = dict(ad)
        for k, v in bc.items():
            out[k] = out.get(k, Fraction(0)) - v
        return {k: v for k, v in out.items() if v != 0}

    return mul(det_poly(0), det_poly(4))


def is_equivalent(
    m1: KroneckerModule, m2: KroneckerModule
) -> tuple[bool, Optional[GroupElement]]:
    """Orbit membership with a witness.

    Solves the linear system A m1 = m2 B and decides, by full symbolic
    expansion over the solution space, whether det A * det B is not
    identically zero; a rational witness then exists on a small integer grid
    because the product has degree at most 4 in each coordinate.
    """
    basis = _solution_space(m1, m2)
    if not basis:
        return False, None
    poly = _expand_det_product(basis)
    if not poly:
        return False, None
    d = len(basis)
    for point in itertools.product(range(5), repeat=d):
        value = Fraction(0)
        for expo, coeff in poly.items():
            term = coeff
            for e, p in zip(expo, point):
                if e:
                    term *= Fraction(p) ** e
            value += term
        if value != 0:
            combo = [
                sum((Fraction(p) * vec[k] for p, vec in zip(point, basis)), Fraction(0))
                for k in range(8)
            ]
            witness = GroupElement(
                Matrix([[combo[0], combo[1]], [combo[2], combo[3]]]),
                Matrix([[combo[4], combo[5]], [combo[6], combo[7]]]),
            )
            return True, witness
    raise AssertionError("nonzero quartic vanished on a full grid")  # unreachable


def normal_form_sample(label: StratumLabel, params) -> KroneckerModule:
    """Build the stratum's normal form from its parametrization data.

    * Y0: params = (A, g) with A an invertible 2x2 rational matrix and g a
      nonzero linear form; the module is g * A.
    * Z0: params = (g, h, (s, t, u)) with g, h independent linear forms and
      s, t, u nonzero scalars; the module is [[s*g, u*h], [0, t*g]].
    * Y1: params = (g, h) with g, h independent; the module is diag(g, h).
    * Z1: params = (g, h, k) with g, h independent and k outside their span;
      the module is [[g, k], [0, h]].

    Raises DegenerateParams when the data would land in a deeper stratum.
    """
    if label is StratumLabel.Y0:
        a, g = params
        if not isinstance(a, Matrix):
            a = Matrix(a)
        if a.det() == 0:
            raise DegenerateParams("Y0 needs an invertible scalar matrix")
        if g.is_zero:
            raise DegenerateParams("Y0 needs a nonzero linear form")
        module = KroneckerModule([[a[0][0] * g, a[0][1] * g], [a[1][0] * g, a[1][1] * g]])
    elif label is StratumLabel.Z0:
        g, h, stu = params
        s, t, u = (rat(v) for v in stu)
        if g.is_zero or h.is_zero or g.proportional_to(h):
            raise DegenerateParams("Z0 needs independent forms g, h")
        if s == 0 or t == 0 or u == 0:
            raise DegenerateParams("Z0 needs nonzero scalars [s:t:u]")
        module = KroneckerModule([[s * g, u * h], [LinearFormP3.zero(), t * g]])
    elif label is StratumLabel.Y1:
        g, h = params
        if g.is_zero or h.is_zero or g.proportional_to(h):
            raise DegenerateParams("Y1 needs independent forms g, h")
        module = KroneckerModule([[g, LinearFormP3.zero()], [LinearFormP3.zero(), h]])
    elif label is StratumLabel.Z1:
        g, h, k = params
        if g.is_zero or h.is_zero or g.proportional_to(h):
            raise DegenerateParams("Z1 needs independent forms g, h")
        span = Matrix([list(g.coeffs), list(h.coeffs), list(k.coeffs)])
        if span.rank() < 3:
            raise DegenerateParams("Z1 needs k outside the span of g and h")
        module = KroneckerModule([[g, k], [LinearFormP3.zero(), h]])
    else:
        raise ValueError(f"no normal-form parametrization for {label}")
    got = classify_stratum(module)
    if got is not label:
        raise DegenerateParams(f"parameters landed in {got}, not {label}")
    return module
