"""Geometry on the fixed quadric Q = Z(xy - zw): Segre charts, validation of
(quadric, line) pairs, the ideal of the length-2 divisor cut by a line, and
the construction of a resolution matrix from a pair.

The Segre substitution is fixed once for the whole package:

    x = s*u,  y = t*v,  z = s*v,  w = t*u

so that xy - zw maps to the identically-zero (2,2)-form and linear forms on
P^3 correspond to (1,1)-forms on Q by pure coefficient transport.  The
length-2 divisor cut on Q by a line off Q is always handled through ideal
conditions, never by root extraction, so irrational intersections are fully
supported.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

from .errors import (
    LineOnQ,
    NotARuling,
    NotInIdeal,
    PairValidationError,
    PointNotOnQ,
)
from .exact import (
    BidegreeForm,
    BinaryForm,
    LinearFormP3,
    Matrix,
    QuadricForm,
    rat,
)

#: the fixed quadric surface xy - zw
Q_FORM = QuadricForm([0, 1, 0, 0, 0, 0, 0, 0, -1, 0])

#: the fixed chart substitution; every module of the package uses this one
SEGRE_SUBSTITUTION = {"x": "su", "y": "tv", "z": "sv", "w": "tu"}

# the same data as (s-exponent, u-exponent) slots of a (1,1)-form
_SEGRE_SLOTS = ((1, 1), (0, 0), (1, 0), (0, 1))


class LineInP3:
    """A line given by two spanning points of P^3."""

    __slots__ = ("points",)

    def __init__(self, p1: Sequence, p2: Sequence):
        a = tuple(rat(v) for v in p1)
        b = tuple(rat(v) for v in p2)
        if len(a) != 4 or len(b) != 4:
            raise ValueError("spanning points live in P^3")
        if Matrix([list(a), list(b)]).rank() != 2:
            raise ValueError("spanning points must be linearly independent")
        self.points = (a, b)

    def span_matrix(self) -> Matrix:
        return Matrix([list(self.points[0]), list(self.points[1])])

    def canonical_span(self) -> tuple[tuple[Fraction, ...], ...]:
        """A deterministic normalized basis of the ideal of the line.

        Two LineInP3 values describe the same line iff these agree.
        """
        return tuple(sorted(self.span_matrix().kernel_basis()))

    def __eq__(self, other) -> bool:
        return isinstance(other, LineInP3) and self.canonical_span() == other.canonical_span()

    def __hash__(self) -> int:
        return hash(self.canonical_span())

    def point_at(self, alpha, beta) -> tuple[Fraction, ...]:
        a, b = rat(alpha), rat(beta)
        return tuple(a * p + b * q for p, q in zip(*self.points))

    def restrict(self, q: QuadricForm) -> BinaryForm:
        """q on the span parametrization, as a binary quadratic."""
        return q.restrict_to_line(self.points[0], self.points[1])

    def on_quadric(self, q: QuadricForm) -> bool:
        return self.restrict(q).is_zero

    def transform(self, t: Matrix) -> "LineInP3":
        return LineInP3(t.apply(self.points[0]), t.apply(self.points[1]))

    def __repr__(self) -> str:
        pts = ", ".join(
            "(" + ":".join(str(c) for c in p) + ")" for p in self.points
        )
        return f"LineInP3({pts})"


# ---------------------------------------------------------------------------
# Segre conversions
# ---------------------------------------------------------------------------


def segre_linear(form: LinearFormP3) -> BidegreeForm:
    """Transport a linear form on P^3 to a (1,1)-form on Q."""
    grid = [[Fraction(0), Fraction(0)], [Fraction(0), Fraction(0)]]
    for coeff, (i, j) in zip(form.coeffs, _SEGRE_SLOTS):
        grid[i][j] = coeff
    return BidegreeForm(1, 1, grid)


def linear_from_segre(form: BidegreeForm) -> LinearFormP3:
    """Inverse coefficient transport of a (1,1)-form."""
    if form.bidegree != (1, 1):
        raise ValueError("only (1,1)-forms correspond to linear forms on P^3")
    return LinearFormP3([form.coeffs[i][j] for i, j in _SEGRE_SLOTS])


def segre_quadric(q: QuadricForm) -> BidegreeForm:
    """Restrict a quadric on P^3 to Q as a (2,2)-form (substitute the chart).

    Vanishes exactly when q is proportional to xy - zw.
    """
    from .exact import QUADRIC_MONOMIALS

    images = [
        BidegreeForm.monomial(1, 1, i, j) for i, j in _SEGRE_SLOTS
    ]
    total = BidegreeForm.zero(2, 2)
    for (i, j), coeff in zip(QUADRIC_MONOMIALS, q.coeffs):
        if coeff:
            total = total + coeff * (images[i] * images[j])
    return total


def segre_point(st: Sequence, uv: Sequence) -> tuple[Fraction, ...]:
    """The P^3 point of a chart bi-point ([s:t], [u:v])."""
    s, t = (rat(v) for v in st)
    u, v = (rat(w) for w in uv)
    if (s == 0 and t == 0) or (u == 0 and v == 0):
        raise ValueError("chart coordinates must be projective points")
    return (s * u, t * v, s * v, t * u)


def segre_preimage(point: Sequence) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
    """Chart coordinates ([s:t], [u:v]) of a point on Q.

    Uses ([x:w], [x:z]) with fallbacks ([z:y], [w:y]) when the leading
    coordinates both vanish.
    """
    p = tuple(rat(v) for v in point)
    if len(p) != 4 or all(c == 0 for c in p):
        raise ValueError("expected a point of P^3")
    if Q_FORM.evaluate(p) != 0:
        raise PointNotOnQ(f"point {tuple(map(str, p))} is not on xy - zw = 0")
    x, y, z, w = p
    st = (x, w) if (x, w) != (0, 0) else (z, y)
    uv = (x, z) if (x, z) != (0, 0) else (w, y)
    return (st, uv)


# ---------------------------------------------------------------------------
# Pair validation
# ---------------------------------------------------------------------------


class PairFault(Enum):
    SINGULAR_QUADRIC = "SingularQuadric"
    EQUALS_Q = "EqualsQ"
    LINE_NOT_ON_QUADRIC = "LineNotOnQuadric"
    LINE_ON_Q = "LineOnQ"

    def __str__(self) -> str:
        return self.value


def validate_pair(q: QuadricForm, line: LineInP3) -> Optional[PairFault]:
    """First failing condition for a (quadric, ruling line) pair, or None.

    Checks, in order: the quadric is smooth, differs from Q, contains the
    line, and the line is not inside Q itself.
    """
    if q.gram_rank() != 4:
        return PairFault.SINGULAR_QUADRIC
    if q.proportional_to(Q_FORM):
        return PairFault.EQUALS_Q
    if not line.on_quadric(q):
        return PairFault.LINE_NOT_ON_QUADRIC
    if line.on_quadric(Q_FORM):
        return PairFault.LINE_ON_Q
    return None


# ---------------------------------------------------------------------------
# Divisor ideal and mapping cone
# ---------------------------------------------------------------------------


def divisor_ideal_forms(line: LineInP3) -> tuple[LinearFormP3, LinearFormP3]:
    """Echelon-normalized basis of the linear forms through the divisor.

    The scheme cut on the line by Q has length 2 and spans the line, so the
    (1,1)-forms through it are exactly the linear forms vanishing on the
    line: the kernel of the evaluation at the two spanning points.
    """
    if line.on_quadric(Q_FORM):
        raise LineOnQ("the line lies on Q; the divisor is not of length 2")
    basis = line.span_matrix().kernel_basis()
    assert len(basis) == 2
    return LinearFormP3(basis[0]), LinearFormP3(basis[1])


def decompose_on_quadric(
    b: BidegreeForm, c1: BidegreeForm, c2: BidegreeForm
) -> tuple[BidegreeForm, BidegreeForm]:
    """Solve a1*c1 + a2*c2 = b for (1,1)-forms a1, a2.

    The 9 coefficient equations in 8 unknowns are solved exactly; free
    variables are set to zero, so the output is canonical.  The remaining
    ambiguity is the syzygy shift (a1, a2) -> (a1 - s*c2, a2 + s*c1).
    """
    if b.bidegree != (2, 2) or c1.bidegree != (1, 1) or c2.bidegree != (1, 1):
        raise ValueError("expected a (2,2)-form and two (1,1)-forms")
    unknown_monomials = [(i, j) for i in (1, 0) for j in (1, 0)]
    columns = []
    for c in (c1, c2):
        for i, j in unknown_monomials:
            product = c * BidegreeForm.monomial(1, 1, i, j)
            columns.append(product.serialize_order())
    system = Matrix([list(row) for row in zip(*columns)])
    try:
        solution, _ = system.solve(b.serialize_order())
    except Exception as exc:
        raise NotInIdeal(
            "the (2,2)-form is not in the ideal of the two (1,1)-forms"
        ) from exc
    def build(values):
        grid = [[Fraction(0)] * 2 for _ in range(2)]
        for (i, j), v in zip(unknown_monomials, values):
            grid[i][j] = v
        return BidegreeForm(1, 1, grid)

    return build(solution[:4]), build(solution[4:])


# ---------------------------------------------------------------------------
# Rulings and resolution data
# ---------------------------------------------------------------------------


class RulingFamily(Enum):
    #: lines with constant [s:t], swept by varying [u:v]
    FIRST_FACTOR = "FirstFactor"
    #: lines with constant [u:v]
    SECOND_FACTOR = "SecondFactor"

    def __str__(self) -> str:
        return self.value


def ruling_family_in_q(line: LineInP3) -> RulingFamily:
    """Which ruling family of Q a contained line belongs to."""
    if not line.on_quadric(Q_FORM):
        raise NotARuling("the line is not contained in Q")
    (st1, uv1) = segre_preimage(line.points[0])
    (st2, uv2) = segre_preimage(line.points[1])
    same_st = st1[0] * st2[1] == st1[1] * st2[0]
    same_uv = uv1[0] * uv2[1] == uv1[1] * uv2[0]
    assert same_st != same_uv, "spanning points of a ruling share exactly one chart"
    return RulingFamily.FIRST_FACTOR if same_st else RulingFamily.SECOND_FACTOR


class ResolutionData:
    """A free-resolution representative of a sheaf supported on Q.

    kind 1 carries a 2x2 matrix of (1,1)-forms with det not identically
    zero; kinds 2 and 3 carry the nonzero (2,2)-form of the supporting
    curve, the matrix having collapsed to multiplication by it.
    """

    __slots__ = ("kind", "matrix", "b")

    def __init__(self, kind: int, matrix=None, b: Optional[BidegreeForm] = None):
        self.kind = kind
        if kind == 1:
            rows = tuple(tuple(row) for row in matrix)
            if len(rows) != 2 or any(len(r) != 2 for r in rows):
                raise ValueError("kind-1 data is a 2x2 matrix of (1,1)-forms")
            if any(e.bidegree != (1, 1) for row in rows for e in row):
                raise ValueError("kind-1 entries must have bidegree (1,1)")
            self.matrix = rows
            self.b = None
            det = self.det()
            if det.is_zero:
                raise ValueError("kind-1 data needs det not identically zero")
        elif kind in (2, 3):
            if b is None or b.bidegree != (2, 2) or b.is_zero:
                raise ValueError("kind-2/3 data carries a nonzero (2,2)-form")
            self.matrix = None
            self.b = b
        else:
            raise ValueError("resolution kind must be 1, 2 or 3")

    def det(self) -> BidegreeForm:
        if self.kind != 1:
            raise ValueError("only kind-1 data has a matrix determinant")
        m = self.matrix
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ResolutionData)
            and self.kind == other.kind
            and self.matrix == other.matrix
            and self.b == other.b
        )

    def __repr__(self) -> str:
        if self.kind == 1:
            return f"ResolutionData(kind=1, matrix={self.matrix!r})"
        return f"ResolutionData(kind={self.kind}, b={self.b!r})"


def resolution_from_pair(q: QuadricForm, line: LineInP3) -> ResolutionData:
    """The resolution representative of the pair (quadric, line on it).

    For a line off Q this is the mapping-cone matrix
    ``[[-c2, a1], [c1, a2]]`` built from the divisor ideal (c1, c2) and the
    decomposition a1*c1 + a2*c2 = b of the curve form b; its determinant is
    exactly -b.  A ruling of Q routes to kind 2 or 3 according to the
    family, keeping only b.
    """
    fault = validate_pair(q, line)
    if fault is PairFault.LINE_ON_Q:
        b = segre_quadric(q)
        family = ruling_family_in_q(line)
        kind = 2 if family is RulingFamily.SECOND_FACTOR else 3
        return ResolutionData(kind, b=b)
    if fault is not None:
        raise PairValidationError(fault)
    c1_lin, c2_lin = divisor_ideal_forms(line)
    c1, c2 = segre_linear(c1_lin), segre_linear(c2_lin)
    b = segre_quadric(q)
    a1, a2 = decompose_on_quadric(b, c1, c2)
    data = ResolutionData(1, matrix=[[-c2, a1], [c1, a2]])
    assert data.det() == -b, "mapping-cone contract det N = -b violated"
    return data
