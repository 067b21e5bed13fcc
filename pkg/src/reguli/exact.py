"""Exact rational arithmetic: linear/quadratic forms on P^3, binary and
bidegree forms, and fraction-free linear algebra over Q.

Every decision procedure in this package (ranks, gcd degrees, solvability)
is insensitive to field extension, so stratum membership over C is decided
correctly from rational input.  Nothing here ever touches floating point.

Serialization conventions (used verbatim by :mod:`reguli.serde`):

* rationals render as ``"p/q"``, with ``/q`` omitted when the denominator is 1;
* linear forms are coefficient 4-arrays in the order ``[x, y, z, w]``;
* quadrics on P^3 are 10-arrays in the order
  ``[x^2, xy, xz, xw, y^2, yz, yw, z^2, zw, w^2]``;
* binary forms list the highest s-power first;
* bidegree-(a,b) forms list coefficients with the s-exponent descending
  (outer) and the u-exponent descending (inner), so a (1,1)-form reads
  ``[su, sv, tu, tv]``.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd as _int_gcd
from math import lcm as _int_lcm
from typing import Iterable, Sequence

from .errors import DegreeMismatch, InconsistentSystem, SingularMatrix

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)

P3_VARIABLES = ("x", "y", "z", "w")


def rat(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


def _vec(values, length: int, what: str) -> tuple[Fraction, ...]:
    out = tuple(rat(v) for v in values)
    if len(out) != length:
        raise ValueError(f"{what} needs {length} coefficients, got {len(out)}")
    return out


# ---------------------------------------------------------------------------
# Linear forms on P^3
# ---------------------------------------------------------------------------


class LinearFormP3:
    """A linear form a*x + b*y + c*z + d*w; the zero form is allowed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        self.coeffs = _vec(coeffs, 4, "a linear form")

    @classmethod
    def zero(cls) -> "LinearFormP3":
        return cls((0, 0, 0, 0))

    @classmethod
    def variable(cls, name: str) -> "LinearFormP3":
        coeffs = [0, 0, 0, 0]
        coeffs[P3_VARIABLES.index(name)] = 1
        return cls(coeffs)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other: "LinearFormP3") -> "LinearFormP3":
        return LinearFormP3(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: "LinearFormP3") -> "LinearFormP3":
        return LinearFormP3(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self) -> "LinearFormP3":
        return LinearFormP3(-a for a in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, LinearFormP3):
            return QuadricForm.from_product(self, other)
        return LinearFormP3(a * rat(other) for a in self.coeffs)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, LinearFormP3) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def evaluate(self, point: Sequence) -> Fraction:
        pt = _vec(point, 4, "a point of P^3")
        return sum((a * v for a, v in zip(self.coeffs, pt)), _ZERO)

    def proportional_to(self, other: "LinearFormP3") -> bool:
        return _proportional(self.coeffs, other.coeffs)

    def __repr__(self) -> str:
        return f"LinearFormP3({format_linear(self)!r})"


def _proportional(a: Sequence[Fraction], b: Sequence[Fraction]) -> bool:
    """Whether two coefficient vectors span the same line (zero counts)."""
    for i, j in itertools.combinations(range(len(a)), 2):
        if a[i] * b[j] != a[j] * b[i]:
            return False
    return True


def format_linear(form: LinearFormP3) -> str:
    return _format_terms(zip(form.coeffs, P3_VARIABLES))


def _format_terms(terms) -> str:
    pieces = []
    for coeff, mono in terms:
        if coeff == 0:
            continue
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}{mono}"
        pieces.append((sign, body))
    if not pieces:
        return "0"
    first_sign, first_body = pieces[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# Quadratic forms on P^3
# ---------------------------------------------------------------------------

# index pairs (i <= j) matching the documented coefficient order
QUADRIC_MONOMIALS = (
    (0, 0), (0, 1), (0, 2), (0, 3),
    (1, 1), (1, 2), (1, 3),
    (2, 2), (2, 3),
    (3, 3),
)
_QUADRIC_INDEX = {pair: k for k, pair in enumerate(QUADRIC_MONOMIALS)}


class QuadricForm:
    """A quadratic form on P^3, stored as its 10 ordered coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        self.coeffs = _vec(coeffs, 10, "a quadric")

    @classmethod
    def zero(cls) -> "QuadricForm":
        return cls((0,) * 10)

    @classmethod
    def from_product(cls, f: LinearFormP3, g: LinearFormP3) -> "QuadricForm":
        out = [_ZERO] * 10
        for i in range(4):
            for j in range(4):
                c = f.coeffs[i] * g.coeffs[j]
                if c:
                    out[_QUADRIC_INDEX[(min(i, j), max(i, j))]] += c
        return cls(out)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other: "QuadricForm") -> "QuadricForm":
        return QuadricForm(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: "QuadricForm") -> "QuadricForm":
        return QuadricForm(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self) -> "QuadricForm":
        return QuadricForm(-a for a in self.coeffs)

    def __mul__(self, other) -> "QuadricForm":
        return QuadricForm(a * rat(other) for a in self.coeffs)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, QuadricForm) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def evaluate(self, point: Sequence) -> Fraction:
        pt = _vec(point, 4, "a point of P^3")
        total = _ZERO
        for (i, j), c in zip(QUADRIC_MONOMIALS, self.coeffs):
            if c:
                total += c * pt[i] * pt[j]
        return total

    def polar(self, u: Sequence, v: Sequence) -> Fraction:
        """The symmetric bilinear form B with B(v, v) = q(v)."""
        s = [rat(a) + rat(b) for a, b in zip(u, v)]
        return (self.evaluate(s) - self.evaluate(u) - self.evaluate(v)) / 2

    def gram(self) -> "Matrix":
        g = [[_ZERO] * 4 for _ in range(4)]
        for (i, j), c in zip(QUADRIC_MONOMIALS, self.coeffs):
            if i == j:
                g[i][i] = c
            else:
                g[i][j] = g[j][i] = c / 2
        return Matrix(g)

    def gram_rank(self) -> int:
        return self.gram().rank()

    def substitute(self, m: "Matrix") -> "QuadricForm":
        """The form v -> q(M v); Gram matrix transforms as M^T G M."""
        g = m.transpose() @ self.gram() @ m
        out = []
        for i, j in QUADRIC_MONOMIALS:
            out.append(g[i][j] if i == j else 2 * g[i][j])
        return QuadricForm(out)

    def proportional_to(self, other: "QuadricForm") -> bool:
        return _proportional(self.coeffs, other.coeffs)

    def restrict_to_line(self, v1: Sequence, v2: Sequence) -> "BinaryForm":
        """q on the span of v1, v2 as a binary quadratic in the span parameters."""
        return BinaryForm(
            [self.evaluate(v1), 2 * self.polar(v1, v2), self.evaluate(v2)]
        )

    def __repr__(self) -> str:
        return f"QuadricForm({format_quadric(self)!r})"


QUADRIC_MONOMIAL_NAMES = (
    "x^2", "xy", "xz", "xw", "y^2", "yz", "yw", "z^2", "zw", "w^2"
)


def format_quadric(q: QuadricForm) -> str:
    return _format_terms(zip(q.coeffs, QUADRIC_MONOMIAL_NAMES))


def quadric_gram_rank(q: QuadricForm) -> int:
    """Rank of the symmetric Gram matrix; 4 means a smooth quadric surface."""
    return q.gram_rank()


# ---------------------------------------------------------------------------
# Binary forms
# ---------------------------------------------------------------------------


class BinaryForm:
    """A homogeneous form in (s, t), coefficients highest s-power first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        out = tuple(rat(v) for v in coeffs)
        if not out:
            raise ValueError("a binary form needs at least one coefficient")
        self.coeffs = out

    @classmethod
    def zero(cls, degree: int = 0) -> "BinaryForm":
        return cls((0,) * (degree + 1))

    @classmethod
    def constant(cls, value) -> "BinaryForm":
        return cls((value,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    @property
    def is_nonzero_constant(self) -> bool:
        return self.degree == 0 and self.coeffs[0] != 0

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        if self.degree != other.degree:
            raise DegreeMismatch(
                f"cannot add binary forms of degrees {self.degree} and {other.degree}"
            )
        return BinaryForm(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: "BinaryForm") -> "BinaryForm":
        return self + (-other)

    def __neg__(self) -> "BinaryForm":
        return BinaryForm(-a for a in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, BinaryForm):
            out = [_ZERO] * (self.degree + other.degree + 1)
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        if b:
                            out[i + j] += a * b
            return BinaryForm(out)
        return BinaryForm(a * rat(other) for a in self.coeffs)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, BinaryForm) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def evaluate(self, s, t) -> Fraction:
        s, t = rat(s), rat(t)
        d = self.degree
        return sum(
            (c * s ** (d - i) * t**i for i, c in enumerate(self.coeffs) if c),
            _ZERO,
        )

    def compose_linear(self, a, b, c, d) -> "BinaryForm":
        """The form F(a*s + b*t, c*s + d*t)."""
        first = BinaryForm([a, b])
        second = BinaryForm([c, d])
        deg = self.degree
        total = BinaryForm.zero(deg)
        for i, coeff in enumerate(self.coeffs):
            if not coeff:
                continue
            term = BinaryForm.constant(coeff)
            for _ in range(deg - i):
                term = term * first
            for _ in range(i):
                term = term * second
            total = total + term
        return total

    def normalized(self) -> "BinaryForm":
        """Scale so the first nonzero stored coefficient equals 1."""
        for c in self.coeffs:
            if c != 0:
                return BinaryForm(a / c for a in self.coeffs)
        return self

    def proportional_to(self, other: "BinaryForm") -> bool:
        return self.degree == other.degree and _proportional(
            self.coeffs, other.coeffs
        )

    def __repr__(self) -> str:
        return f"BinaryForm({format_binary(self)!r})"


def format_binary(f: BinaryForm, vars: tuple[str, str] = ("s", "t")) -> str:
    d = f.degree
    names = []
    for i in range(d + 1):
        si, ti = d - i, i
        part = ""
        if si:
            part += vars[0] + (f"^{si}" if si > 1 else "")
        if ti:
            part += vars[1] + (f"^{ti}" if ti > 1 else "")
        names.append(part)
    return _format_terms(zip(f.coeffs, names))


def _dehomogenize(f: BinaryForm) -> list[Fraction]:
    """Ascending coefficients of f(1, u); index = t-exponent."""
    return list(f.coeffs)


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [_ZERO] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        k = len(a) - len(b)
        c = a[-1] / b[-1]
        q[k] = c
        for i, bc in enumerate(b):
            a[k + i] -= c * bc
        _poly_trim(a)
    return q, a


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def gcd_binary_forms(forms: Sequence[BinaryForm]) -> BinaryForm:
    """Gcd of binary forms, with the first stored nonzero coefficient scaled to 1.

    The gcd degree is what matters downstream: it counts common projective
    roots over the algebraic closure, and is insensitive to field extension.
    Returns the zero form exactly when every input vanishes.
    """
    nonzero = [f for f in forms if not f.is_zero]
    if not nonzero:
        return BinaryForm.zero()
    # split off the pure s-power: it is the count of trailing zero coefficients
    s_val = None
    g: list[Fraction] = []
    for f in nonzero:
        coeffs = _dehomogenize(f)
        trailing = 0
        for c in reversed(coeffs):
            if c != 0:
                break
            trailing += 1
        s_val = trailing if s_val is None else min(s_val, trailing)
        g = _poly_gcd(g, coeffs)
    total_degree = (len(g) - 1) + (s_val or 0)
    stored = list(g) + [_ZERO] * (total_degree + 1 - len(g))
    return BinaryForm(stored).normalized()


def divide_binary_forms(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Exact quotient f / g of binary forms; raises on inexact division."""
    if g.is_zero:
        raise ZeroDivisionError("division by the zero form")
    if f.is_zero:
        return BinaryForm.zero(max(f.degree - g.degree, 0))
    fa, ga = _dehomogenize(f), _dehomogenize(g)
    f_trail = len(fa) - len(_poly_trim(list(fa)))
    g_trail = len(ga) - len(_poly_trim(list(ga)))
    if g_trail > f_trail:
        raise ValueError("inexact division: s-power of divisor too large")
    q, r = _poly_divmod(fa, ga)
    if _poly_trim(list(r)):
        raise ValueError("inexact division of binary forms")
    deg = f.degree - g.degree
    stored = list(q) + [_ZERO] * (deg + 1 - len(q))
    return BinaryForm(stored[: deg + 1])


# ---------------------------------------------------------------------------
# Bidegree forms on Q = P^1 x P^1
# ---------------------------------------------------------------------------


class BidegreeForm:
    """A bihomogeneous form of bidegree (a, b) in (s,t) x (u,v).

    ``coeffs[i][j]`` multiplies ``s^i t^(a-i) u^j v^(b-j)``.
    """

    __slots__ = ("sdeg", "udeg", "coeffs")

    def __init__(self, sdeg: int, udeg: int, coeffs=None):
        if sdeg < 0 or udeg < 0:
            raise ValueError("bidegree components must be non-negative")
        self.sdeg = sdeg
        self.udeg = udeg
        if coeffs is None:
            rows = tuple(tuple([_ZERO] * (udeg + 1)) for _ in range(sdeg + 1))
        else:
            rows = tuple(_vec(row, udeg + 1, "a bidegree row") for row in coeffs)
            if len(rows) != sdeg + 1:
                raise ValueError("coefficient grid does not match the bidegree")
        self.coeffs = rows

    @classmethod
    def zero(cls, sdeg: int, udeg: int) -> "BidegreeForm":
        return cls(sdeg, udeg)

    @classmethod
    def monomial(cls, sdeg, udeg, i, j, value=1) -> "BidegreeForm":
        grid = [[_ZERO] * (udeg + 1) for _ in range(sdeg + 1)]
        grid[i][j] = rat(value)
        return cls(sdeg, udeg, grid)

    @property
    def bidegree(self) -> tuple[int, int]:
        return (self.sdeg, self.udeg)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for row in self.coeffs for c in row)

    def __add__(self, other: "BidegreeForm") -> "BidegreeForm":
        if self.bidegree != other.bidegree:
            raise DegreeMismatch(
                f"cannot add bidegrees {self.bidegree} and {other.bidegree}"
            )
        grid = [
            [a + b for a, b in zip(r1, r2)]
            for r1, r2 in zip(self.coeffs, other.coeffs)
        ]
        return BidegreeForm(self.sdeg, self.udeg, grid)

    def __sub__(self, other: "BidegreeForm") -> "BidegreeForm":
        return self + (-other)

    def __neg__(self) -> "BidegreeForm":
        return BidegreeForm(
            self.sdeg, self.udeg, [[-c for c in row] for row in self.coeffs]
        )

    def __mul__(self, other):
        if isinstance(other, BidegreeForm):
            a, b = self.sdeg + other.sdeg, self.udeg + other.udeg
            grid = [[_ZERO] * (b + 1) for _ in range(a + 1)]
            for i, row in enumerate(self.coeffs):
                for j, c in enumerate(row):
                    if not c:
                        continue
                    for k, orow in enumerate(other.coeffs):
                        for l, d in enumerate(orow):
                            if d:
                                grid[i + k][j + l] += c * d
            return BidegreeForm(a, b, grid)
        scalar = rat(other)
        return BidegreeForm(
            self.sdeg, self.udeg, [[c * scalar for c in row] for row in self.coeffs]
        )

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BidegreeForm)
            and self.bidegree == other.bidegree
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.bidegree, self.coeffs))

    def evaluate(self, st: Sequence, uv: Sequence) -> Fraction:
        s, t = (rat(v) for v in st)
        u, v = (rat(w) for w in uv)
        total = _ZERO
        for i, row in enumerate(self.coeffs):
            for j, c in enumerate(row):
                if c:
                    total += (
                        c
                        * s**i
                        * t ** (self.sdeg - i)
                        * u**j
                        * v ** (self.udeg - j)
                    )
        return total

    def serialize_order(self) -> list[Fraction]:
        """Coefficients with s-exponent descending, then u-exponent descending."""
        out = []
        for i in range(self.sdeg, -1, -1):
            for j in range(self.udeg, -1, -1):
                out.append(self.coeffs[i][j])
        return out

    def proportional_to(self, other: "BidegreeForm") -> bool:
        if self.bidegree != other.bidegree:
            return False
        return _proportional(
            [c for row in self.coeffs for c in row],
            [c for row in other.coeffs for c in row],
        )

    def __repr__(self) -> str:
        return f"BidegreeForm{self.bidegree}({format_bidegree(self)!r})"


def format_bidegree(f: BidegreeForm) -> str:
    terms = []
    for i in range(f.sdeg, -1, -1):
        for j in range(f.udeg, -1, -1):
            mono = ""
            for name, e in (("s", i), ("t", f.sdeg - i), ("u", j), ("v", f.udeg - j)):
                if e:
                    mono += name + (f"^{e}" if e > 1 else "")
            terms.append((f.coeffs[i][j], mono))
    return _format_terms(terms)


# ---------------------------------------------------------------------------
# Exact matrices over Q
# ---------------------------------------------------------------------------


class Matrix:
    """A dense rational matrix with fraction-free (Bareiss) elimination."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows_data: Sequence[Sequence]):
        data = [list(map(rat, row)) for row in rows_data]
        if not data or not data[0]:
            raise ValueError("matrices must have positive dimensions")
        cols = len(data[0])
        if any(len(row) != cols for row in data):
            raise ValueError("ragged rows in matrix")
        self.rows = len(data)
        self.cols = cols
        self.data = data

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, i: int) -> list[Fraction]:
        return self.data[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.data == other.data

    def __hash__(self):
        return hash(tuple(tuple(row) for row in self.data))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("matrix dimensions do not match for product")
        out = [
            [
                sum((self.data[i][k] * other.data[k][j] for k in range(self.cols)),
                    _ZERO)
                for j in range(other.cols)
            ]
            for i in range(self.rows)
        ]
        return Matrix(out)

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)]
        )

    def scale(self, c) -> "Matrix":
        c = rat(c)
        return Matrix([[a * c for a in row] for row in self.data])

    def transpose(self) -> "Matrix":
        return Matrix([list(col) for col in zip(*self.data)])

    def apply(self, vector: Sequence) -> tuple[Fraction, ...]:
        vec = [rat(v) for v in vector]
        if len(vec) != self.cols:
            raise ValueError("vector length does not match column count")
        return tuple(
            sum((row[j] * vec[j] for j in range(self.cols)), _ZERO)
            for row in self.data
        )

    # -- elimination core ---------------------------------------------------

    def _integer_rows(self) -> list[list[int]]:
        out = []
        for row in self.data:
            scale = _int_lcm(*(f.denominator for f in row)) if row else 1
            out.append([int(f * scale) for f in row])
        return out

    @staticmethod
    def _bareiss(rows: list[list[int]]) -> tuple[list[list[int]], list[int], int]:
        """Fraction-free row echelon; returns (echelon, pivot columns, swap sign)."""
        n_rows = len(rows)
        n_cols = len(rows[0])
        pivots: list[int] = []
        sign = 1
        prev = 1
        r = 0
        for c in range(n_cols):
            if r == n_rows:
                break
            pr = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
            if pr is None:
                continue
            if pr != r:
                rows[r], rows[pr] = rows[pr], rows[r]
                sign = -sign
            piv = rows[r][c]
            for i in range(r + 1, n_rows):
                head = rows[i][c]
                for j in range(c + 1, n_cols):
                    rows[i][j] = (rows[i][j] * piv - head * rows[r][j]) // prev
                rows[i][c] = 0
            prev = piv
            pivots.append(c)
            r += 1
        return rows, pivots, sign

    def rank(self) -> int:
        _, pivots, _ = self._bareiss(self._integer_rows())
        return len(pivots)

    def det(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        scales = []
        rows = []
        for row in self.data:
            scale = _int_lcm(*(f.denominator for f in row))
            scales.append(scale)
            rows.append([int(f * scale) for f in row])
        ech, pivots, sign = self._bareiss(rows)
        if len(pivots) < self.rows:
            return _ZERO
        det_scaled = sign * ech[-1][pivots[-1]]
        denom = 1
        for s in scales:
            denom *= s
        return Fraction(det_scaled, denom)

    @staticmethod
    def _normalize_vector(vec: list[Fraction]) -> tuple[Fraction, ...]:
        """Clear denominators, divide by content, make the first nonzero positive."""
        denom = _int_lcm(*(f.denominator for f in vec))
        ints = [int(f * denom) for f in vec]
        content = 0
        for v in ints:
            content = _int_gcd(content, abs(v))
        if content > 1:
            ints = [v // content for v in ints]
        lead = next((v for v in ints if v != 0), 0)
        if lead < 0:
            ints = [-v for v in ints]
        return tuple(Fraction(v) for v in ints)

    def kernel_basis(self) -> list[tuple[Fraction, ...]]:
        """Echelon-normalized integer kernel vectors, one per free column."""
        ech, pivots, _ = self._bareiss(self._integer_rows())
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for f in free:
            vec = [_ZERO] * self.cols
            vec[f] = _ONE
            for r in range(len(pivots) - 1, -1, -1):
                c = pivots[r]
                s = sum(
                    (Fraction(ech[r][j]) * vec[j] for j in range(c + 1, self.cols)),
                    _ZERO,
                )
                vec[c] = -s / ech[r][c]
            basis.append(self._normalize_vector(vec))
        return basis

    def solve(self, rhs: Sequence):
        """One exact solution of A x = rhs plus the kernel basis.

        Free variables of the echelon solve are set to zero, which makes the
        particular solution canonical.  Raises InconsistentSystem when no
        solution exists.
        """
        vec = [rat(v) for v in rhs]
        if len(vec) != self.rows:
            raise ValueError("right-hand side length does not match row count")
        aug_rows = []
        for row, b in zip(self.data, vec):
            full = list(row) + [b]
            scale = _int_lcm(*(f.denominator for f in full))
            aug_rows.append([int(f * scale) for f in full])
        ech, pivots, _ = self._bareiss(aug_rows)
        if pivots and pivots[-1] == self.cols:
            raise InconsistentSystem("linear system has no solution")
        sol = [_ZERO] * self.cols
        for r in range(len(pivots) - 1, -1, -1):
            c = pivots[r]
            s = sum(
                (Fraction(ech[r][j]) * sol[j] for j in range(c + 1, self.cols)),
                _ZERO,
            )
            sol[c] = (Fraction(ech[r][self.cols]) - s) / ech[r][c]
        return tuple(sol), self.kernel_basis()

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        if self.det() == 0:
            raise SingularMatrix("matrix is singular")
        cols = []
        for j in range(self.rows):
            e = [1 if i == j else 0 for i in range(self.rows)]
            sol, _ = self.solve(e)
            cols.append(sol)
        return Matrix(cols).transpose()

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(str(c) for c in row) for row in self.data
        )
        return f"Matrix[{self.rows}x{self.cols}]({body})"
