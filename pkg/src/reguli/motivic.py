"""Virtual Poincare polynomial calculus.

The polynomial of a variety records the weight-graded compactly-supported
Betti numbers in a single variable p; it is additive over locally closed
decompositions and multiplicative over Zariski-locally-trivial fibrations.
Everything here is exact integer arithmetic.

Two of the textbook identities need care with quotient twists:

* Hilb^2 of a surface S is Sym^2(S) with the diagonal blown up, giving
  sym2(P) + p*P.  The naive "(P^2 - P)/2 + P*P(P^1)" shorthand is not even
  integral.
* The pair stratum fibered over Sym^2(P^3) minus the diagonal must be
  counted through its etale double cover (the two glued projective planes
  are swapped by the deck action):

      [P^3 x P^3 - diag] * (P(P^2) - 1) + [Sym^2 P^3 - diag].

  The untwisted shorthand (2P(P^2) - 1) * [Sym^2 - diag] reverses the
  final coefficient list and contradicts the known answer.
"""

from __future__ import annotations

from typing import Iterable

from .errors import NonDivisible, NonIntegralResult


class PoincarePolynomial:
    """An integer polynomial in p, coefficients dense ascending."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        values = [int(c) for c in coeffs]
        while len(values) > 1 and values[-1] == 0:
            values.pop()
        if not values:
            values = [0]
        self.coeffs = tuple(values)

    @classmethod
    def zero(cls) -> "PoincarePolynomial":
        return cls([0])

    @classmethod
    def one(cls) -> "PoincarePolynomial":
        return cls([1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    def __add__(self, other: "PoincarePolynomial") -> "PoincarePolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        out = [0] * n
        for i, c in enumerate(self.coeffs):
            out[i] += c
        for i, c in enumerate(other.coeffs):
            out[i] += c
        return PoincarePolynomial(out)

    def __sub__(self, other: "PoincarePolynomial") -> "PoincarePolynomial":
        return self + PoincarePolynomial([-c for c in other.coeffs])

    def __neg__(self) -> "PoincarePolynomial":
        return PoincarePolynomial([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, PoincarePolynomial):
            out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        out[i + j] += a * b
            return PoincarePolynomial(out)
        return PoincarePolynomial([c * int(other) for c in self.coeffs])

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, PoincarePolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def substitute_square(self) -> "PoincarePolynomial":
        """The polynomial P(p^2)."""
        out = [0] * (2 * len(self.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            out[2 * i] = c
        return PoincarePolynomial(out)

    def halved(self) -> "PoincarePolynomial":
        if any(c % 2 for c in self.coeffs):
            raise NonIntegralResult(f"half of {self.coeffs} is not integral")
        return PoincarePolynomial([c // 2 for c in self.coeffs])

    def evaluate(self, value: int) -> int:
        total = 0
        for c in reversed(self.coeffs):
            total = total * value + c
        return total

    def divide_exact(self, divisor: "PoincarePolynomial") -> "PoincarePolynomial":
        """Exact polynomial quotient; NonDivisible if a remainder is left."""
        if divisor.is_zero:
            raise NonDivisible("division by the zero polynomial")
        rem = list(self.coeffs)
        dcoeffs = divisor.coeffs
        dd = len(dcoeffs) - 1
        if len(rem) - 1 < dd:
            if self.is_zero:
                return PoincarePolynomial.zero()
            raise NonDivisible("degree of dividend is too small")
        q = [0] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            lead = rem[k]
            if lead % dcoeffs[-1]:
                raise NonDivisible("leading coefficient does not divide")
            c = lead // dcoeffs[-1]
            q[k - dd] = c
            for j, d in enumerate(dcoeffs):
                rem[k - dd + j] -= c * d
        if any(rem):
            raise NonDivisible("polynomial division left a remainder")
        return PoincarePolynomial(q)

    def __repr__(self) -> str:
        return f"PoincarePolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                body = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else str(abs(c))
                body = f"{mag}p" + (f"^{i}" if i > 1 else "")
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def proj_space(n: int) -> PoincarePolynomial:
    """1 + p + ... + p^n."""
    if n < 0:
        raise ValueError("projective space dimension must be non-negative")
    return PoincarePolynomial([1] * (n + 1))


def sym2(poly: PoincarePolynomial) -> PoincarePolynomial:
    """The symmetric square (P(p)^2 + P(p^2)) / 2 for even-cohomology classes."""
    return (poly * poly + poly.substitute_square()).halved()


def hilb2_surface(poly: PoincarePolynomial) -> PoincarePolynomial:
    """Hilbert square of a smooth surface with vanishing odd cohomology.

    Sym^2 with the diagonal surface replaced by a P^1-bundle over it:
    sym2(P) + p*P.
    """
    return sym2(poly) + PoincarePolynomial([0, 1]) * poly


def blowup(
    p_total: PoincarePolynomial, p_center: PoincarePolynomial, codim: int
) -> PoincarePolynomial:
    """Blow up a smooth center of the given codimension."""
    if codim < 1:
        raise ValueError("codimension must be at least 1")
    return p_total + p_center * (proj_space(codim - 1) - PoincarePolynomial.one())


def euler(poly: PoincarePolynomial) -> int:
    """The virtual Euler number: evaluation at 1."""
    return poly.evaluate(1)


def pipeline_m2() -> dict[str, PoincarePolynomial]:
    """The full chain from the pair moduli to the double cover, in order.

    Route 1 builds the large pair space from Hilb^2(Q) times P^6 and the
    single wall crossing; route 2 peels the fibration over the stable locus
    and the boundary strata, and the stable part is recovered by exact
    division.  The dict preserves computation order.
    """
    p1 = proj_space(1)
    p2 = proj_space(2)
    p3 = proj_space(3)
    q_surface = p1 * p1

    m2_infinity = hilb2_surface(q_surface) * proj_space(6)
    wall = 2 * ((p1 - p2) * proj_space(5) * p1)
    m2_zero_plus = m2_infinity + wall

    # boundary strata of the forgetful fibration, counted with the
    # etale-twisted bookkeeping (see the module docstring)
    sym2_p3 = sym2(p3)
    off_diagonal_pairs = p3 * p3 - p3
    middle = off_diagonal_pairs * (p2 - PoincarePolynomial.one()) + (sym2_p3 - p3)
    over_diagonal = p2 * p3

    m2_stable = (m2_zero_plus - middle - over_diagonal).divide_exact(p1)
    m2 = m2_stable + sym2_p3
    r = m2 - 2 * (proj_space(8) - PoincarePolynomial.one())

    return {
        "M2_infinity": m2_infinity,
        "M2_zero_plus": m2_zero_plus,
        "M2_stable": m2_stable,
        "M2": m2,
        "R": r,
    }


def pipeline_euler_numbers() -> dict[str, int]:
    return {name: euler(poly) for name, poly in pipeline_m2().items()}
