"""JSON encoding/decoding of the package's types, plus a small symbolic
parser so the CLI accepts forms like ``[[x,z],[w,y]]`` or ``xy - 2zw``.

Monomial orders are the documented ones: linear forms ``[x,y,z,w]``;
quadrics ``[x^2,xy,xz,xw,y^2,yz,yw,z^2,zw,w^2]``; binary forms highest
s-power first; bidegree forms with s- then u-exponent descending (a
(1,1)-form reads ``[su, sv, tu, tv]``).
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .errors import InputFormatError
from .exact import (
    BidegreeForm,
    BinaryForm,
    LinearFormP3,
    Matrix,
    QuadricForm,
    rat,
)
from .grconic import ConicInGrassmannian
from .kronecker import GroupElement, KroneckerModule
from .quadgeom import LineInP3, ResolutionData

# ---------------------------------------------------------------------------
# rationals
# ---------------------------------------------------------------------------


def encode_rational(value: Fraction) -> str | int:
    if value.denominator == 1:
        return int(value)
    return str(value)


def decode_rational(value) -> Fraction:
    if isinstance(value, bool):
        raise InputFormatError("booleans are not rational numbers")
    if isinstance(value, (int, str)):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputFormatError(f"bad rational {value!r}") from exc
    if isinstance(value, float):
        raise InputFormatError(
            f"floating point {value!r} rejected; use an integer or 'p/q' string"
        )
    raise InputFormatError(f"bad rational {value!r}")


def _decode_vector(values, length: int, what: str) -> list[Fraction]:
    if not isinstance(values, (list, tuple)) or len(values) != length:
        raise InputFormatError(f"{what} must be a {length}-element array")
    return [decode_rational(v) for v in values]


# ---------------------------------------------------------------------------
# symbolic linear forms and quadrics
# ---------------------------------------------------------------------------

_TERM_RE = re.compile(
    r"\s*([+-]?)\s*"
    r"((?:\d+(?:/\d+)?)?)\s*\*?\s*"
    r"((?:[xyzw](?:\^?2)?\s*\*?\s*)*)",
)

_VAR_RE = re.compile(r"([xyzw])(\^?2)?")


def _parse_terms(text: str):
    """Yield (coefficient, variable-exponent dict) for each symbolic term."""
    pos = 0
    text = text.strip()
    if not text:
        raise InputFormatError("empty form expression")
    while pos < len(text):
        match = _TERM_RE.match(text, pos)
        if not match or match.end() == pos:
            raise InputFormatError(f"cannot parse form near {text[pos:]!r}")
        sign, number, variables = match.groups()
        if not number and not variables.strip():
            raise InputFormatError(f"cannot parse form near {text[pos:]!r}")
        coeff = Fraction(number) if number else Fraction(1)
        if sign == "-":
            coeff = -coeff
        exponents: dict[str, int] = {}
        for var, square in _VAR_RE.findall(variables):
            exponents[var] = exponents.get(var, 0) + (2 if square else 1)
        yield coeff, exponents
        pos = match.end()


def parse_linear_form(text: str) -> LinearFormP3:
    coeffs = {v: Fraction(0) for v in "xyzw"}
    for coeff, exponents in _parse_terms(text):
        if sum(exponents.values()) != 1:
            raise InputFormatError(f"{text!r} is not linear")
        var = next(iter(exponents))
        coeffs[var] += coeff
    return LinearFormP3([coeffs[v] for v in "xyzw"])


def parse_quadric(text: str) -> QuadricForm:
    from .exact import QUADRIC_MONOMIALS

    index = {}
    for k, (i, j) in enumerate(QUADRIC_MONOMIALS):
        index[("xyzw"[i], "xyzw"[j])] = k
    coeffs = [Fraction(0)] * 10
    for coeff, exponents in _parse_terms(text):
        if sum(exponents.values()) != 2:
            raise InputFormatError(f"{text!r} is not a quadratic form")
        vars_sorted = []
        for var, e in sorted(exponents.items(), key=lambda kv: "xyzw".index(kv[0])):
            vars_sorted.extend([var] * e)
        coeffs[index[tuple(vars_sorted)]] += coeff
    return QuadricForm(coeffs)


# ---------------------------------------------------------------------------
# forms and matrices
# ---------------------------------------------------------------------------


def encode_linear_form(form: LinearFormP3) -> list:
    return [encode_rational(c) for c in form.coeffs]


def decode_linear_form(payload) -> LinearFormP3:
    if isinstance(payload, str):
        return parse_linear_form(payload)
    if payload == 0 and not isinstance(payload, (list, tuple)):
        return LinearFormP3.zero()  # symbolic shorthand [[x,0],[0,x]]
    return LinearFormP3(_decode_vector(payload, 4, "a linear form"))


def encode_quadric(q: QuadricForm) -> list:
    return [encode_rational(c) for c in q.coeffs]


def decode_quadric(payload) -> QuadricForm:
    if isinstance(payload, str):
        return parse_quadric(payload)
    return QuadricForm(_decode_vector(payload, 10, "a quadric"))


def encode_binary_form(f: BinaryForm) -> list:
    return [encode_rational(c) for c in f.coeffs]


def decode_binary_form(payload, degree: int | None = None) -> BinaryForm:
    if not isinstance(payload, (list, tuple)) or not payload:
        raise InputFormatError("a binary form is a coefficient array")
    form = BinaryForm([decode_rational(v) for v in payload])
    if degree is not None and form.degree != degree:
        raise InputFormatError(f"expected degree {degree}, got {form.degree}")
    return form


def encode_bidegree_form(f: BidegreeForm) -> list:
    return [encode_rational(c) for c in f.serialize_order()]


def decode_bidegree_form(payload, sdeg: int, udeg: int) -> BidegreeForm:
    flat = _decode_vector(
        payload, (sdeg + 1) * (udeg + 1), f"a bidegree-({sdeg},{udeg}) form"
    )
    grid = [[Fraction(0)] * (udeg + 1) for _ in range(sdeg + 1)]
    k = 0
    for i in range(sdeg, -1, -1):
        for j in range(udeg, -1, -1):
            grid[i][j] = flat[k]
            k += 1
    return BidegreeForm(sdeg, udeg, grid)


def encode_matrix(m: Matrix) -> list:
    return [[encode_rational(c) for c in row] for row in m.data]


def decode_matrix(payload, rows: int, cols: int) -> Matrix:
    if not isinstance(payload, (list, tuple)) or len(payload) != rows:
        raise InputFormatError(f"expected a {rows}x{cols} matrix")
    return Matrix([_decode_vector(row, cols, "a matrix row") for row in payload])


# ---------------------------------------------------------------------------
# domain objects
# ---------------------------------------------------------------------------


def encode_module(m: KroneckerModule) -> list:
    return [[encode_linear_form(e) for e in row] for row in m.entries]


def decode_module(payload) -> KroneckerModule:
    if not isinstance(payload, (list, tuple)) or len(payload) != 2:
        raise InputFormatError("a module is a 2x2 nested array of linear forms")
    try:
        rows = [[decode_linear_form(e) for e in row] for row in payload]
    except TypeError as exc:
        raise InputFormatError("a module is a 2x2 nested array of linear forms") from exc
    if any(len(row) != 2 for row in rows):
        raise InputFormatError("a module is a 2x2 nested array of linear forms")
    try:
        return KroneckerModule(rows)
    except ValueError as exc:
        raise InputFormatError(str(exc)) from exc


def encode_group_element(g: GroupElement) -> list:
    return [encode_matrix(g.left), encode_matrix(g.right)]


def decode_group_element(payload) -> GroupElement:
    if not isinstance(payload, (list, tuple)) or len(payload) != 2:
        raise InputFormatError("a group element is a pair of 2x2 matrices")
    return GroupElement(
        decode_matrix(payload[0], 2, 2), decode_matrix(payload[1], 2, 2)
    )


def encode_line(line: LineInP3) -> list:
    return [[encode_rational(c) for c in p] for p in line.points]


def decode_line(payload) -> LineInP3:
    if not isinstance(payload, (list, tuple)) or len(payload) != 2:
        raise InputFormatError("a line is a pair of spanning 4-vectors")
    p1 = _decode_vector(payload[0], 4, "a spanning point")
    p2 = _decode_vector(payload[1], 4, "a spanning point")
    try:
        return LineInP3(p1, p2)
    except ValueError as exc:
        raise InputFormatError(str(exc)) from exc


def encode_conic(c: ConicInGrassmannian) -> list:
    return [encode_binary_form(f) for f in c.forms]


def decode_conic(payload) -> ConicInGrassmannian:
    if not isinstance(payload, (list, tuple)) or len(payload) != 6:
        raise InputFormatError("a conic is six binary quadratics")
    return ConicInGrassmannian([decode_binary_form(f, degree=2) for f in payload])


def encode_resolution(r: ResolutionData) -> dict:
    if r.kind == 1:
        return {
            "type": 1,
            "matrix": [[encode_bidegree_form(e) for e in row] for row in r.matrix],
        }
    return {"type": r.kind, "b": encode_bidegree_form(r.b)}


def decode_resolution(payload) -> ResolutionData:
    if not isinstance(payload, dict) or "type" not in payload:
        raise InputFormatError("resolution data is a tagged object")
    kind = payload["type"]
    if kind == 1:
        matrix = payload.get("matrix")
        if not isinstance(matrix, (list, tuple)) or len(matrix) != 2:
            raise InputFormatError("type-1 resolution data needs a 2x2 matrix")
        rows = [[decode_bidegree_form(e, 1, 1) for e in row] for row in matrix]
        return ResolutionData(1, matrix=rows)
    if kind in (2, 3):
        return ResolutionData(kind, b=decode_bidegree_form(payload.get("b"), 2, 2))
    raise InputFormatError(f"unknown resolution type {kind!r}")


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"invalid JSON: {exc}") from exc


def _quote_token(token: str) -> str:
    if token.startswith('"') and token.endswith('"'):
        return token
    try:
        int(token)
        return token
    except ValueError:
        return json.dumps(token)


def parse_inline(text: str):
    """Read an inline CLI payload.

    Accepts plain JSON, a bare symbolic string (``xy - 2zw``), or bracket
    notation with unquoted symbols (``[[x,z],[w,y]]``): bare tokens are
    quoted and the result parsed as JSON.
    """
    stripped = text.strip()
    if not stripped:
        raise InputFormatError("empty input")
    if stripped[0] not in "[{":
        return stripped
    try:
        return json.loads(stripped)
    except json.JSONDecodeError:
        pass
    out = []
    token = ""
    for ch in stripped:
        if ch in "[],{}:":
            if token.strip():
                out.append(_quote_token(token.strip()))
            token = ""
            out.append(ch)
        else:
            token += ch
    if token.strip():
        out.append(_quote_token(token.strip()))
    try:
        return json.loads("".join(out))
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"cannot parse inline payload: {exc}") from exc
