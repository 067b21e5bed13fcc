"""Transport of resolution matrices between (1,1)-forms on Q and Kronecker
modules on P^3.

The derived-category machinery collapses, on representatives, to the
coefficient bijection of the Segre chart applied entrywise; the package
treats the vanishing of the higher direct images as settled and only moves
matrices.  The two ruling divisors contract to fixed canonical modules.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import DegenerateMatrix
from .exact import LinearFormP3
from .kronecker import KroneckerModule, det_quadric
from .quadgeom import ResolutionData, linear_from_segre, segre_linear


class SpecialPoint(Enum):
    """The two contracted boundary divisors, named by the ruling bundle."""

    D10 = "D10"
    D01 = "D01"

    def __str__(self) -> str:
        return self.value


def transport_to_p3(r: ResolutionData) -> KroneckerModule:
    """Entrywise chart transport of a kind-1 matrix to a Kronecker module."""
    if r.kind != 1:
        raise ValueError("only kind-1 resolution data transports to a module")
    if r.det().is_zero:
        raise DegenerateMatrix("matrix determinant vanishes identically")
    entries = [[linear_from_segre(e) for e in row] for row in r.matrix]
    return KroneckerModule(entries)


def transport_to_q(m: KroneckerModule) -> ResolutionData:
    """Inverse transport; the determinant must survive restriction to Q.

    A determinant proportional to xy - zw (the two contracted points have
    exactly this) dies on Q, and the image matrix would not resolve a sheaf
    with curve support.
    """
    from .quadgeom import segre_quadric

    if segre_quadric(det_quadric(m)).is_zero:
        raise DegenerateMatrix(
            "module determinant vanishes identically on Q "
            "(zero or proportional to xy - zw)"
        )
    entries = [[segre_linear(e) for e in row] for row in m.entries]
    return ResolutionData(1, matrix=entries)


def canonical_special_module(which: SpecialPoint) -> KroneckerModule:
    """Fixed stable representative of a contracted ruling divisor.

    Both have determinant xy - zw; their parametrized conics sweep the two
    ruling families of Q, which is the oracle pinning the assignment.
    """
    x = LinearFormP3.variable("x")
    y = LinearFormP3.variable("y")
    z = LinearFormP3.variable("z")
    w = LinearFormP3.variable("w")
    if which is SpecialPoint.D10:
        return KroneckerModule([[x, z], [w, y]])
    return KroneckerModule([[x, w], [z, y]])


def contract_resolution(r: ResolutionData) -> KroneckerModule:
    """Image module of any resolution datum: transport, or the contraction
    point for the two ruling kinds (the curve datum is discarded)."""
    if r.kind == 1:
        return transport_to_p3(r)
    if r.kind == 2:
        return canonical_special_module(SpecialPoint.D10)
    return canonical_special_module(SpecialPoint.D01)


@dataclass(frozen=True)
class TransportCertificate:
    """A checked round trip between a resolution matrix and a module."""

    source: ResolutionData
    target: KroneckerModule
    direction: str  # "to_p3" or "to_q"

    @property
    def round_trip_ok(self) -> bool:
        if self.direction == "to_p3":
            return transport_to_q(self.target) == self.source
        return transport_to_p3(self.source) == self.target


def certify_to_p3(r: ResolutionData) -> TransportCertificate:
    return TransportCertificate(source=r, target=transport_to_p3(r), direction="to_p3")


def certify_to_q(m: KroneckerModule) -> TransportCertificate:
    return TransportCertificate(source=transport_to_q(m), target=m, direction="to_q")
