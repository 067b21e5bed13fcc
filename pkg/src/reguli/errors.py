"""Exception types shared across the package."""


class ReguliError(Exception):
    """Base class for all package-specific errors."""


class DegreeMismatch(ReguliError):
    """Arithmetic on forms whose (bi)degrees are incompatible."""


class InconsistentSystem(ReguliError):
    """A linear solve has no solution."""


class SingularMatrix(ReguliError):
    """Inversion of a matrix with vanishing determinant."""


class SingularGroupElement(ReguliError):
    """A group element was built from a non-invertible factor."""


class NotStable(ReguliError):
    """Operation requires a GIT-stable module.

    Carries the dependency form whose roots witness the failure.
    """

    def __init__(self, message, dependency_form=None):
        super().__init__(message)
        self.dependency_form = dependency_form


class DegenerateParams(ReguliError):
    """Normal-form parameters land in a deeper stratum than requested."""


class DegenerateMatrix(ReguliError):
    """A resolution matrix with identically vanishing determinant."""


class PointNotOnQ(ReguliError):
    """Chart conversion of a point that does not lie on the fixed quadric."""


class LineOnQ(ReguliError):
    """The line lies inside the fixed quadric, so the length-2 divisor degenerates."""


class NotARuling(ReguliError):
    """Family lookup for a line that is not contained in the fixed quadric."""


class NotInIdeal(ReguliError):
    """A (2,2)-form is not a combination of the two given (1,1)-forms."""


class NonIntegralResult(ReguliError):
    """A motivic half-sum failed to be an integer polynomial."""


class NonDivisible(ReguliError):
    """An exact polynomial division left a remainder."""


class PairValidationError(ReguliError):
    """A (quadric, line) pair failed geometric validation.

    ``fault`` is a :class:`reguli.quadgeom.PairFault` member.
    """

    def __init__(self, fault):
        super().__init__(str(fault))
        self.fault = fault


class InputFormatError(ReguliError):
    """Malformed user input (JSON payloads, symbolic form strings)."""
