"""Exact-arithmetic computations on the three birational models: Kronecker
modules on P^3, resolution matrices on the quadric Q = Z(xy - zw), and
parametrized conics in Gr(2,4), together with the virtual Poincare
polynomial pipeline tying their invariants together.
"""

from .exact import (
    BidegreeForm,
    BinaryForm,
    LinearFormP3,
    Matrix,
    QuadricForm,
    gcd_binary_forms,
    quadric_gram_rank,
)
from .fmbridge import (
    SpecialPoint,
    TransportCertificate,
    canonical_special_module,
    contract_resolution,
    transport_to_p3,
    transport_to_q,
)
from .grconic import (
    ConicInGrassmannian,
    conic_diagnostics,
    line_at_parameter,
    parameter_of_line,
    phi,
)
from .kronecker import (
    GroupElement,
    KroneckerModule,
    SemistabilityLevel,
    StratumLabel,
    act,
    classify_stratum,
    dependency_form,
    det_quadric,
    end_algebra_dim,
    is_equivalent,
    normal_form_sample,
    semistability_level,
)
from .motivic import (
    PoincarePolynomial,
    blowup,
    euler,
    hilb2_surface,
    pipeline_m2,
    proj_space,
    sym2,
)
from .quadgeom import (
    LineInP3,
    PairFault,
    Q_FORM,
    ResolutionData,
    RulingFamily,
    decompose_on_quadric,
    divisor_ideal_forms,
    resolution_from_pair,
    ruling_family_in_q,
    segre_linear,
    segre_point,
    segre_preimage,
    segre_quadric,
    validate_pair,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
