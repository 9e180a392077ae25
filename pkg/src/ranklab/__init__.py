"""ranklab: a rank-metric coding laboratory.

Builds the subspace-polynomial families behind adversarial list-decoding
instances for Gabidulin codes, certifies them by exact brute force on small
fields, and lifts the results to constant-dimension subspace codes.
"""

from ranklab.errors import RanklabError
from ranklab.field import FieldElement, FieldSpec, embed, frobenius, make_field
from ranklab.linpoly import (
    LinearizedPoly,
    OrdinaryPoly,
    divides_check,
    expand,
    field_vanishing_poly,
    kernel,
    q_associate_backward,
    q_associate_forward,
)
from ranklab.subspace import (
    Subspace,
    cyclic_shift,
    enumerate_grassmannian,
    gaussian_binomial,
    orbit,
    subspace_distance,
    subspace_polynomial,
    subspace_polynomial_product,
)
from ranklab.constructions import (
    FamilyParams,
    PolyFamily,
    is_pivot_family,
    orbit_base_poly,
    orbit_poly_family,
    orbit_representatives,
    pigeonhole_subfamily,
    shift_family,
    subfield_linear_family,
)
from ranklab.gabidulin import (
    GabidulinCode,
    RankWord,
    codewords,
    encode,
    enumerate_ball,
    evaluate_word,
    johnson_like_radius,
    make_code,
    preimage_message,
    prior_counting_bound,
    puncture,
    puncture_word,
    punctured_radius_shift,
    rank_distance,
    rank_weight,
)
from ranklab.adversarial import (
    AdversarialInstance,
    VerificationReport,
    build_counting_instance,
    build_explicit_instance,
    compare_radius_to_prior,
    counting_bound,
    ratio_family_params,
    rs_family_size_report,
    technical_sqrt_inequality,
    verify_instance,
)
from ranklab.subspace_code import (
    LiftedSubspace,
    lift,
    lift_code,
    lift_word,
    lifted_distance,
    prior_lifted_bound,
    verify_lifted_instance,
)

__version__ = "0.1.0"

__all__ = [
    "AdversarialInstance",
    "FamilyParams",
    "FieldElement",
    "FieldSpec",
    "GabidulinCode",
    "LiftedSubspace",
    "LinearizedPoly",
    "OrdinaryPoly",
    "PolyFamily",
    "RankWord",
    "RanklabError",
    "Subspace",
    "VerificationReport",
    "build_counting_instance",
    "build_explicit_instance",
    "codewords",
    "compare_radius_to_prior",
    "counting_bound",
    "cyclic_shift",
    "divides_check",
    "embed",
    "encode",
    "enumerate_ball",
    "enumerate_grassmannian",
    "evaluate_word",
    "expand",
    "field_vanishing_poly",
    "frobenius",
    "gaussian_binomial",
    "is_pivot_family",
    "johnson_like_radius",
    "kernel",
    "lift",
    "lift_code",
    "lift_word",
    "lifted_distance",
    "make_code",
    "make_field",
    "orbit",
    "orbit_base_poly",
    "orbit_poly_family",
    "orbit_representatives",
    "pigeonhole_subfamily",
    "preimage_message",
    "prior_counting_bound",
    "prior_lifted_bound",
    "puncture",
    "puncture_word",
    "punctured_radius_shift",
    "q_associate_backward",
    "q_associate_forward",
    "rank_distance",
    "rank_weight",
    "ratio_family_params",
    "rs_family_size_report",
    "shift_family",
    "subfield_linear_family",
    "subspace_distance",
    "subspace_polynomial",
    "subspace_polynomial_product",
    "technical_sqrt_inequality",
    "verify_instance",
    "verify_lifted_instance",
]
