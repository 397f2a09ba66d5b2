"""Velocity addition on the open unit ball and everything it carries.

Core arithmetic (ball), hyperbolic predicates (geometry), classification
of addition-respecting self-maps (morphisms), 2x2 matrix models of the
3-dimensional ball (matrix_models), and a seeded randomized verifier for
all of the above (verifier).
"""

from .ball import (
    DEFAULT_ABS_TOL,
    DEFAULT_BOUNDARY_MARGIN,
    DEFAULT_REL_TOL,
    DEFAULT_SAMPLE_RMAX,
    DEFAULT_TOL,
    BallDomainError,
    DimensionMismatchError,
    GyroError,
    GyroVector,
    ToleranceConfig,
    approx_eq,
    einstein_add,
    gamma,
    gyration,
    line_param,
    neg,
)
from .geometry import (
    collinear_direct,
    collinear_gyro,
    commutes,
    gram_determinant,
    klein_distance,
    linearly_dependent,
)
from .matrix_models import (
    DensityMatrix2,
    Hermitian2,
    PosDef2Det1,
    PositivityError,
    bloch_to_density,
    boxdot,
    density_to_bloch,
    is_positive_definite,
    normalize_det,
    odot,
    sqrt_congruence,
    sqrt_posdef2,
)
from .morphisms import (
    BallMap,
    LinearMap,
    MapClassification,
    PreconditionError,
    UnsupportedDimensionError,
    classify_endomorphism,
    decision_threshold,
    endomorphism_residual,
    is_orthogonal,
    random_orthogonal,
    test_endomorphism,
    zero_propagation_check,
)
from .verifier import (
    BallSampler,
    PropertyReport,
    UnknownPropertyError,
    derive_seed,
    registered_names,
    run_suite,
    sample_ball,
)

__version__ = "0.1.0"

__all__ = [
    "BallDomainError",
    "BallMap",
    "BallSampler",
    "DEFAULT_ABS_TOL",
    "DEFAULT_BOUNDARY_MARGIN",
    "DEFAULT_REL_TOL",
    "DEFAULT_SAMPLE_RMAX",
    "DEFAULT_TOL",
    "DensityMatrix2",
    "DimensionMismatchError",
    "GyroError",
    "GyroVector",
    "Hermitian2",
    "LinearMap",
    "MapClassification",
    "PosDef2Det1",
    "PositivityError",
    "PreconditionError",
    "PropertyReport",
    "ToleranceConfig",
    "UnknownPropertyError",
    "UnsupportedDimensionError",
    "approx_eq",
    "bloch_to_density",
    "boxdot",
    "classify_endomorphism",
    "collinear_direct",
    "collinear_gyro",
    "commutes",
    "decision_threshold",
    "density_to_bloch",
    "derive_seed",
    "einstein_add",
    "endomorphism_residual",
    "gamma",
    "gram_determinant",
    "gyration",
    "is_orthogonal",
    "is_positive_definite",
    "klein_distance",
    "line_param",
    "linearly_dependent",
    "neg",
    "normalize_det",
    "odot",
    "random_orthogonal",
    "registered_names",
    "run_suite",
    "sample_ball",
    "sqrt_congruence",
    "sqrt_posdef2",
    "test_endomorphism",
    "zero_propagation_check",
]
