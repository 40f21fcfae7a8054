"""n-potent matrices (T^n = T): Riesz projections, spectral decomposition,
and the Boolean algebra of projections in span{T, ..., T^(n-1)}."""

from .comb import (
    BetaVector,
    CombCoefficients,
    SpectrumSubset,
    betas,
    boolean_complement,
    boolean_join,
    boolean_meet,
    classify_projection,
    enumerate_projections,
    eval_comb,
    subset_to_coeffs,
)
from .decomposition import (
    SpectralDecomposition,
    eigenspace_basis,
    reconstruct,
    renorm_isometry_check,
    spectral_decomposition,
    verify_alternate_form,
)
from .linalg import Tolerances
from .potency import (
    NPotentOperator,
    certify,
    detect_order,
    is_periodic,
    kernel_projection,
    nonzero_part_projection,
)
from .riesz import (
    ContourSpec,
    Spectrum,
    omega,
    resolvent_expansion,
    riesz_contour,
    riesz_polynomial,
    riesz_zero,
    semisimplicity_check,
    spectrum,
)

__version__ = "0.1.0"

__all__ = [
    "betas",
    "BetaVector",
    "boolean_complement",
    "boolean_join",
    "boolean_meet",
    "certify",
    "classify_projection",
    "CombCoefficients",
    "ContourSpec",
    "detect_order",
    "eigenspace_basis",
    "enumerate_projections",
    "eval_comb",
    "is_periodic",
    "kernel_projection",
    "nonzero_part_projection",
    "NPotentOperator",
    "omega",
    "reconstruct",
    "renorm_isometry_check",
    "resolvent_expansion",
    "riesz_contour",
    "riesz_polynomial",
    "riesz_zero",
    "semisimplicity_check",
    "spectral_decomposition",
    "SpectralDecomposition",
    "Spectrum",
    "spectrum",
    "SpectrumSubset",
    "subset_to_coeffs",
    "Tolerances",
    "verify_alternate_form",
]

