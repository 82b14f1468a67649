"""Relative-entropy coherence of multimode Gaussian states.

States are covariance matrix / displacement pairs with the vacuum covariance
equal to the identity; all entropies and coherences are in bits.
"""

from ._core import (
    DEFAULT_TOL,
    CoherenceReport,
    FockMatrix,
    GaussianChannel,
    GaussianState,
    IncoherentClassification,
    IncoherentDecomposition,
    IncoherentModeFactor,
    IncoherentModeSpec,
    QuadraticFormCoefficients,
    ValidationReport,
    Violation,
    __version__,
    amplifier,
    apply,
    classify_incoherent,
    closest_incoherent_state,
    coherence,
    coherent,
    compose,
    default_cutoff,
    diagonality_residual,
    displaced_squeezed_thermal,
    entropy,
    fock_element,
    fock_matrix,
    g_function,
    identity_channel,
    incoherent_channel,
    integral_form_matrix,
    is_incoherent,
    loss,
    mean_photon_numbers,
    oracle_coherence,
    oracle_mean_photon,
    quadratic_coeffs,
    reassemble,
    reduce,
    relative_entropy_to_incoherent,
    rotation,
    squeezed,
    symplectic_eigenvalues,
    symplectic_form,
    tensor,
    thermal,
    two_mode_squeezed,
    vacuum,
    validate_channel,
    validate_state,
)

__all__ = [
    "DEFAULT_TOL",
    "CoherenceReport",
    "FockMatrix",
    "GaussianChannel",
    "GaussianState",
    "IncoherentClassification",
    "IncoherentDecomposition",
    "IncoherentModeFactor",
    "IncoherentModeSpec",
    "QuadraticFormCoefficients",
    "ValidationReport",
    "Violation",
    "__version__",
    "amplifier",
    "apply",
    "classify_incoherent",
    "closest_incoherent_state",
    "coherence",
    "coherent",
    "compose",
    "default_cutoff",
    "diagonality_residual",
    "displaced_squeezed_thermal",
    "entropy",
    "fock_element",
    "fock_matrix",
    "g_function",
    "identity_channel",
    "incoherent_channel",
    "integral_form_matrix",
    "is_incoherent",
    "loss",
    "mean_photon_numbers",
    "oracle_coherence",
    "oracle_mean_photon",
    "quadratic_coeffs",
    "reassemble",
    "reduce",
    "relative_entropy_to_incoherent",
    "rotation",
    "squeezed",
    "symplectic_eigenvalues",
    "symplectic_form",
    "tensor",
    "thermal",
    "two_mode_squeezed",
    "vacuum",
    "validate_channel",
    "validate_state",
]
