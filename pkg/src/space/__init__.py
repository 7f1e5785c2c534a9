"""X-normed spaces with an indexed orthogonal base."""

from .orthogonality import (
    GramSchmidtResult,
    LinearlyDependentError,
    NotDecreasingError,
    NotOrthogonalError,
    PerturbationVerdict,
    ZeroVectorError,
    coordinates_in,
    distance_to_line,
    distance_to_subspace,
    geometric_targets,
    gram_schmidt,
    gram_schmidt_with_basis,
    is_orthogonal_pair,
    is_orthogonal_system,
    perturb_check,
    renormalize_decreasing,
)
from .vectors import (
    SpaceDescriptor,
    UnknownIndexError,
    Vector,
    VectorSyntaxError,
    combination,
    dominant_indices,
    format_vector,
    leading_form,
    norm,
    parse_vector,
    standard_space,
    term_norm,
)

__all__ = [
    "GramSchmidtResult",
    "LinearlyDependentError",
    "NotDecreasingError",
    "NotOrthogonalError",
    "PerturbationVerdict",
    "SpaceDescriptor",
    "UnknownIndexError",
    "Vector",
    "VectorSyntaxError",
    "ZeroVectorError",
    "combination",
    "coordinates_in",
    "distance_to_line",
    "distance_to_subspace",
    "dominant_indices",
    "format_vector",
    "geometric_targets",
    "gram_schmidt",
    "gram_schmidt_with_basis",
    "is_orthogonal_pair",
    "is_orthogonal_system",
    "leading_form",
    "norm",
    "parse_vector",
    "perturb_check",
    "renormalize_decreasing",
    "standard_space",
    "term_norm",
]
