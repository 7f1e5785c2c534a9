"""NHS and c0 classification of X-normed spaces."""

from .isometry import DimensionMismatch, Matrix, ShiftDemo, is_isometry, is_surjective, shift_isometry_demo
from .nhs import (
    CompletenessNotAssumed,
    NonNhsWitness,
    ProbeReport,
    ProbeVerdict,
    RigidityVerdict,
    SequenceProbe,
    is_nhs,
    is_nhs_from_point,
    non_nhs_witness,
    probe_sequence,
    rigidity_verdict,
)
from .space_class import (
    INFINITE,
    InconsistentDescriptor,
    InsufficientEqualNormVectors,
    SpaceClass,
    c0_witness,
    check_consistency,
    contains_c0,
    orbit_census,
    space_class_from_space,
)
from .suite import nhs_suite

__all__ = [
    "CompletenessNotAssumed",
    "DimensionMismatch",
    "INFINITE",
    "InconsistentDescriptor",
    "InsufficientEqualNormVectors",
    "Matrix",
    "NonNhsWitness",
    "ProbeReport",
    "ProbeVerdict",
    "RigidityVerdict",
    "SequenceProbe",
    "ShiftDemo",
    "SpaceClass",
    "c0_witness",
    "check_consistency",
    "contains_c0",
    "is_isometry",
    "is_nhs",
    "is_nhs_from_point",
    "is_surjective",
    "nhs_suite",
    "non_nhs_witness",
    "orbit_census",
    "probe_sequence",
    "rigidity_verdict",
    "shift_isometry_demo",
    "space_class_from_space",
]
