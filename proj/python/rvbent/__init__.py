"""Exact dimer-covering counts and geometric entanglement on holed lattices."""

from fractions import Fraction

from ._core import (
    average_entanglement,
    catalan_constant,
    closed_form_count,
    count_coverings,
    entanglement,
    hole_config_count,
    is_coverable,
    norm_sums,
    periodic_entropy_estimate,
    separable_maximizer_probe,
    statevector_oracle,
    sweep,
)
from ._core import pathological_probability_estimate as _pathological_raw

__all__ = [
    "average_entanglement",
    "catalan_constant",
    "closed_form_count",
    "count_coverings",
    "entanglement",
    "hole_config_count",
    "is_coverable",
    "norm_sums",
    "pathological_probability_estimate",
    "periodic_entropy_estimate",
    "separable_maximizer_probe",
    "statevector_oracle",
    "sweep",
]


def pathological_probability_estimate(rows: int, cols: int) -> Fraction:
    """Closed-form estimate of the non-coverable fraction at four holes."""
    num, den = _pathological_raw(rows, cols)
    return Fraction(num, den)
