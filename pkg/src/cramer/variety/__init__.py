"""Defining equations, evaluation and strata of Cramer varieties."""

from cramer.variety.ideal import (
    CramerIdeal,
    Generator,
    GeneratorLabel,
    ambient_dimension,
    complement,
    evaluate_ideal,
    expected_codimension,
    expected_generator_count,
    generate_ideal,
    jacobian_at,
    jacobian_rank_at,
    minor_sign,
    minor_sign_exponent,
    on_variety,
    pivot_free_coordinates,
    pivot_subsets,
    validate_shape,
)
from cramer.variety.point import ConfigurationPoint
from cramer.variety.strata import classify, divisor_representative

__all__ = [
    "ConfigurationPoint",
    "CramerIdeal",
    "Generator",
    "GeneratorLabel",
    "ambient_dimension",
    "classify",
    "complement",
    "divisor_representative",
    "evaluate_ideal",
    "expected_codimension",
    "expected_generator_count",
    "generate_ideal",
    "jacobian_at",
    "jacobian_rank_at",
    "minor_sign",
    "minor_sign_exponent",
    "on_variety",
    "pivot_free_coordinates",
    "pivot_subsets",
    "validate_shape",
]
