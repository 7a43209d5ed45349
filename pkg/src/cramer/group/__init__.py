"""The group action, stabilizer, orbits and one-parameter limits."""

from cramer.group.action import (
    GroupElement,
    act,
    base_point,
    is_in_stabilizer,
    normalize_lambda,
    orbit_dimension,
    orbit_sample,
    permutation_sign,
    stabilizer_shape_holds,
    weyl_act,
    weyl_element,
)
from cramer.group.limits import OneParamPoint, one_param_limit, one_param_path

__all__ = [
    "GroupElement",
    "OneParamPoint",
    "act",
    "base_point",
    "is_in_stabilizer",
    "normalize_lambda",
    "one_param_limit",
    "one_param_path",
    "orbit_dimension",
    "orbit_sample",
    "permutation_sign",
    "stabilizer_shape_holds",
    "weyl_act",
    "weyl_element",
]
