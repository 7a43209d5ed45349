"""Torus weights of coordinates, of g/h and of the canonical differential."""

from cramer.weights.characters import (
    Character,
    RestrictedCharacter,
    coordinate_weight,
    omega_weight,
    standard_cocharacter,
)
from cramer.weights.theorem import (
    g_mod_h_blocks,
    g_mod_h_weights,
    g_weights,
    h_weights,
    sigma_weight,
    sigma_weight_for,
    theorem_character,
    weight_product,
)

__all__ = [
    "Character",
    "RestrictedCharacter",
    "coordinate_weight",
    "g_mod_h_blocks",
    "g_mod_h_weights",
    "g_weights",
    "h_weights",
    "omega_weight",
    "sigma_weight",
    "sigma_weight_for",
    "standard_cocharacter",
    "theorem_character",
    "weight_product",
]
