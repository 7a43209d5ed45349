"""Weights of g/h under the restricted torus and the weight of the canonical differential."""

from __future__ import annotations

import logging
from collections.abc import Sequence

from cramer.errors import VerificationError
from cramer.poly.table import VariableTable
from cramer.variety.ideal import pivot_free_coordinates, pivot_subsets, validate_shape
from cramer.weights.characters import Character, RestrictedCharacter, coordinate_weight

logger = logging.getLogger(__name__)

# Block labels of g = gl(r) + gl(t) + gl(s); gl(t) splits along t = r + s.
BLOCKS = ("rr", "ss", "tl", "rs", "bl", "br")


def _root(r: int, s: int, left: tuple[str, int], right: tuple[str, int]) -> RestrictedCharacter:
    exps = [0] * (r + s)
    for (block, i), sign in ((left, 1), (right, -1)):
        exps[i if block == "a" else r + i] += sign
    return RestrictedCharacter(r, s, tuple(exps))


def g_weights(r: int, s: int) -> list[tuple[str, RestrictedCharacter]]:
    """Weights of gl(r) + gl(s) + gl(t) under the restricted torus, labelled by block."""
    t = r + s

    def b(i: int) -> tuple[str, int]:
        return ("a", i) if i < r else ("c", i - r)

    out: list[tuple[str, RestrictedCharacter]] = []
    out += [("rr", _root(r, s, ("a", i), ("a", j))) for i in range(r) for j in range(r)]
    out += [("ss", _root(r, s, ("c", i), ("c", j))) for i in range(s) for j in range(s)]
    for i in range(t):
        for j in range(t):
            block = {(True, True): "tl", (True, False): "rs", (False, True): "bl"}.get(
                (i < r, j < r), "br"
            )
            out.append((block, _root(r, s, b(i), b(j))))
    return out


def h_weights(r: int, s: int) -> list[RestrictedCharacter]:
    """Weights of h: the A block, the C block and the free lower-left block of B."""
    out = [_root(r, s, ("a", i), ("a", j)) for i in range(r) for j in range(r)]
    out += [_root(r, s, ("c", i), ("c", j)) for i in range(s) for j in range(s)]
    out += [_root(r, s, ("c", i), ("a", j)) for i in range(s) for j in range(r)]
    return out


def g_mod_h_blocks(r: int, s: int) -> dict[str, list[RestrictedCharacter]]:
    """Remove each weight of h from the weights of g, matching from the end."""
    validate_shape(r, s)
    remaining = g_weights(r, s)
    for weight in h_weights(r, s):
        for k in range(len(remaining) - 1, -1, -1):
            if remaining[k][1] == weight:
                del remaining[k]
                break
        else:
            raise VerificationError(f"weight {weight} of h does not occur in g")
    blocks: dict[str, list[RestrictedCharacter]] = {}
    for block, weight in remaining:
        blocks.setdefault(block, []).append(weight)
    return blocks


def g_mod_h_weights(r: int, s: int) -> list[RestrictedCharacter]:
    blocks = g_mod_h_blocks(r, s)
    out = [w for block in BLOCKS for w in blocks.get(block, [])]
    if len(out) != r * (r + s) + s * s:
        raise VerificationError(f"{len(out)} weights in g/h, expected rt + s^2")
    return out


def weight_product(
    ws: Sequence[RestrictedCharacter], r: int | None = None, s: int | None = None
) -> RestrictedCharacter:
    """Sum of the multiset; the trivial character when empty."""
    if not ws:
        return RestrictedCharacter.trivial(r or 0, s or 0)
    total = RestrictedCharacter.trivial(ws[0].r, ws[0].s)
    for w in ws:
        total = total + w
    return total


def theorem_character(r: int, s: int) -> RestrictedCharacter:
    """(det T_A)^s / (det T_C)^r."""
    return RestrictedCharacter.of(r, s, [s] * r, [-r] * s)


def _pivot_minor_weight(r: int, s: int, subset: tuple[int, ...]) -> Character:
    a = [1] * r
    b = [-1 if k in subset else 0 for k in range(r + s)]
    return Character(r, s, tuple(a + b + [0] * s))


def sigma_weight_for(r: int, s: int, subset: tuple[int, ...]) -> Character:
    """Weight of the free coordinates of the chart, minus s times the pivot minor."""
    table = VariableTable.cramer(r, s)
    total = Character.trivial(r, s)
    for var in pivot_free_coordinates(table, subset):
        total = total + coordinate_weight(var, table)
    return total - s * _pivot_minor_weight(r, s, subset)


def sigma_weight(r: int, s: int) -> tuple[Character, RestrictedCharacter]:
    """Weight of sigma_T under the full and the restricted torus.

    Recomputed for every pivot subset; the result must not depend on T and its
    restriction must equal the product of the g/h weights.
    """
    validate_shape(r, s)
    subsets = pivot_subsets(r, s)
    full = sigma_weight_for(r, s, subsets[0])
    for subset in subsets[1:]:
        if sigma_weight_for(r, s, subset) != full:
            raise VerificationError(f"sigma weight depends on the pivot subset {subset}")
    restricted = full.restrict()
    expected = weight_product(g_mod_h_weights(r, s))
    if restricted != expected:
        raise VerificationError(f"restricted sigma weight {restricted} != {expected}")
    logger.debug(f"sigma weight for ({r}, {s}): {full} -> {restricted}")
    return full, restricted
