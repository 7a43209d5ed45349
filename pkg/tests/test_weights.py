"""Tests for torus characters, the weights of g/h and the weight of sigma."""

import random
from fractions import Fraction

import pytest

from cramer.errors import DimensionError, UnknownVariableError
from cramer.exact import RatMatrix, random_matrix
from cramer.group import GroupElement, act
from cramer.poly import OMEGA, T, VariableTable, m, n
from cramer.variety import ConfigurationPoint, generate_ideal, pivot_subsets
from cramer.weights import (
    Character,
    RestrictedCharacter,
    coordinate_weight,
    g_mod_h_blocks,
    g_mod_h_weights,
    g_weights,
    h_weights,
    omega_weight,
    sigma_weight,
    sigma_weight_for,
    standard_cocharacter,
    theorem_character,
    weight_product,
)

SHAPES = [(1, 1), (1, 2), (2, 2), (2, 3), (3, 3)]


class TestCharacters:
    def test_coordinate_weights(self):
        table = VariableTable.cramer(2, 2)
        assert str(coordinate_weight(m(0, 0), table)) == "a1 -b1"
        assert str(coordinate_weight(n(3, 1), table)) == "b4 -c2"
        assert coordinate_weight(OMEGA, table) == omega_weight(2, 2)

    def test_omega_weight(self):
        assert str(omega_weight(1, 1)) == "-a1 +b1 +b2 -c1"
        assert omega_weight(2, 3).restrict().is_trivial()

    def test_unknown_variable(self):
        with pytest.raises(UnknownVariableError, match="not in the variable table"):
            coordinate_weight(OMEGA, VariableTable.cramer(1, 1, omega=False))
        with pytest.raises(UnknownVariableError, match="no torus weight"):
            coordinate_weight(T, VariableTable.cramer(1, 1, deformation=True))

    def test_evaluate(self):
        table = VariableTable.cramer(2, 2)
        weight = coordinate_weight(m(0, 0), table)
        assert weight.evaluate([2, 1], [3, 1, 1, 1], [1, 1]) == Fraction(2, 3)

    def test_restrict(self):
        chi = Character.basis(1, 2, "b", 1) - Character.basis(1, 2, "c", 0)
        assert chi.restrict().is_trivial()
        assert Character.basis(1, 2, "b", 0).restrict() == RestrictedCharacter.of(1, 2, [1], [0, 0])

    def test_pairing_with_standard_cocharacter(self):
        lam = standard_cocharacter(2, 2)
        table = VariableTable.cramer(2, 2)
        assert omega_weight(2, 2).pairing(lam) == 1
        assert coordinate_weight(n(2, 0), table).pairing(lam) == 1
        assert coordinate_weight(n(3, 1), table).pairing(lam) == 0
        assert coordinate_weight(m(1, 2), table).pairing(lam) == -1

    def test_arithmetic(self):
        a1 = Character.basis(1, 1, "a", 0)
        assert (3 * a1 - a1) == a1 * 2
        assert (a1 - a1).is_trivial()
        assert str(Character.trivial(1, 1)) == "0"

    def test_wrong_length(self):
        with pytest.raises(DimensionError):
            Character(1, 1, (0, 0))
        with pytest.raises(DimensionError):
            Character.basis(1, 1, "c", 1)


class TestGModH:
    @pytest.mark.parametrize("r,s", SHAPES)
    def test_counts(self, r, s):
        t = r + s
        assert len(g_weights(r, s)) == r * r + t * t + s * s
        assert len(h_weights(r, s)) == r * r + s * s + r * s
        assert len(g_mod_h_weights(r, s)) == r * t + s * s

    @pytest.mark.parametrize("r,s", SHAPES)
    def test_remaining_blocks(self, r, s):
        blocks = g_mod_h_blocks(r, s)
        assert set(blocks) <= {"rr", "ss", "rs"}
        assert len(blocks.get("rs", [])) == r * s

    @pytest.mark.parametrize("r,s", SHAPES)
    def test_square_blocks_cancel(self, r, s):
        blocks = g_mod_h_blocks(r, s)
        assert weight_product(blocks.get("rr", []), r, s).is_trivial()
        assert weight_product(blocks.get("ss", []), r, s).is_trivial()

    @pytest.mark.parametrize("r,s", SHAPES)
    def test_product_is_theorem_character(self, r, s):
        assert weight_product(g_mod_h_weights(r, s)) == theorem_character(r, s)

    def test_theorem_character(self):
        assert str(theorem_character(2, 3)) == "3*a1 +3*a2 -2*c1 -2*c2 -2*c3"

    def test_empty_product(self):
        assert weight_product([], 2, 2) == RestrictedCharacter.trivial(2, 2)


class TestSigmaWeight:
    @pytest.mark.parametrize("r,s", SHAPES)
    def test_independent_of_chart(self, r, s):
        weights = {sigma_weight_for(r, s, subset) for subset in pivot_subsets(r, s)}
        assert len(weights) == 1

    @pytest.mark.parametrize("r,s", SHAPES)
    def test_full_weight(self, r, s):
        full, restricted = sigma_weight(r, s)
        t = r + s
        assert full.a == (r,) * r
        assert full.b == (s - r,) * t
        assert full.c == (-s,) * s
        assert restricted == theorem_character(r, s)


def monomial_weight(exps: tuple[int, ...], table: VariableTable) -> Character:
    total = Character.trivial(table.r, table.s)
    for var, e in zip(table, exps):
        if e:
            total = total + coordinate_weight(var, table) * e
    return total


class TestEquivariance:
    @pytest.mark.parametrize("r,s", [(1, 2), (2, 2), (2, 3)])
    def test_diagonal_action_scales_by_weight(self, r, s):
        rng = random.Random(17)
        t = r + s
        table = VariableTable.cramer(r, s)
        ideal = generate_ideal(r, s)
        nonzero = [k for k in range(-4, 5) if k]
        for _ in range(20):
            a, b, c = ([Fraction(rng.choice(nonzero)) for _ in range(k)] for k in (r, t, s))
            g = GroupElement(RatMatrix.diagonal(a), RatMatrix.diagonal(b), RatMatrix.diagonal(c))
            # off the variety, so generator values are not all zero
            p = ConfigurationPoint(
                random_matrix(r, t, rng, 4), random_matrix(t, s, rng, 4), rng.choice(nonzero)
            )
            moved = act(g, p)
            for var in table:
                factor = coordinate_weight(var, table).evaluate(a, b, c)
                assert moved.coordinate(var) == factor * p.coordinate(var), var.name
            for gen in ideal.generators:
                exps, _ = gen.poly.sorted_terms()[0]
                factor = monomial_weight(exps, table).evaluate(a, b, c)
                assert gen.poly.eval(moved) == factor * gen.poly.eval(p), str(gen.label)

    def test_generators_are_weight_homogeneous(self):
        table = VariableTable.cramer(2, 3)
        for gen in generate_ideal(2, 3).generators:
            weights = {monomial_weight(exps, table) for exps, _ in gen.poly.sorted_terms()}
            assert len(weights) == 1, str(gen.label)
