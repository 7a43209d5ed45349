"""Tests for the group action, orbit sampling and one-parameter limits."""

import random
from fractions import Fraction

import pytest

from cramer.errors import LimitError, ParameterError, SingularMatrixError
from cramer.exact import RatMatrix, random_matrix
from cramer.group import (
    GroupElement,
    act,
    base_point,
    is_in_stabilizer,
    normalize_lambda,
    one_param_limit,
    one_param_path,
    orbit_dimension,
    orbit_sample,
    permutation_sign,
    stabilizer_shape_holds,
    weyl_act,
    weyl_element,
)
from cramer.poly import T, MultiPoly, VariableTable
from cramer.types import OmegaMode, Stratum
from cramer.variety import ConfigurationPoint, classify, generate_ideal, on_variety

SHAPES = [(1, 1), (1, 2), (2, 2), (2, 3)]


class TestGroupElement:
    def test_singular_rejected(self):
        with pytest.raises(SingularMatrixError, match="B is singular"):
            GroupElement(RatMatrix.identity(1), RatMatrix.zeros(2, 2), RatMatrix.identity(1))

    def test_lambda(self):
        g = GroupElement(
            RatMatrix.from_rows([[2]]),
            RatMatrix.from_rows([[1, 1], [0, 3]]),
            RatMatrix.from_rows([[5]]),
        )
        assert g.lam == Fraction(3, 10)
        assert normalize_lambda(g).lam == 1

    def test_identity_acts_trivially(self):
        v = base_point(2, 3)
        assert act(GroupElement.identity(2, 3), v) == v

    def test_action_is_a_group_action(self):
        rng = random.Random(4)
        p = base_point(2, 2)
        for _ in range(5):
            g = GroupElement.random(2, 2, rng)
            h = GroupElement.random(2, 2, rng)
            assert act(g * h, p) == act(g, act(h, p))
            assert act(g.inverse(), act(g, p)) == p


class TestOrbitSample:
    @pytest.mark.parametrize("r,s", SHAPES)
    def test_samples_on_variety(self, r, s):
        ideal = generate_ideal(r, s)
        points = orbit_sample(r, s, seed=0, count=25)
        assert len(points) == 25
        assert all(on_variety(ideal, p) for p in points)
        assert all(classify(p, ideal) is Stratum.OPEN_ORBIT for p in points)

    def test_deterministic(self):
        assert orbit_sample(2, 3, seed=9, count=5) == orbit_sample(2, 3, seed=9, count=5)
        assert orbit_sample(2, 3, seed=9, count=5) != orbit_sample(2, 3, seed=10, count=5)

    def test_omega_less(self):
        ideal = generate_ideal(2, 2, OmegaMode.OMEGA_LESS)
        points = orbit_sample(2, 2, seed=3, count=10, omega_mode=OmegaMode.OMEGA_LESS)
        assert all(not p.has_omega for p in points)
        assert all(on_variety(ideal, p) for p in points)

    def test_include_base_point(self):
        points = orbit_sample(1, 2, seed=0, count=3, include_base_point=True)
        assert points[0] == base_point(1, 2)

    def test_parallel_matches_serial(self):
        serial = orbit_sample(2, 2, seed=2, count=6)
        assert orbit_sample(2, 2, seed=2, count=6, jobs=2) == serial

    def test_count_positive(self):
        with pytest.raises(ParameterError):
            orbit_sample(1, 1, seed=0, count=0)


class TestStabilizer:
    def test_block_element_fixes_base_point(self):
        g = GroupElement(
            RatMatrix.from_rows([[2]]),
            RatMatrix.from_rows([[2, 0], [5, 3]]),
            RatMatrix.from_rows([[3]]),
        )
        assert stabilizer_shape_holds(g)
        assert is_in_stabilizer(g, 1, 1)

    def test_upper_block_moves_base_point(self):
        g = GroupElement(
            RatMatrix.identity(1),
            RatMatrix.from_rows([[1, 1], [0, 1]]),
            RatMatrix.identity(1),
        )
        assert not stabilizer_shape_holds(g)
        assert not is_in_stabilizer(g, 1, 1)

    @pytest.mark.parametrize("r,s", [(1, 2), (2, 3)])
    def test_block_shape_matches_fixed_points(self, r, s):
        rng = random.Random(23)
        v = base_point(r, s)
        kinds = {True: 0, False: 0}
        for k in range(50):
            g = GroupElement.random(r, s, rng, 3)
            if k % 3:
                # B = [[A, E], [X, C]] with E = 0, or a single unit entry off the shape
                X = random_matrix(s, r, rng, 3)
                E = RatMatrix.zeros(r, s)
                if k % 3 == 2:
                    E = E.replace(rng.randrange(r), rng.randrange(s), 1)
                B = RatMatrix.vstack(RatMatrix.hstack(g.A, E), RatMatrix.hstack(X, g.C))
                try:
                    g = GroupElement(g.A, B, g.C)
                except SingularMatrixError:
                    continue
            fixed = act(g, v) == v
            assert stabilizer_shape_holds(g) == fixed
            assert is_in_stabilizer(g, r, s) == fixed
            kinds[fixed] += 1
        assert kinds[True] > 0 and kinds[False] > 0

    @pytest.mark.parametrize("r,s,expected", [(1, 1, 3), (1, 2, 7), (2, 2, 12), (2, 3, 19)])
    def test_orbit_dimension(self, r, s, expected):
        assert orbit_dimension(r, s) == expected


class TestWeyl:
    def test_permutation_sign(self):
        assert permutation_sign([0, 1, 2]) == 1
        assert permutation_sign([1, 0, 2]) == -1
        assert permutation_sign([1, 2, 0]) == 1

    def test_matches_group_action(self):
        perms = ([1, 0], [2, 0, 4, 1, 3], [2, 1, 0])
        for p in orbit_sample(2, 3, seed=6, count=5):
            assert weyl_act(perms, p) == act(weyl_element(perms), p)

    def test_preserves_variety(self):
        ideal = generate_ideal(2, 2)
        perms = ([1, 0], [3, 1, 0, 2], [0, 1])
        assert on_variety(ideal, weyl_act(perms, base_point(2, 2)))

    def test_not_a_permutation(self):
        with pytest.raises(ParameterError, match="sigma_t"):
            weyl_act(([0], [0, 0], [0]), base_point(1, 1))


class TestOneParameterLimit:
    @pytest.mark.parametrize("r,s", SHAPES)
    def test_path_stays_on_variety(self, r, s):
        assert one_param_path(r, s).satisfies(generate_ideal(r, s))

    def test_path_entries(self):
        r, s = 2, 3
        path = one_param_path(r, s)
        t = MultiPoly.variable(VariableTable.deformation_only(), T)
        assert path.N[r, 0] == t
        assert path.omega == t
        assert path.at(1) == base_point(r, s)

    @pytest.mark.parametrize("r,s", SHAPES)
    def test_limit_is_divisor(self, r, s):
        limit = one_param_limit(r, s)
        assert limit.omega == 0
        assert classify(limit, generate_ideal(r, s)) is Stratum.DIVISOR_V1

    def test_negative_power(self):
        v = base_point(1, 1)
        p = ConfigurationPoint(v.M.replace(0, 1, 1), v.N, v.omega)
        with pytest.raises(LimitError, match="m12"):
            one_param_path(1, 1, point=p)
