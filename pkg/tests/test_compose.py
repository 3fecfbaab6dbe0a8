import random
from itertools import combinations

import pytest

from hyperpfaffian.combinat import inversion_sign
from hyperpfaffian.compose import (
    build_g,
    composition_constant,
    verify_composition,
)
from hyperpfaffian.hpf import SkewFunction, pf_definition
from hyperpfaffian.randgen import Lcg, random_skew_function


def restricted_pf(f, ordered):
    """Hyperpfaffian of f pulled back along an arbitrary ordered index
    tuple; independent oracle for the skew-symmetry of the composed values."""
    n = len(ordered)
    values = {}
    for subset in combinations(range(1, n + 1), f.k):
        args = tuple(ordered[s - 1] for s in subset)
        values[subset] = f.value_at(args)
    return pf_definition(SkewFunction(n, f.k, values))


class TestConstant:
    @pytest.mark.parametrize(
        "k,n,p,value",
        [(2, 2, 4, 1), (2, 4, 4, 1), (2, 4, 8, 3), (2, 2, 6, 1), (2, 2, 8, 1), (4, 4, 8, 1)],
    )
    def test_known_values(self, k, n, p, value):
        assert composition_constant(k, n, p) == value

    def test_divisibility_violations(self):
        with pytest.raises(ValueError):
            composition_constant(2, 3, 6)
        with pytest.raises(ValueError):
            composition_constant(2, 4, 6)
        with pytest.raises(ValueError):
            composition_constant(4, 2, 8)


class TestBuildG:
    def test_same_order_is_the_function_itself(self):
        f = random_skew_function(4, 2, Lcg(1))
        g = build_g(f, 2)
        assert g.values == f.values

    def test_matching_formula_on_the_full_subset(self):
        f = random_skew_function(4, 2, Lcg(2))
        g = build_g(f, 4)
        expected = (
            f[(1, 2)] * f[(3, 4)] - f[(1, 3)] * f[(2, 4)] + f[(1, 4)] * f[(2, 3)]
        )
        assert g[(1, 2, 3, 4)] == expected

    def test_matching_formula_on_a_sparse_subset(self):
        f = random_skew_function(8, 2, Lcg(3))
        g = build_g(f, 4)
        expected = (
            f[(1, 2)] * f[(4, 7)] - f[(1, 4)] * f[(2, 7)] + f[(1, 7)] * f[(2, 4)]
        )
        assert g[(1, 2, 4, 7)] == expected

    def test_composed_values_are_skew_symmetric(self):
        rng = random.Random(44)
        f = random_skew_function(8, 2, Lcg(4))
        g = build_g(f, 4)
        for _ in range(20):
            subset = sorted(rng.sample(range(1, 9), 4))
            ordered = subset[:]
            slot = rng.randrange(3)
            ordered[slot], ordered[slot + 1] = ordered[slot + 1], ordered[slot]
            assert restricted_pf(f, tuple(ordered)) == -g[tuple(subset)]
            shuffled = subset[:]
            rng.shuffle(shuffled)
            assert restricted_pf(f, tuple(shuffled)) == inversion_sign(shuffled) * g[tuple(subset)]


class TestVerifyComposition:
    @pytest.mark.parametrize("seed", [1, 2, 3])
    def test_pair_to_pair(self, seed):
        f = random_skew_function(4, 2, Lcg(seed))
        check = verify_composition(f, 2, 2, 4)
        assert check.constant == 1
        assert check.ok
        assert check.pf_composed == check.pf_original

    @pytest.mark.parametrize("seed", [1, 2])
    def test_single_outer_block(self, seed):
        f = random_skew_function(4, 2, Lcg(seed))
        check = verify_composition(f, 2, 4, 4)
        assert check.constant == 1
        assert check.ok

    @pytest.mark.parametrize("seed", [1, 2])
    def test_pair_to_quadruple(self, seed):
        f = random_skew_function(8, 2, Lcg(seed))
        check = verify_composition(f, 2, 4, 8)
        assert check.constant == 3
        assert check.ok

    def test_degenerate_higher_arity(self):
        f = random_skew_function(8, 4, Lcg(5))
        check = verify_composition(f, 4, 4, 8)
        assert check.constant == 1
        assert check.ok

    def test_six_to_pair(self):
        f = random_skew_function(6, 2, Lcg(6))
        check = verify_composition(f, 2, 2, 6)
        assert check.constant == 1
        assert check.ok

    def test_eight_to_pair(self):
        f = random_skew_function(8, 2, Lcg(7))
        check = verify_composition(f, 2, 2, 8)
        assert check.constant == 1
        assert check.ok

    def test_function_shape_is_validated(self):
        f = random_skew_function(4, 2, Lcg(1))
        with pytest.raises(ValueError):
            verify_composition(f, 2, 2, 8)
        with pytest.raises(ValueError):
            verify_composition(f, 4, 4, 4)
