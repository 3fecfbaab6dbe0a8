import random
from math import factorial

import pytest

from hyperpfaffian.combinat import (
    composition_tilings,
    increasing_compositions,
    permutation_sign,
    tiling_sign,
)
from hyperpfaffian.hpf import SkewSpec, pf_closed_form, pf_definition, skew_function_from_spec
from hyperpfaffian.involution import (
    WeightedOrientedPartition,
    compose_distinct,
    decompose_distinct,
    has_distinct_weights,
    pairing_involution,
    signed_weighted_sum,
    smallest_repeated_pair,
    weighted_oriented_partitions,
)
from hyperpfaffian.poly import Polynomial
from hyperpfaffian.randgen import Lcg, random_skew_spec

WORKED_BLOCKS = ((9, 1, 2, 4), (5, 3, 8, 10), (11, 12, 7, 6))
WORKED_WEIGHTS = ((1, 4, 5, 12), (0, 1, 7, 14), (2, 4, 6, 10))


def worked_example():
    return WeightedOrientedPartition(WORKED_BLOCKS, WORKED_WEIGHTS)


def random_weighted(rng, n, k, want_repeated=None):
    """Uniform-ish random element; optionally resample until the weight
    class matches."""
    vectors = list(increasing_compositions(n, k))
    while True:
        elements = list(range(1, n + 1))
        rng.shuffle(elements)
        blocks = tuple(
            tuple(elements[i * k:(i + 1) * k]) for i in range(n // k)
        )
        weights = tuple(rng.choice(vectors) for _ in range(n // k))
        wop = WeightedOrientedPartition(blocks, weights)
        if want_repeated is None or has_distinct_weights(wop) != want_repeated:
            return wop


class TestConstruction:
    def test_blocks_normalized_by_minimum(self):
        wop = WeightedOrientedPartition(((3, 4), (2, 1)), ((0, 3), (1, 2)))
        assert wop.blocks == ((2, 1), (3, 4))
        assert wop.weights == ((1, 2), (0, 3))

    def test_weights_travel_with_blocks(self):
        wop = worked_example()
        assert wop.blocks == WORKED_BLOCKS
        assert wop.weights == WORKED_WEIGHTS

    def test_rejects_non_partitions(self):
        with pytest.raises(ValueError):
            WeightedOrientedPartition(((1, 2), (2, 3)), ((0, 3), (1, 2)))

    def test_rejects_bad_weight_vectors(self):
        with pytest.raises(ValueError):
            WeightedOrientedPartition(((1, 2), (3, 4)), ((3, 0), (1, 2)))
        with pytest.raises(ValueError):
            WeightedOrientedPartition(((1, 2), (3, 4)), ((0, 1), (1, 2)))

    def test_derived_quantities(self):
        wop = worked_example()
        assert (wop.n, wop.k) == (12, 4)
        assert wop.sign == -1
        assert wop.element_weights()[9] == 1
        assert wop.element_weights()[5] == 0
        expected = Polynomial.monomial(
            {1: 4, 2: 5, 3: 1, 4: 12, 6: 10, 7: 6, 8: 7, 9: 1, 10: 14, 11: 2, 12: 4}
        )
        assert wop.weight_monomial() == expected

    def test_coefficient_multiplies_spec_lookups(self):
        spec = SkewSpec(12, 4, {(1, 4, 5, 12): 2, (0, 1, 7, 14): 3, (2, 4, 6, 10): 5})
        assert worked_example().coefficient(spec) == 30
        missing = SkewSpec(12, 4, {(1, 4, 5, 12): 2})
        assert worked_example().coefficient(missing) == 0


class TestEnumeration:
    @pytest.mark.parametrize(
        "n,k,count",
        [(2, 2, 2), (4, 2, 48), (4, 4, 24), (6, 2, 3240)],
    )
    def test_counts(self, n, k, count):
        assert sum(1 for _ in weighted_oriented_partitions(n, k)) == count

    def test_count_formula(self):
        for n, k in [(2, 2), (4, 2), (4, 4), (6, 2)]:
            gamma = sum(1 for _ in increasing_compositions(n, k))
            expected = factorial(n) // factorial(n // k) * gamma ** (n // k)
            assert sum(1 for _ in weighted_oriented_partitions(n, k)) == expected

    def test_distinct_elements(self):
        seen = list(weighted_oriented_partitions(4, 2))
        assert len(set(seen)) == len(seen)

    def test_invalid_arguments(self):
        with pytest.raises(ValueError):
            weighted_oriented_partitions(3, 2)


class TestClassification:
    def test_worked_example_is_repeated(self):
        assert not has_distinct_weights(worked_example())

    def test_single_block_distinct(self):
        wop = WeightedOrientedPartition(((1, 2),), ((0, 1),))
        assert has_distinct_weights(wop)

    def test_same_vector_twice_is_repeated(self):
        wop = WeightedOrientedPartition(((1, 2), (3, 4)), ((1, 2), (1, 2)))
        assert not has_distinct_weights(wop)

    def test_distinct_weights_are_exactly_the_range(self):
        for wop in weighted_oriented_partitions(6, 2):
            if has_distinct_weights(wop):
                assert sorted(wop.element_weights().values()) == list(range(6))


class TestPairingInvolution:
    def test_worked_example_pair_and_image(self):
        wop = worked_example()
        assert smallest_repeated_pair(wop) == (1, 12)
        image = pairing_involution(wop)
        expected = WeightedOrientedPartition(
            ((9, 12, 2, 4), (5, 3, 8, 10), (11, 1, 7, 6)), WORKED_WEIGHTS
        )
        assert image == expected

    def test_single_repeated_pair_is_swapped(self):
        wop = WeightedOrientedPartition(((1, 2), (3, 4)), ((0, 3), (0, 3)))
        image = pairing_involution(wop)
        # weights: 1 and 3 carry 0; 2 and 4 carry 3; smallest pair is (1, 3);
        # the swapped blocks (3, 2) and (1, 4) reorder by minimum element
        assert smallest_repeated_pair(wop) == (1, 3)
        assert image.blocks == ((1, 4), (3, 2))

    def test_rejects_distinct_weights(self):
        wop = WeightedOrientedPartition(((1, 2),), ((0, 1),))
        with pytest.raises(ValueError):
            pairing_involution(wop)

    def test_involution_properties_on_random_elements(self):
        rng = random.Random(2024)
        spec = random_skew_spec(6, 2, Lcg(9))
        for _ in range(1000):
            wop = random_weighted(rng, 6, 2, want_repeated=True)
            image = pairing_involution(wop)
            assert image != wop
            assert not has_distinct_weights(image)
            assert pairing_involution(image) == wop
            assert image.sign == -wop.sign
            assert image.weight_monomial() == wop.weight_monomial()
            assert image.coefficient(spec) == wop.coefficient(spec)


def exhaustive_pairing_check(n, k, spec):
    """Every repeated element pairs off; distinct elements factor with
    multiplicative signs.  Returns (total, repeated, distinct)."""
    total = repeated = distinct = 0
    factorizations = set()
    for wop in weighted_oriented_partitions(n, k):
        total += 1
        if has_distinct_weights(wop):
            distinct += 1
            perm, tiling = decompose_distinct(wop)
            assert wop.sign == tiling_sign(tiling) * permutation_sign(perm)
            assert compose_distinct(perm, tiling) == wop
            factorizations.add((perm, tiling))
        else:
            repeated += 1
            image = pairing_involution(wop)
            assert image != wop
            assert not has_distinct_weights(image)
            assert pairing_involution(image) == wop
            assert image.sign == -wop.sign
            assert image.weight_monomial() == wop.weight_monomial()
            assert image.coefficient(spec) == wop.coefficient(spec)
    assert len(factorizations) == distinct
    return total, repeated, distinct


class TestExhaustiveSmallCases:
    def test_four_two(self):
        spec = random_skew_spec(4, 2, Lcg(5))
        total, repeated, distinct = exhaustive_pairing_check(4, 2, spec)
        assert (total, repeated, distinct) == (48, 24, 24)
        tilings = sum(1 for _ in composition_tilings(4, 2))
        assert distinct == factorial(4) * tilings

    def test_four_four(self):
        spec = random_skew_spec(4, 4, Lcg(6))
        total, repeated, distinct = exhaustive_pairing_check(4, 4, spec)
        # the single weight vector makes every element distinct-weighted
        assert (total, repeated, distinct) == (24, 0, 24)
        assert distinct == factorial(4) * 1

    def test_six_two_bijection_count(self):
        distinct = sum(
            1 for wop in weighted_oriented_partitions(6, 2) if has_distinct_weights(wop)
        )
        tilings = sum(1 for _ in composition_tilings(6, 2))
        assert distinct == factorial(6) * tilings == 720


class TestDecomposition:
    def test_identity_orientation(self):
        wop = WeightedOrientedPartition(((1, 2),), ((0, 1),))
        perm, tiling = decompose_distinct(wop)
        assert perm == (1, 2)
        assert tiling == ((0, 1),)
        assert wop.sign == tiling_sign(tiling) * permutation_sign(perm) == 1

    def test_reversed_orientation(self):
        wop = WeightedOrientedPartition(((2, 1),), ((0, 1),))
        perm, tiling = decompose_distinct(wop)
        assert perm == (2, 1)
        assert wop.sign == -1 == tiling_sign(tiling) * permutation_sign(perm)

    def test_rejects_repeated_weights(self):
        with pytest.raises(ValueError):
            decompose_distinct(worked_example())

    def test_compose_validates(self):
        with pytest.raises(ValueError):
            compose_distinct((1, 1), ((0, 1),))
        with pytest.raises(ValueError):
            compose_distinct((1, 2, 3, 4), ((0, 3), (0, 3)))


class TestSignedWeightedSum:
    def test_smallest_case(self):
        spec = SkewSpec(2, 2, {(0, 1): 4})
        x1, x2 = Polynomial.variable(1), Polynomial.variable(2)
        assert signed_weighted_sum(spec) == 4 * (x2 - x1)

    @pytest.mark.parametrize("seed", [1, 2, 3])
    def test_full_sum_is_the_partition_sum(self, seed):
        spec = random_skew_spec(4, 2, Lcg(seed))
        expected = pf_definition(skew_function_from_spec(spec))
        assert signed_weighted_sum(spec) == expected

    @pytest.mark.parametrize("seed", [1, 2, 3])
    def test_repeated_class_cancels(self, seed):
        spec = random_skew_spec(4, 2, Lcg(seed))
        assert signed_weighted_sum(spec, restrict="repeated").is_zero()

    @pytest.mark.parametrize("seed", [1, 2])
    def test_distinct_class_gives_closed_form(self, seed):
        spec = random_skew_spec(4, 2, Lcg(seed))
        assert signed_weighted_sum(spec, restrict="distinct") == pf_closed_form(spec)

    def test_six_two_split(self):
        spec = random_skew_spec(6, 2, Lcg(8))
        full = signed_weighted_sum(spec)
        assert signed_weighted_sum(spec, restrict="repeated").is_zero()
        assert signed_weighted_sum(spec, restrict="distinct") == full == pf_closed_form(spec)

    def test_rejects_deficient_degree(self):
        spec = SkewSpec(4, 2, {(0, 1): 1}, degree=1)
        with pytest.raises(ValueError):
            signed_weighted_sum(spec)

    def test_rejects_unknown_restriction(self):
        spec = SkewSpec(2, 2, {(0, 1): 1})
        with pytest.raises(ValueError):
            signed_weighted_sum(spec, restrict="everything")
