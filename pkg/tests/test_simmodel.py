"""Similarity-model generators, match probability, and k selection."""

import math

import numpy as np
import pytest

from lcskpp import core, simmodel
from lcskpp.simmodel import (
    AT_RICH_DNA,
    DNA_UNIFORM,
    AlphabetDistribution,
    PairClass,
    expected_match_pairs,
    gen_similar,
    gen_unrelated,
    generate_pair,
    k_fast,
    match_probability,
    mismatch_probability,
    realized_mismatch_rate,
    similar_class,
    uniform_distribution,
    unrelated_class,
)


def mismatch_fraction(x, y):
    xa = np.frombuffer(x, dtype=np.uint8)
    ya = np.frombuffer(y, dtype=np.uint8)
    return float((xa != ya).mean())


class TestAlphabetDistribution:
    def test_validation(self):
        with pytest.raises(ValueError):
            AlphabetDistribution(b"A", (1.0,))  # too few symbols
        with pytest.raises(ValueError):
            AlphabetDistribution(b"AC", (0.7, 0.7))  # sum != 1
        with pytest.raises(ValueError):
            AlphabetDistribution(b"AC", (1.5, -0.5))  # negative
        with pytest.raises(ValueError):
            AlphabetDistribution(b"AA", (0.5, 0.5))  # duplicates
        with pytest.raises(ValueError):
            AlphabetDistribution(b"ACG", (0.5, 0.5))  # arity mismatch

    def test_zero_probability_symbol_allowed(self):
        dist = AlphabetDistribution(b"AC", (1.0, 0.0))
        assert match_probability(dist) == 1.0


class TestMatchProbability:
    def test_uniform_four(self):
        assert match_probability(DNA_UNIFORM) == pytest.approx(0.25)

    def test_uniform_two(self):
        assert match_probability(uniform_distribution("AB")) == pytest.approx(0.5)

    def test_skewed(self):
        dist = AlphabetDistribution(b"ACGT", (0.5, 0.3, 0.1, 0.1))
        assert match_probability(dist) == pytest.approx(0.36)

    def test_uniform_is_reciprocal_alphabet_size(self):
        for size in (2, 4, 8, 20):
            dist = uniform_distribution(bytes(range(65, 65 + size)))
            assert match_probability(dist) == pytest.approx(1.0 / size)
            assert 0.0 < match_probability(dist) <= 1.0


class TestGenUnrelated:
    def test_zero_length(self):
        assert gen_unrelated(0, DNA_UNIFORM, 3) == (b"", b"")

    def test_deterministic(self):
        assert gen_unrelated(500, DNA_UNIFORM, 11) == gen_unrelated(500, DNA_UNIFORM, 11)
        assert gen_unrelated(500, DNA_UNIFORM, 11) != gen_unrelated(500, DNA_UNIFORM, 12)

    def test_symbol_frequencies(self):
        x, y = gen_unrelated(100_000, DNA_UNIFORM, 29)
        for seq in (x, y):
            for symbol in b"ACGT":
                assert abs(seq.count(symbol) / len(seq) - 0.25) < 0.01

    def test_mismatch_rate_approaches_e_unrelated(self):
        x, y = gen_unrelated(100_000, DNA_UNIFORM, 31)
        assert mismatch_fraction(x, y) == pytest.approx(0.75, abs=0.01)

    def test_strings_are_independent_streams(self):
        x, y = gen_unrelated(2000, DNA_UNIFORM, 8)
        assert x != y


class TestGenSimilar:
    def test_zero_rate_copies(self):
        x, y = gen_similar(4000, DNA_UNIFORM, 0.0, 5)
        assert x == y

    def test_mismatch_fraction_estimates_rate(self):
        x, y = gen_similar(100_000, DNA_UNIFORM, 0.05, 17)
        assert abs(mismatch_fraction(x, y) - 0.05) < 0.005

    def test_lengths_always_equal(self):
        for n in (0, 1, 57):
            x, y = gen_similar(n, DNA_UNIFORM, 0.2, 3)
            assert len(x) == len(y) == n

    def test_mutations_stay_in_alphabet(self):
        _, y = gen_similar(5000, DNA_UNIFORM, 0.3, 23)
        assert set(y) <= set(b"ACGT")

    def test_rate_at_or_above_unrelated_rejected(self):
        with pytest.raises(ValueError):
            gen_similar(10, DNA_UNIFORM, 0.75, 1)
        with pytest.raises(ValueError):
            gen_similar(10, DNA_UNIFORM, 0.9, 1)

    def test_deterministic(self):
        assert gen_similar(300, DNA_UNIFORM, 0.1, 9) == gen_similar(300, DNA_UNIFORM, 0.1, 9)


class TestPairClass:
    def test_kinds(self):
        assert unrelated_class().kind == "unrelated"
        assert similar_class(0.1).e_similar == 0.1
        with pytest.raises(ValueError):
            PairClass("related")
        with pytest.raises(ValueError):
            PairClass("similar")  # missing rate
        with pytest.raises(ValueError):
            PairClass("unrelated", 0.1)

    def test_generate_pair_dispatch(self):
        ux, uy = generate_pair(400, DNA_UNIFORM, unrelated_class(), 7)
        assert (ux, uy) == gen_unrelated(400, DNA_UNIFORM, 7)
        sx, sy = generate_pair(400, DNA_UNIFORM, similar_class(0.2), 7)
        assert (sx, sy) == gen_similar(400, DNA_UNIFORM, 0.15, 7)

    def test_nominal_rate_realizes_scaled_mismatch(self):
        # a nominal rate e realizes a mismatch fraction of e * (1 - S)
        assert realized_mismatch_rate(0.2, DNA_UNIFORM) == pytest.approx(0.15)
        x, y = generate_pair(100_000, DNA_UNIFORM, similar_class(0.2), 13)
        assert mismatch_fraction(x, y) == pytest.approx(0.15, abs=0.005)


class TestExpectedMatchPairs:
    def test_point_estimate(self):
        assert expected_match_pairs(1000, 1000, 10, DNA_UNIFORM) == pytest.approx(
            2000.95367431640625, rel=1e-12
        )

    def test_empirical_off_diagonal_within_factor_three(self):
        n, k = 2000, 8
        product_term = n * n * match_probability(DNA_UNIFORM) ** k
        total = 0
        for seed in range(50):
            x, y = gen_unrelated(n, DNA_UNIFORM, seed)
            total += sum(1 for i, j in core.find_match_pairs(x, y, k) if i != j)
        average = total / 50
        assert product_term / 3 <= average <= product_term * 3


class TestKFast:
    def test_large_uniform_dna(self):
        assert k_fast(100_000, 100_000, DNA_UNIFORM) == 8

    def test_tiny_inputs_clamp(self):
        assert k_fast(4, 4, DNA_UNIFORM) == 1

    def test_bigger_alphabet_needs_smaller_k(self):
        k4 = k_fast(100_000, 100_000, DNA_UNIFORM)
        k20 = k_fast(100_000, 100_000, uniform_distribution(bytes(range(65, 85))))
        assert k20 <= k4

    def test_nonincreasing_in_alphabet_size(self):
        previous = None
        for size in (2, 4, 8, 16, 32, 64):
            k = k_fast(50_000, 50_000, uniform_distribution(bytes(range(size))))
            if previous is not None:
                assert k <= previous
            previous = k

    def test_expected_pairs_near_linear_at_k_fast(self):
        for n in (10_000, 100_000, 1_000_000):
            k = k_fast(n, n, DNA_UNIFORM)
            assert expected_match_pairs(n, n, k, DNA_UNIFORM) <= 2.0 * (n + n)

    def test_degenerate_distribution_rejected(self):
        with pytest.raises(ValueError):
            k_fast(100, 100, AlphabetDistribution(b"AC", (1.0, 0.0)))
        with pytest.raises(ValueError):
            k_fast(0, 5, DNA_UNIFORM)


class TestSeeds:
    def test_tuple_entropy_accepted(self):
        a = gen_unrelated(100, DNA_UNIFORM, (5, 0, 3))
        b = gen_unrelated(100, DNA_UNIFORM, (5, 0, 3))
        c = gen_unrelated(100, DNA_UNIFORM, (5, 0, 4))
        assert a == b and a != c

    def test_negative_seed_rejected(self):
        with pytest.raises(ValueError):
            gen_unrelated(10, DNA_UNIFORM, -1)

    def test_at_rich_composition(self):
        assert match_probability(AT_RICH_DNA) == pytest.approx(0.2756)
        assert mismatch_probability(AT_RICH_DNA) == pytest.approx(0.7244)
