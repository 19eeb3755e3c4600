import pytest
from hypothesis import given, settings, strategies as st

from gridutil import dominant_partitions
from qrigged.combinat import (Composition, Partition, Tableau, charge,
                              enumerate_ssyt, kostka_foulkes, kostka_number,
                              rsk_insert)
from qrigged.qalg import IntPolynomial


class TestEnumeration:
    def test_two_tableaux(self):
        out = enumerate_ssyt(Partition((2, 1)), Composition((1, 1, 1)))
        assert len(out) == 2

    def test_forced_filling(self):
        lam = Partition((3, 2, 1))
        out = enumerate_ssyt(lam, Composition(lam.parts))
        assert len(out) == 1
        assert out[0].rows == ((1, 1, 1), (2, 2), (3,))

    def test_column_strictness_blocks(self):
        assert enumerate_ssyt(Partition((1, 1)), Composition((2, 0))) == []

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            enumerate_ssyt(Partition((2,)), Composition((1,)))

    def test_deterministic_reading_word_order(self):
        out = enumerate_ssyt(Partition((2, 2)), Composition((1, 1, 1, 1)))
        words = [t.reading_word() for t in out]
        assert words == sorted(words)


class TestCharge:
    def test_single_letter(self):
        assert charge((1,)) == 0

    def test_convention(self):
        assert charge((1, 2)) == 1
        assert charge((2, 1)) == 0

    def test_reading_words_of_the_two_tableaux(self):
        out = enumerate_ssyt(Partition((2, 1)), Composition((1, 1, 1)))
        assert sorted(charge(t.reading_word()) for t in out) == [1, 2]

    def test_non_dominant_rejected(self):
        with pytest.raises(ValueError):
            charge((2, 2, 1))

    @settings(max_examples=80, deadline=None)
    @given(st.integers(2, 8), st.randoms(use_true_random=False))
    def test_knuth_class_invariance(self, length, rng):
        # random word of bounded length with dominant content
        while True:
            word = tuple(rng.randint(1, 3) for _ in range(length))
            counts = [word.count(v) for v in range(1, max(word) + 1)]
            if all(counts[i] >= counts[i + 1] for i in range(len(counts) - 1)):
                break
        tab = rsk_insert(word)
        reading = tuple(x for row in reversed(tab) for x in row)
        assert charge(word) == charge(reading)


class TestKostkaFoulkes:
    def test_diagonal_is_one(self):
        for size in range(1, 7):
            for lam in dominant_partitions(size):
                assert kostka_foulkes(Partition(lam), Partition(lam)) == \
                    IntPolynomial.one()

    def test_hand_values(self):
        assert kostka_foulkes(Partition((2,)), Partition((1, 1))) == \
            IntPolynomial({1: 1})
        assert kostka_foulkes(Partition((2, 1)), Partition((1, 1, 1))) == \
            IntPolynomial({1: 1, 2: 1})

    def test_specialization_counts(self):
        for size in range(1, 6):
            for lam in dominant_partitions(size):
                for mu in dominant_partitions(size):
                    kf = kostka_foulkes(Partition(lam), Partition(mu))
                    assert kf.evaluate_at_one() == \
                        kostka_number(Partition(lam), Composition(mu))

    def test_kostka_number_content_symmetry(self):
        from itertools import permutations
        for size in range(1, 7):
            for lam in dominant_partitions(size):
                for mu in dominant_partitions(size):
                    base = kostka_number(Partition(lam), Composition(mu))
                    for perm in set(permutations(mu)):
                        assert kostka_number(Partition(lam), Composition(perm)) == base

    def test_max_degree_is_row_superstandard_charge(self):
        # computed, not assumed: compare against the charge of the tableau
        # whose rows are filled consecutively
        for size in range(1, 7):
            for lam in dominant_partitions(size):
                poly = kostka_foulkes(Partition(lam), Partition((1,) * size))
                rows = []
                nxt = 1
                for part in lam:
                    rows.append(tuple(range(nxt, nxt + part)))
                    nxt += part
                superstandard = Tableau(tuple(rows))
                assert poly.degree() == charge(superstandard.reading_word())


