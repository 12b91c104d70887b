"""Cantor iterates, the disjoint-union witness, and relative frequencies."""

from fractions import Fraction

import pytest

from cakecalc import (
    BadIndex,
    BadParameter,
    cantor_iterate,
    difference,
    disjoint_union_witness,
    intersect,
    interval_set,
    relative_frequency,
    removed_mass,
    total_length,
)
from conftest import van_der_corput

F = Fraction


class TestCantorIterate:
    def test_stage_zero(self):
        assert cantor_iterate(F(1, 4), 0).set == interval_set((0, 1))

    def test_stage_one_third(self):
        assert cantor_iterate(F(1, 3), 1).set == interval_set((0, "1/3"), ("2/3", 1))

    def test_stage_two_third(self):
        got = cantor_iterate(F(1, 3), 2).set
        assert got == interval_set(
            (0, "1/9"), ("2/9", "1/3"), ("2/3", "7/9"), ("8/9", 1)
        )

    @pytest.mark.parametrize("p", [F(1, 3), F(1, 4), F(1, 5)])
    def test_component_count_and_nesting(self, p):
        prev = None
        for n in range(8):
            cur = cantor_iterate(p, n).set
            assert len(cur) == 2**n
            assert all(c.lo_closed and c.hi_closed for c in cur)
            if prev is not None:
                assert intersect(cur, prev) == cur
                assert difference(cur, prev).is_empty
            prev = cur

    @pytest.mark.parametrize("p", [F(1, 3), F(1, 4), F(2, 7)])
    def test_length_plus_removed_is_one(self, p):
        for n in range(8):
            assert total_length(cantor_iterate(p, n).set) + removed_mass(p, n) == 1

    def test_bad_ratio(self):
        with pytest.raises(BadParameter):
            cantor_iterate(F(1, 2), 3)
        with pytest.raises(BadParameter):
            cantor_iterate(F(1, 3), -1)


class TestRemovedMass:
    def test_zero_stage(self):
        assert removed_mass(F(1, 4), 0) == 0

    def test_third_geometric(self):
        assert removed_mass(F(1, 3), 10) == 1 - F(2, 3) ** 10

    def test_quarter_limit_half(self):
        for n in range(20):
            assert removed_mass(F(1, 4), n) == F(1, 2) * (1 - F(1, 2**n))
        assert abs(removed_mass(F(1, 4), 30) - F(1, 2)) < F(1, 2**30)


class TestWitness:
    def test_first_component(self):
        assert disjoint_union_witness(1) == interval_set(("3/4", 1))

    def test_two_components(self):
        got = disjoint_union_witness(2)
        assert got == interval_set(("3/8", "1/2"), ("3/4", 1))

    @pytest.mark.parametrize("n", [1, 2, 5, 16, 64])
    def test_never_merges(self, n):
        assert len(disjoint_union_witness(n)) == n

    def test_bad_size(self):
        with pytest.raises(BadParameter):
            disjoint_union_witness(0)


class TestRelativeFrequency:
    def test_constant_predicates(self):
        seq = van_der_corput(16)
        assert relative_frequency(lambda x: True, seq, 7) == 1
        assert relative_frequency(lambda x: False, seq, 7) == 0

    def test_van_der_corput_balance(self):
        seq = van_der_corput(64)
        assert relative_frequency(lambda x: x < F(1, 2), seq, 64) == F(1, 2)

    def test_additive_in_disjoint_predicates(self):
        seq = van_der_corput(32)
        left = lambda x: x < F(1, 4)
        right = lambda x: F(1, 4) <= x < F(1, 2)
        both = lambda x: x < F(1, 2)
        for n in (1, 7, 32):
            assert relative_frequency(both, seq, n) == relative_frequency(
                left, seq, n
            ) + relative_frequency(right, seq, n)

    def test_bad_index(self):
        seq = van_der_corput(8)
        with pytest.raises(BadIndex):
            relative_frequency(lambda x: True, seq, 0)
        with pytest.raises(BadIndex):
            relative_frequency(lambda x: True, seq, 9)
