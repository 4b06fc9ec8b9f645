#!/usr/bin/env python3
"""
Test weight-class counts, period bounds and construction period formulas.
"""

import sys
from fractions import Fraction
from math import comb
from pathlib import Path

import pytest

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.enumeration import (
    CountTable,
    construction2_period,
    construction3_period,
    construction3_weight,
    gap_ratio,
    k_count,
    nos_bound,
    os2_max_period,
    os3_period_lower_bound,
    os_n_period_lower_bound,
    polynomial_coefficient,
    r_count,
    simple_nos_bound,
    tower_seed_period_m2,
    tower_seed_period_m3,
)
from src.errors import SequenceError
from src.models import CountKind, CountPredicate, HalfInt, Method
from src.oracle import exhaustive_count

# rows n = 2..7, columns q = 2..5
BOUND_TABLE = {
    2: [0, 3, 5, 10],
    3: [1, 11, 27, 58],
    4: [5, 35, 119, 298],
    5: [11, 113, 495, 1538],
    6: [27, 347, 2015, 7738],
    7: [55, 1067, 8127, 38938],
}


class TestBounds:
    @pytest.mark.parametrize("n", sorted(BOUND_TABLE))
    def test_bound_table(self, n):
        assert [nos_bound(q, n) for q in range(2, 6)] == BOUND_TABLE[n]

    @pytest.mark.parametrize("q", range(3, 9))
    def test_order_two_simplifies(self, q):
        expected = (q * q - q) // 2 - (1 if q % 2 == 0 else 0)
        assert nos_bound(q, 2) == expected

    @pytest.mark.parametrize("q", range(2, 7))
    @pytest.mark.parametrize("n", range(2, 6))
    def test_bound_below_simple_bound(self, q, n):
        assert nos_bound(q, n) <= simple_nos_bound(q, n)

    def test_os2(self):
        assert os2_max_period(5) == 10
        assert os2_max_period(6) == 12
        with pytest.raises(SequenceError):
            os2_max_period(2)

    def test_order_one_rejected(self):
        with pytest.raises(SequenceError):
            nos_bound(3, 1)


class TestCounts:
    def test_worked_values(self):
        assert r_count(3, 3, 4.5) == 7
        assert r_count(3, 3, "4.5") == 7
        assert r_count(3, 3, HalfInt(doubled=9)) == 7
        assert k_count(4, 3, 6) == 7

    def test_off_grid_for_even_q(self):
        with pytest.raises(SequenceError):
            r_count(4, 3, 4.5)
        with pytest.raises(SequenceError):
            r_count(3, 3, "4.25")

    @pytest.mark.parametrize("n", range(1, 6))
    def test_q3_trinomial(self, n):
        for doubled, count in CountTable(CountKind.PSEUDOWEIGHT_R, 3).row(n).items():
            assert count == polynomial_coefficient(2, doubled - 2 * n, n)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_q4_binomial(self, n):
        for s in range(n, 3 * n + 1):
            assert r_count(4, n, s) == comb(2 * n, s - n)

    @pytest.mark.parametrize("q", range(3, 9))
    def test_zero_free_pairs(self, q):
        for i in range(2, 2 * q - 1):
            assert k_count(q, 2, i) == q - 1 - abs(q - i)

    @pytest.mark.parametrize("q", [4, 6, 8, 10])
    def test_zero_free_central_triples(self, q):
        assert k_count(q, 3, 3 * q // 2) == (3 * q * q - 6 * q + 4) // 4

    @pytest.mark.parametrize("q", range(2, 6))
    @pytest.mark.parametrize("n", range(1, 6))
    def test_counts_match_scan(self, q, n):
        cap = q**n
        for doubled in range(0, 2 * n * q + 1):
            if q % 2 == 0 and doubled % 2:
                continue
            value = HalfInt(doubled=doubled)
            assert r_count(q, n, value) == exhaustive_count(q, n, CountPredicate.PSEUDOWEIGHT, value, cap=cap)
        for w in range(0, n * q):
            assert k_count(q, n, w) == exhaustive_count(q, n, CountPredicate.ZEROFREE_WEIGHT, w, cap=cap)

    @pytest.mark.parametrize("q", range(2, 7))
    @pytest.mark.parametrize("n", range(1, 7))
    def test_rows_sum_to_totals(self, q, n):
        assert sum(CountTable(CountKind.PSEUDOWEIGHT_R, q).row(n).values()) == q**n
        assert sum(CountTable(CountKind.ZEROFREE_K, q).row(n).values()) == (q - 1) ** n

    def test_entries_keyed_by_doubled_weight(self):
        table = CountTable(CountKind.ZEROFREE_K, 5)
        table.row(4)
        assert (4, 8) in table.entries

    @pytest.mark.parametrize("q", range(2, 7))
    @pytest.mark.parametrize("n", range(1, 7))
    def test_zero_free_counts_are_coefficients(self, q, n):
        for w in range(n, n * (q - 1) + 1):
            assert k_count(q, n, w) == polynomial_coefficient(q - 2, w - n, n)

    def test_polynomial_coefficient(self):
        assert polynomial_coefficient(2, 2, 2) == 3
        assert polynomial_coefficient(1, 3, 6) == 20
        assert polynomial_coefficient(2, 9, 2) == 0


class TestPseudoweightCountBounds:
    @pytest.mark.parametrize("q", range(2, 7))
    def test_order_two_centre(self, q):
        assert r_count(q, 2, q) == (q if q % 2 else q + 2)

    @pytest.mark.parametrize("q", [3, 5])
    def test_order_two_odd_off_centre(self, q):
        for doubled, count in CountTable(CountKind.PSEUDOWEIGHT_R, q).row(2).items():
            if doubled != 2 * q:
                assert count < q

    @pytest.mark.parametrize("q", [3, 5])
    @pytest.mark.parametrize("n", range(3, 7))
    def test_odd_rows_below_q_power(self, q, n):
        assert max(CountTable(CountKind.PSEUDOWEIGHT_R, q).row(n).values()) < q ** (n - 1)

    @pytest.mark.parametrize("q, n", [(4, 4), (4, 5), (4, 6), (6, 3), (6, 4), (6, 5), (6, 6)])
    def test_even_rows_bounded(self, q, n):
        assert max(CountTable(CountKind.PSEUDOWEIGHT_R, q).row(n).values()) <= q ** (n - 3) * (q * q + 2)

    def test_even_bound_fails_at_q4_n3(self):
        # the central class of Z_4 triples is C(6, 3) = 20, two above q^(n-3)(q^2+2)
        assert r_count(4, 3, 6) == 20 > 4**0 * (4 * 4 + 2)
        assert max(CountTable(CountKind.PSEUDOWEIGHT_R, 4).row(3).values()) == 20

    @pytest.mark.parametrize("n", range(3, 7))
    def test_even_bound_fails_for_binary(self, n):
        # every binary tuple has pseudoweight n
        assert r_count(2, n, n) == 2**n > 2 ** (n - 3) * 6


class TestConstructionPeriods:
    @pytest.mark.parametrize("q, n, expected", [(3, 2, 3), (3, 3, 10), (4, 3, 22)])
    def test_pseudoweight(self, q, n, expected):
        assert construction2_period(q, n) == expected

    @pytest.mark.parametrize("q, n, expected", [(3, 3, 4), (4, 2, 3), (4, 3, 10)])
    def test_zero_free(self, q, n, expected):
        assert construction3_period(q, n) == expected

    def test_zero_free_weight(self):
        assert construction3_weight(3, 3) == 5
        assert construction3_weight(4, 3) == 15
        assert construction3_weight(4, 2) == 4

    def test_binary_rejected(self):
        with pytest.raises(SequenceError, match="q=2"):
            construction2_period(2, 3)


class TestLowerBounds:
    def test_lifted_order_three(self):
        assert os3_period_lower_bound(3) == 6
        assert os3_period_lower_bound(4) == 16
        assert os3_period_lower_bound(5) == 45
        assert os3_period_lower_bound(6) == 72

    def test_lifted_order_n(self):
        assert os_n_period_lower_bound(3, 4) == 27
        assert os_n_period_lower_bound(4, 4) == 84

    def test_tower_seeds(self):
        assert tower_seed_period_m2(4) == 2
        assert tower_seed_period_m2(5) == 5
        assert tower_seed_period_m2(6) == 8
        assert tower_seed_period_m3(3) == 3
        assert tower_seed_period_m3(4) == 9


class TestGap:
    def test_gap_decreases_with_q(self):
        ratios = [gap_ratio(q, 3) for q in (5, 7, 9, 11)]
        assert all(a > b for a, b in zip(ratios, ratios[1:]))

    def test_gap_closed_form_for_odd_q(self):
        for q in (5, 7, 9, 11):
            assert gap_ratio(q, 3) == Fraction(3 * q * q - 5 * q + 2, q**3 - 2 * q + 1)

    def test_pseudoweight_gap(self):
        assert gap_ratio(4, 3, Method.NOS_PSEUDOWEIGHT) == Fraction(5, 27)

    def test_unknown_method(self):
        with pytest.raises(SequenceError):
            gap_ratio(4, 3, Method.OS2)
