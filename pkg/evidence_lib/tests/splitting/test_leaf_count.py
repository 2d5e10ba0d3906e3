"""
Tests for split-tree leaf counts.
"""

import math

import pytest

from evidence_lib.model import InvalidOrderError, LeafCountOverflowError
from evidence_lib.splitting import leaf_count, log2_leaf_count, simulated_leaf_count
from evidence_lib.splitting.leaf_count import log2_power_difference


class TestLeafCount:
    @pytest.mark.parametrize("a, k, expected", [(2, 1, 3), (2, 3, 7), (3, 2, 19), (1, 9, 1)])
    def test_known_counts(self, a, k, expected):
        assert leaf_count(a, k) == expected

    def test_closed_form_matches_simulation(self):
        """(k+1)^a - k^a equals the replayed split for a, k <= 6."""
        for a in range(1, 7):
            for k in range(1, 7):
                assert leaf_count(a, k) == simulated_leaf_count(a, k)

    def test_zero_rounds(self):
        assert simulated_leaf_count(5, 0) == 1

    def test_invalid_order(self):
        with pytest.raises(InvalidOrderError):
            leaf_count(2, 0)

    def test_overflow(self):
        with pytest.raises(LeafCountOverflowError):
            leaf_count(64, 2)


class TestLog2LeafCount:
    def test_exact_path(self):
        assert log2_leaf_count(4, 3) == math.log2(175)

    def test_log_domain_matches_exact(self):
        """The log1p/expm1 branch agrees with big-integer arithmetic."""
        for base, exponent in [(3, 60), (11, 40), (101, 20), (1001, 64)]:
            exact = math.log2(base**exponent - (base - 1) ** exponent)
            assert log2_power_difference(base, exponent) == pytest.approx(exact, rel=1e-12)

    def test_huge_order(self):
        value = log2_leaf_count(2, 10**9)
        assert value == pytest.approx(math.log2(2 * 10**9 + 1), rel=1e-12)

    def test_invalid(self):
        with pytest.raises(ValueError):
            log2_power_difference(1, 3)
