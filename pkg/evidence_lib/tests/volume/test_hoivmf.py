"""
Tests for the higher-order information volume and its maximizing BPA.
"""

import math

import pytest
from pydantic import ValidationError

from evidence_lib.entropy import deng_entropy, tfb_entropy
from evidence_lib.model import FrameTooLargeError, InvalidOrderError, default_frame, validate
from evidence_lib.volume import (
    VolumeQuery,
    hoivmf_argument,
    hoivmf_value,
    hoivmf_via_binomial,
    max_deng_bpa,
    max_deng_entropy,
    max_tfb_bpa,
    max_tfb_bpa_for,
    max_theta_mass,
)

# Maximum TFB entropy table: log arguments for k = 1..4 (rows) x n = 2..5 (columns)
TABLE1 = {
    1: [5, 19, 65, 211],
    2: [7, 37, 175, 781],
    3: [9, 61, 369, 2101],
    4: [11, 91, 671, 4651],
}

# HOIVMF column of the information volume table, k = 1..14, as printed
TABLE2_HOIVMF = [
    2.3219, 2.8074, 3.1699, 3.4594, 3.7044, 3.9069, 4.0875,
    4.2479, 4.3923, 4.5236, 4.6439, 4.7549, 4.8580, 4.9542,
]  # fmt: skip
MISPRINTED_ORDER = 5


class TestHoivmfValue:
    @pytest.mark.parametrize("k", sorted(TABLE1))
    def test_table1_arguments(self, k):
        for n, expected in zip(range(2, 6), TABLE1[k]):
            assert hoivmf_argument(n, k) == expected
            assert VolumeQuery(n=n, k=k).argument == expected
            assert hoivmf_value(n, k) == pytest.approx(math.log2(expected), abs=1e-12)

    @pytest.mark.parametrize("k", range(1, 15))
    def test_table2_column(self, k):
        value = hoivmf_value(2, k)
        printed = TABLE2_HOIVMF[k - 1]
        if k == MISPRINTED_ORDER:
            # printed 3.7044, log2 13 = 3.7004
            assert abs(value - math.log2(13)) <= 5e-4
            assert abs(value - printed) == pytest.approx(0.0040, abs=1e-4)
        else:
            assert abs(value - printed) <= 5e-4

    def test_single_element_frame(self):
        assert hoivmf_value(1, 7) == 0.0
        assert hoivmf_via_binomial(1, 7) == 0.0

    def test_binomial_identity(self):
        for n in range(1, 21):
            for k in range(1, 51):
                assert abs(hoivmf_value(n, k) - hoivmf_via_binomial(n, k)) <= 1e-12

    def test_binomial_limit(self):
        with pytest.raises(FrameTooLargeError):
            hoivmf_via_binomial(31, 1)

    def test_monotone(self):
        for n in range(2, 8):
            values = [hoivmf_value(n, k) for k in range(1, 20)]
            assert all(b > a for a, b in zip(values, values[1:]))
        for k in range(1, 8):
            values = [hoivmf_value(n, k) for n in range(1, 20)]
            assert all(b > a for a, b in zip(values, values[1:]))

    def test_large_arguments(self):
        n, k = 1000, 10**6
        value = hoivmf_value(n, k)
        assert math.isfinite(value)
        assert value == pytest.approx(math.log2((k + 2) ** n - (k + 1) ** n), rel=1e-12)

    def test_invalid(self):
        with pytest.raises(InvalidOrderError):
            hoivmf_value(2, 0)
        with pytest.raises(ValueError):
            hoivmf_value(0, 1)
        with pytest.raises(ValidationError):
            VolumeQuery(n=2, k=0)


class TestMaxTfbBpa:
    def test_deng_maximizer(self):
        m = max_tfb_bpa(default_frame(2), 1)
        assert m.masses == pytest.approx({1: 0.2, 2: 0.2, 3: 0.6})

    def test_order3_max_ab_bpa(self):
        m = max_tfb_bpa_for(2, 3)
        assert m.masses == pytest.approx({1: 1 / 9, 2: 1 / 9, 3: 7 / 9})

    def test_achievement(self):
        """tfb(max_tfb_bpa(n, k), k) = hoivmf_value(n, k) for n in 2..5, k in 1..9."""
        for n in range(2, 6):
            for k in range(1, 10):
                m = max_tfb_bpa_for(n, k)
                assert validate(m).ok
                assert abs(tfb_entropy(m, k) - hoivmf_value(n, k)) <= 1e-10

    def test_theta_mass(self):
        for k in (1, 3, 10):
            assert max_theta_mass(2, k) == pytest.approx((2 * k + 1) / (2 * k + 3))
            assert max_tfb_bpa_for(2, k).mass(0b11) == pytest.approx(max_theta_mass(2, k))

    def test_theta_mass_limit(self):
        assert max_theta_mass(2, 10**6) > 0.999

    def test_frame_limit(self):
        with pytest.raises(FrameTooLargeError):
            max_tfb_bpa_for(21, 1)


class TestMaxDeng:
    def test_chain(self):
        """Order-1 volume = log2(3^n - 2^n) = maximum Deng entropy."""
        for n in range(1, 11):
            expected = math.log2(3**n - 2**n)
            assert hoivmf_value(n, 1) == pytest.approx(expected, abs=1e-12)
            assert max_deng_entropy(n) == pytest.approx(expected, abs=1e-12)
            assert deng_entropy(max_deng_bpa(default_frame(n))) == pytest.approx(
                expected, abs=1e-10
            )
