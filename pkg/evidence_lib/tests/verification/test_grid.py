"""
Tests for the exhaustive simplex grid over 2-element frames.
"""

import math

import numpy as np
import pytest
from pydantic import ValidationError

from evidence_lib.entropy import Measure, tfb_entropy
from evidence_lib.model import MassFunction, StepInvalidError, default_frame
from evidence_lib.verification import GridSpec, grid_divisions, grid_search_max, simplex_grid
from evidence_lib.volume import hoivmf_value, max_theta_mass


class TestGridSpec:
    @pytest.mark.parametrize("step, divisions", [(0.01, 100), (0.5, 2), (0.05, 20), (0.125, 8)])
    def test_divisions(self, step, divisions):
        assert grid_divisions(step) == divisions

    @pytest.mark.parametrize("step", [0.0, -0.1, 1.0, 0.03, 0.3])
    def test_invalid_step(self, step):
        with pytest.raises(StepInvalidError):
            GridSpec(step=step, k=1)

    def test_needs_pair_frame(self):
        with pytest.raises(ValidationError):
            GridSpec(frame=default_frame(3), k=1)

    def test_tfb_needs_order(self):
        with pytest.raises(ValidationError):
            GridSpec(measure=Measure.TFB)


class TestSimplexGrid:
    def test_points(self):
        points = simplex_grid(4)
        assert points.shape == (15, 3)
        assert np.allclose(points.sum(axis=1), 1.0)
        assert points[:5, 0].tolist() == [0.0] * 5
        assert points[:5, 1].tolist() == [0.0, 0.25, 0.5, 0.75, 1.0]
        assert points[-1].tolist() == [1.0, 0.0, 0.0]


class TestGridSearchMax:
    def test_deng_maximum(self):
        """k = 1: log2 5 at (0.2, 0.2)."""
        result = grid_search_max(GridSpec(step=0.01, k=1))
        assert result.max_value == pytest.approx(math.log2(5), abs=1e-12)
        x, y, z = result.argmax_point
        assert (x, y) == pytest.approx((0.2, 0.2))
        assert result.argmax.mass(0b11) == pytest.approx(0.6)

    def test_order3_argmax(self):
        result = grid_search_max(GridSpec(step=0.01, k=3))
        assert abs(result.argmax_point[2] - 7 / 9) <= 0.01

    def test_shannon_on_three_outcomes(self):
        result = grid_search_max(GridSpec(step=0.01, measure=Measure.SHANNON))
        assert result.max_value == pytest.approx(math.log2(3), abs=1e-3)
        x, y, _ = result.argmax_point
        assert abs(x - 1 / 3) <= 0.01 + 1e-12
        assert abs(y - 1 / 3) <= 0.01 + 1e-12

    def test_maximality(self):
        """Grid max <= volume; argmax m(AB) within 0.02 of (2k+1)/(2k+3) for k = 1..9."""
        for k in range(1, 10):
            result = grid_search_max(GridSpec(step=0.01, k=k))
            assert result.max_value <= hoivmf_value(2, k) + 1e-12
            assert abs(result.argmax_point[2] - (2 * k + 1) / (2 * k + 3)) <= 0.02
            assert max_theta_mass(2, k) == pytest.approx((2 * k + 1) / (2 * k + 3))

    def test_surface_rows(self):
        result = grid_search_max(GridSpec(step=0.1, k=2))
        rows = list(result.rows())
        assert len(rows) == 66
        assert rows[0][:3] == (0.0, 0.0, 1.0)
        assert rows[0][3] == pytest.approx(math.log2(5))
        assert result.max_value == max(row[3] for row in rows)
        x, y, z, value = rows[17]
        m = MassFunction(frame=result.spec.frame, masses={1: x, 2: y, 3: z})
        assert value == pytest.approx(tfb_entropy(m, 2))

    @pytest.mark.parametrize("measure, k", [(Measure.TFB, 4), (Measure.DENG, None), (Measure.FB, None)])
    def test_symmetric_surface(self, measure, k):
        result = grid_search_max(GridSpec(step=0.05, measure=measure, k=k))
        for i in range(21):
            for j in range(21 - i):
                x, y = i / 20, j / 20
                assert result.value_at(x, y) == pytest.approx(result.value_at(y, x), abs=1e-12)

