"""
Exhaustive simplex grid over 2-element frames.

Sweeps m(A) = x, m(B) = y, m(AB) = 1 - x - y over x + y <= 1 in steps of h,
evaluates one measure at every point and reports the surface and its
argmax. Rows are in row-major (x, then y) order and ties resolve to the
lexicographically smallest (x, y).
"""

import logging
from dataclasses import dataclass
from typing import Iterator, Optional, Tuple

import numpy as np
from pydantic import BaseModel, Field, model_validator

from evidence_lib.entropy.measures import Measure, measure_rows
from evidence_lib.model import Frame, MassFunction, StepInvalidError, default_frame

logger = logging.getLogger(__name__)

STEP_TOLERANCE = 1e-12


def grid_divisions(step: float) -> int:
    """Number of grid intervals 1/step, or StepInvalidError if step does not divide 1."""
    if not 0.0 < step < 1.0:
        raise StepInvalidError(step)
    divisions = round(1.0 / step)
    if abs(divisions * step - 1.0) > STEP_TOLERANCE:
        raise StepInvalidError(step)
    return divisions


class GridSpec(BaseModel):
    """Grid sweep definition."""

    model_config = {"frozen": True}

    frame: Frame = Field(default_factory=lambda: default_frame(2))
    step: float = Field(default=0.01, description="Grid spacing h, must divide 1")
    measure: Measure = Field(default=Measure.TFB)
    k: Optional[int] = Field(default=None, ge=1, description="TFB order")

    @model_validator(mode="after")
    def check_spec(self) -> "GridSpec":
        if self.frame.n != 2:
            raise ValueError(f"Exhaustive grid needs a 2-element frame, got {self.frame.n}")
        grid_divisions(self.step)
        if self.measure == Measure.TFB and self.k is None:
            raise ValueError("TFB grid needs an order k")
        return self

    @property
    def divisions(self) -> int:
        return grid_divisions(self.step)


@dataclass
class GridResult:
    """Surface of one grid sweep and its maximum."""

    spec: GridSpec
    coordinates: np.ndarray  # (points, 3): m(A), m(B), m(AB)
    values: np.ndarray  # (points,)
    argmax: MassFunction
    max_value: float

    @property
    def argmax_point(self) -> Tuple[float, float, float]:
        index = int(np.argmax(self.values))
        x, y, z = self.coordinates[index]
        return float(x), float(y), float(z)

    def rows(self) -> Iterator[Tuple[float, float, float, float]]:
        """(mA, mB, mAB, value) rows in row-major order."""
        for (x, y, z), value in zip(self.coordinates, self.values):
            yield float(x), float(y), float(z), float(value)

    def value_at(self, x: float, y: float) -> float:
        divisions = self.spec.divisions
        i, j = round(x * divisions), round(y * divisions)
        # row-major offset of (i, j) in the triangular grid
        offset = i * (divisions + 1) - i * (i - 1) // 2 + j
        return float(self.values[offset])


def simplex_grid(divisions: int) -> np.ndarray:
    """Row-major (i, then j) points (i/d, j/d, (d-i-j)/d) with i + j <= d."""
    i_idx = np.concatenate([np.full(divisions + 1 - a, a) for a in range(divisions + 1)])
    j_idx = np.concatenate([np.arange(divisions + 1 - a) for a in range(divisions + 1)])
    k_idx = divisions - i_idx - j_idx
    return np.stack([i_idx, j_idx, k_idx], axis=1) / divisions


def grid_search_max(spec: GridSpec) -> GridResult:
    """
    Evaluate ``spec.measure`` at every grid point.

    Returns:
        GridResult with the full surface and the first (lexicographically
        smallest) maximizing point
    """
    coordinates = simplex_grid(spec.divisions)
    values = measure_rows(coordinates, spec.frame.n, spec.measure, spec.k)
    index = int(np.argmax(values))
    x, y, z = (float(c) for c in coordinates[index])
    argmax = MassFunction(frame=spec.frame, masses={1: x, 2: y, 3: z})
    logger.debug(
        "Grid %s k=%s step=%g: max %.12g at (%g, %g)",
        spec.measure.value,
        spec.k,
        spec.step,
        values[index],
        x,
        y,
    )
    return GridResult(
        spec=spec,
        coordinates=coordinates,
        values=values,
        argmax=argmax,
        max_value=float(values[index]),
    )
