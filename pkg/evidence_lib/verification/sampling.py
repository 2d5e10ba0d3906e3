"""
Random BPAs on the probability simplex.

Masses are drawn with the exponential-normalization scheme: i.i.d.
standard exponentials divided by their sum are uniform on the simplex
(Dirichlet(1, ..., 1)). Every draw is deterministic per seed.
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from evidence_lib.entropy.measures import Measure, measure_rows
from evidence_lib.model import Frame, FrameTooLargeError, MassFunction

logger = logging.getLogger(__name__)

MAX_SAMPLED_ELEMENTS = 16
CHUNK_ROWS = 10_000


def _check_frame(frame: Frame) -> None:
    if frame.n > MAX_SAMPLED_ELEMENTS:
        raise FrameTooLargeError(frame.n, MAX_SAMPLED_ELEMENTS)


def simplex_rows(rng: np.random.Generator, rows: int, columns: int) -> np.ndarray:
    """``rows`` uniform points of the (columns-1)-simplex."""
    draws = rng.standard_exponential((rows, columns))
    return draws / draws.sum(axis=1, keepdims=True)


def random_bpa(frame: Frame, seed: int) -> MassFunction:
    """BPA with mass drawn over all 2^n - 1 subsets, flat on the simplex."""
    _check_frame(frame)
    rng = np.random.default_rng(seed)
    row = simplex_rows(rng, 1, frame.full_mask)[0]
    masses = {bits: float(row[bits - 1]) for bits in range(1, frame.full_mask + 1)}
    return MassFunction(frame=frame, masses=masses)


def random_bayesian_bpa(frame: Frame, seed: int) -> MassFunction:
    """BPA with mass on singletons only, flat on the simplex."""
    _check_frame(frame)
    rng = np.random.default_rng(seed)
    row = simplex_rows(rng, 1, frame.n)[0]
    return MassFunction.bayesian(frame, [float(p) for p in row])


@dataclass
class SampleResult:
    """Best BPA found by random sampling."""

    best: MassFunction
    best_value: float
    samples: int


def sample_search_max(
    frame: Frame,
    k: Optional[int] = None,
    samples: int = 100_000,
    seed: int = 0,
    measure: Measure = Measure.TFB,
) -> SampleResult:
    """
    Largest measure value over ``samples`` random BPAs on ``frame``.

    Falsification oracle for frames too large for an exhaustive grid: the
    result must never exceed the closed-form maximum.
    """
    _check_frame(frame)
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    rng = np.random.default_rng(seed)
    columns = frame.full_mask
    best_value = -np.inf
    best_row = np.empty(0)
    remaining = samples
    while remaining > 0:
        rows = min(CHUNK_ROWS, remaining)
        masses = simplex_rows(rng, rows, columns)
        values = measure_rows(masses, frame.n, measure, k)
        index = int(np.argmax(values))
        if values[index] > best_value:
            best_value = float(values[index])
            best_row = masses[index]
        remaining -= rows
    logger.debug("Sampled %d BPAs on %s, best %s = %.12g", samples, frame, measure, best_value)
    best = MassFunction(
        frame=frame, masses={bits: float(best_row[bits - 1]) for bits in range(1, columns + 1)}
    )
    return SampleResult(best=best, best_value=best_value, samples=samples)
