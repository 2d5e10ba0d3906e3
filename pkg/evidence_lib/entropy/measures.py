"""
Closed-form entropy measures over mass functions.

All logarithms are base 2 and 0*log 0 = 0. The k-order time-fractal-based
(TFB) entropy

    E_TFB^k = -sum_F m(F) log2( m(F) / ((k+1)^|F| - k^|F|) )

covers Deng entropy (k = 1) and reduces to Shannon entropy on Bayesian
BPAs. FB entropy is the Shannon entropy of the fractal transform m_F.

Each measure has a scalar form over a MassFunction and a row form over a
matrix of masses (one BPA per row, columns in ascending subset-bitmask
order) used by the grid and sampling oracles. Both share the same kernel.
"""

import logging
import math
from enum import Enum
from functools import lru_cache
from typing import Dict, Optional, Sequence

import numpy as np
from pydantic import BaseModel, Field, model_validator

from evidence_lib.generator.bpa_generator import bpa_digest
from evidence_lib.model import (
    Frame,
    FrameTooLargeError,
    InvalidDistributionError,
    InvalidOrderError,
    MassFunction,
)
from evidence_lib.model.frame import iter_submasks
from evidence_lib.splitting.leaf_count import log2_leaf_count

logger = logging.getLogger(__name__)

DISTRIBUTION_TOLERANCE = 1e-9
MAX_ENUMERATED_ELEMENTS = 20
MAX_DENSE_ELEMENTS = 10


class Measure(str, Enum):
    """Entropy measures provided by this module."""

    SHANNON = "shannon"
    DENG = "deng"
    FB = "fb"
    TFB = "tfb"


class EntropyReport(BaseModel):
    """One measure value (bits) for one BPA."""

    model_config = {"frozen": True}

    measure: Measure
    value: float = Field(..., description="Entropy in bits")
    k: Optional[int] = Field(default=None, ge=1, description="TFB order")
    bpa_digest: str = Field(..., description="SHA-256 of the canonical BPA document")

    @model_validator(mode="after")
    def check_order(self) -> "EntropyReport":
        if (self.k is not None) != (self.measure == Measure.TFB):
            raise ValueError("k must be given for TFB and only for TFB")
        if self.value < -1e-12:
            raise ValueError(f"Entropy cannot be negative, got {self.value}")
        return self


class FractalMass(BaseModel):
    """
    Fractal transform m_F of a BPA: the BPA re-expressed on all 2^n - 1 subsets.

    Every value is >= 0 and they sum to the BPA's total mass.
    """

    model_config = {"frozen": True}

    frame: Frame
    values: Dict[int, float] = Field(..., description="Bitmask -> m_F")

    def value(self, bits: int) -> float:
        return self.values.get(bits, 0.0)

    @property
    def total(self) -> float:
        return math.fsum(self.values.values())


# --- Kernels ---


def _split_entropy(masses: np.ndarray, log2_denominators: np.ndarray) -> np.ndarray:
    """-sum m * (log2 m - log2 d) over the last axis, zero masses contributing 0."""
    positive = masses > 0.0
    logs = np.log2(np.where(positive, masses, 1.0))
    terms = np.where(positive, masses * (logs - log2_denominators), 0.0)
    return 0.0 - terms.sum(axis=-1)


@lru_cache(maxsize=None)
def subset_cardinalities(n: int) -> np.ndarray:
    """Cardinality of every nonempty subset of an n-element frame, ascending bitmask."""
    _check_enumerable(n)
    masks = np.arange(1, 1 << n, dtype=np.int64)
    cards = np.zeros_like(masks)
    for i in range(n):
        cards += (masks >> i) & 1
    cards.setflags(write=False)
    return cards


@lru_cache(maxsize=None)
def _log2_denominators(n: int, k: int) -> np.ndarray:
    table = np.array([log2_leaf_count(a, k) for a in range(1, n + 1)])
    out = table[subset_cardinalities(n) - 1]
    out.setflags(write=False)
    return out


@lru_cache(maxsize=None)
def fractal_matrix(n: int) -> np.ndarray:
    """T with m_F = m @ T: T[g, f] = 1 / (2^|g| - 1) whenever f is a subset of g."""
    if n > MAX_DENSE_ELEMENTS:
        raise FrameTooLargeError(n, MAX_DENSE_ELEMENTS)
    size = (1 << n) - 1
    matrix = np.zeros((size, size))
    for g in range(1, size + 1):
        share = 1.0 / ((1 << g.bit_count()) - 1)
        for f in iter_submasks(g):
            matrix[g - 1, f - 1] = share
    matrix.setflags(write=False)
    return matrix


def _check_enumerable(n: int) -> None:
    if n > MAX_ENUMERATED_ELEMENTS:
        raise FrameTooLargeError(n, MAX_ENUMERATED_ELEMENTS)


def _check_order(k: int) -> None:
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)) or k < 1:
        raise InvalidOrderError(k)


# --- Scalar measures ---


def shannon(p: Sequence[float]) -> float:
    """
    Shannon entropy -sum p_i log2 p_i of a probability vector.

    Raises:
        InvalidDistributionError: negative entry or sum not within 1e-9 of 1
    """
    probs = np.asarray(p, dtype=float)
    if probs.ndim != 1 or probs.size == 0:
        raise InvalidDistributionError("Expected a nonempty 1-D probability vector")
    if np.any(probs < 0.0) or not np.all(np.isfinite(probs)):
        raise InvalidDistributionError(f"Probabilities must be finite and >= 0: {list(p)}")
    total = math.fsum(probs)
    if abs(total - 1.0) > DISTRIBUTION_TOLERANCE:
        raise InvalidDistributionError(f"Probabilities sum to {total}, expected 1")
    return float(_split_entropy(probs, np.zeros_like(probs)))


def focal_shannon(m: MassFunction) -> float:
    """
    Shannon entropy of the positive focal masses read as a flat distribution.

    The masses are taken as they are; their sum was already checked against
    the tolerance the BPA was validated with.
    """
    masses = np.array([value for _, value in m.positive_items()], dtype=float)
    return float(_split_entropy(masses, np.zeros_like(masses)))


def fractal_transform(m: MassFunction) -> FractalMass:
    """
    m_F(F) = sum over supersets G of F (G = F included) of m(G) / (2^|G| - 1).

    Defined on all 2^n - 1 subsets; zero where nothing redistributes.
    """
    _check_enumerable(m.frame.n)
    values = {bits: 0.0 for bits in range(1, m.frame.full_mask + 1)}
    for g, weight in m.positive_items():
        share = weight / ((1 << g.bit_count()) - 1)
        for f in iter_submasks(g):
            values[f] += share
    return FractalMass(frame=m.frame, values=values)


def fb_entropy(m: MassFunction) -> float:
    """FB entropy: Shannon entropy of the fractal transform over all subsets."""
    fractal = fractal_transform(m)
    masses = np.array([fractal.values[bits] for bits in sorted(fractal.values)])
    return float(_split_entropy(masses, np.zeros_like(masses)))


def tfb_entropy(m: MassFunction, k: int) -> float:
    """
    k-order TFB entropy; the denominator N_k(|F|) = (k+1)^|F| - k^|F| is the
    split-tree leaf count, taken in the log domain once it passes 63 bits.

    Raises:
        InvalidOrderError: k < 1
    """
    _check_order(k)
    items = m.positive_items()
    if not items:
        return 0.0
    masses = np.array([value for _, value in items])
    log2_denoms = np.array([log2_leaf_count(bits.bit_count(), int(k)) for bits, _ in items])
    return float(_split_entropy(masses, log2_denoms))


def deng_entropy(m: MassFunction) -> float:
    """Deng entropy -sum m(F) log2(m(F) / (2^|F| - 1)), i.e. the 1-order TFB entropy."""
    return tfb_entropy(m, 1)


def tfb_vacuous(n: int, k: int) -> float:
    """TFB entropy of the vacuous BPA m(Theta) = 1: log2((k+1)^n - k^n)."""
    _check_order(k)
    if n < 1:
        raise ValueError(f"Frame cardinality must be >= 1, got {n}")
    return log2_leaf_count(n, k)


def max_fb_entropy(n: int) -> float:
    """Upper bound of FB entropy on an n-element frame, log2(2^n - 1)."""
    return log2_leaf_count(n, 1)


def measure_value(m: MassFunction, measure: Measure, k: Optional[int] = None) -> float:
    """Dispatch to the scalar measure; ``k`` is required for TFB."""
    measure = Measure(measure)
    if measure == Measure.SHANNON:
        return focal_shannon(m)
    if measure == Measure.DENG:
        return deng_entropy(m)
    if measure == Measure.FB:
        return fb_entropy(m)
    if k is None:
        raise InvalidOrderError(0)
    return tfb_entropy(m, k)


def entropy_report(m: MassFunction, measure: Measure, k: Optional[int] = None) -> EntropyReport:
    """Evaluate ``measure`` on ``m`` and wrap it with the BPA digest."""
    measure = Measure(measure)
    value = measure_value(m, measure, k)
    logger.debug("%s(k=%s) = %.12g", measure.value, k, value)
    return EntropyReport(
        measure=measure,
        value=value,
        k=k if measure == Measure.TFB else None,
        bpa_digest=bpa_digest(m),
    )


# --- Row measures (one BPA per row, columns = subsets in ascending bitmask order) ---


def shannon_rows(masses: np.ndarray) -> np.ndarray:
    masses = np.asarray(masses, dtype=float)
    return _split_entropy(masses, np.zeros(masses.shape[-1]))


def tfb_rows(masses: np.ndarray, n: int, k: int) -> np.ndarray:
    _check_order(k)
    return _split_entropy(np.asarray(masses, dtype=float), _log2_denominators(n, int(k)))


def deng_rows(masses: np.ndarray, n: int) -> np.ndarray:
    return tfb_rows(masses, n, 1)


def fb_rows(masses: np.ndarray, n: int) -> np.ndarray:
    fractal = np.asarray(masses, dtype=float) @ fractal_matrix(n)
    return shannon_rows(fractal)


def measure_rows(masses: np.ndarray, n: int, measure: Measure, k: Optional[int] = None) -> np.ndarray:
    """Row-wise dispatch matching ``measure_value``."""
    measure = Measure(measure)
    if measure == Measure.SHANNON:
        return shannon_rows(masses)
    if measure == Measure.DENG:
        return deng_rows(masses, n)
    if measure == Measure.FB:
        return fb_rows(masses, n)
    if k is None:
        raise InvalidOrderError(0)
    return tfb_rows(masses, n, k)
