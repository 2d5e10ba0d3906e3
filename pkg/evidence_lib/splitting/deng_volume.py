"""
Iterative information volume of a mass function by proportional splitting.

Iteration 1 is the Deng entropy of the BPA. Each further iteration replaces
every multi-element leaf (S, w) by the terms (T, w * (2^|T| - 1) / (3^|S| - 2^|S|))
for all nonempty T in S, i.e. the maximum-Deng-entropy proportions restricted
to the power set of S, while singleton leaves persist. The iteration value is
the Deng entropy of all leaf terms with repeated subsets kept apart. It stops
once the increase falls below epsilon or after max_iter iterations.
"""

import logging
import warnings
from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np

from evidence_lib.model import MassFunction, NonConvergenceWarning, TreeTooLargeError
from evidence_lib.model.frame import iter_submasks

from .split_tree import DEFAULT_MAX_LEAVES, LeafMultiset, LeafTerm

logger = logging.getLogger(__name__)

DEFAULT_EPSILON = 1e-6
DEFAULT_MAX_ITER = 100


@dataclass
class DengVolumeTrace:
    """Per-iteration values of the proportional split."""

    steps: List[Tuple[int, float]] = field(default_factory=list)
    converged: bool = False
    epsilon: float = DEFAULT_EPSILON
    max_iter: int = DEFAULT_MAX_ITER
    leaves: LeafMultiset = field(default_factory=LeafMultiset)

    @property
    def values(self) -> List[float]:
        return [value for _, value in self.steps]

    @property
    def final(self) -> float:
        """Value of the last iteration (the information volume)."""
        return self.steps[-1][1]

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)


def _deng_value(subsets: List[int], masses: List[float]) -> float:
    w = np.asarray(masses, dtype=float)
    cards = np.fromiter((s.bit_count() for s in subsets), dtype=float, count=len(subsets))
    positive = w > 0.0
    safe = np.where(positive, w, 1.0)
    terms = np.where(positive, w * (np.log2(safe) - np.log2(np.exp2(cards) - 1.0)), 0.0)
    return float(0.0 - terms.sum())


def deng_volume(
    m: MassFunction,
    epsilon: float = DEFAULT_EPSILON,
    max_iter: int = DEFAULT_MAX_ITER,
    max_leaves: int = DEFAULT_MAX_LEAVES,
) -> DengVolumeTrace:
    """
    Run the proportional split until the Deng entropy increase drops below ``epsilon``.

    Returns:
        DengVolumeTrace with the full (iteration, value) sequence

    Raises:
        TreeTooLargeError: an iteration would hold more than ``max_leaves`` terms

    Warns:
        NonConvergenceWarning: ``max_iter`` reached with increase still >= epsilon
    """
    if epsilon <= 0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    if max_iter < 1:
        raise ValueError(f"max_iter must be >= 1, got {max_iter}")

    subsets: List[int] = []
    masses: List[float] = []
    origins: List[int] = []
    for bits, weight in m.positive_items():
        subsets.append(bits)
        masses.append(weight)
        origins.append(bits)

    trace = DengVolumeTrace(epsilon=epsilon, max_iter=max_iter)
    previous = _deng_value(subsets, masses)
    trace.steps.append((1, previous))

    for iteration in range(2, max_iter + 1):
        if all(s & (s - 1) == 0 for s in subsets):
            trace.converged = True
            break
        # terms of the next round, counted before any are built
        total = sum((1 << s.bit_count()) - 1 for s in subsets)
        if total > max_leaves:
            raise TreeTooLargeError(total, max_leaves)
        next_subsets: List[int] = []
        next_masses: List[float] = []
        next_origins: List[int] = []
        for s, w, o in zip(subsets, masses, origins):
            if s & (s - 1) == 0:
                next_subsets.append(s)
                next_masses.append(w)
                next_origins.append(o)
                continue
            size = s.bit_count()
            denom = 3**size - 2**size
            for t in iter_submasks(s):
                next_subsets.append(t)
                next_masses.append(w * ((1 << t.bit_count()) - 1) / denom)
                next_origins.append(o)
        subsets, masses, origins = next_subsets, next_masses, next_origins

        value = _deng_value(subsets, masses)
        trace.steps.append((iteration, value))
        increase = value - previous
        previous = value
        logger.debug("Deng volume iteration %d: %.12g (+%.3g)", iteration, value, increase)
        if increase < epsilon:
            trace.converged = True
            break
    else:
        trace.converged = all(s & (s - 1) == 0 for s in subsets)

    trace.leaves = LeafMultiset(
        terms=[LeafTerm(s, w, o) for s, w, o in zip(subsets, masses, origins)],
        round=trace.steps[-1][0],
    )
    if not trace.converged:
        warnings.warn(
            f"Deng volume did not converge within {max_iter} iterations "
            f"(last value {trace.final:.6g}, epsilon {epsilon:g})",
            NonConvergenceWarning,
            stacklevel=2,
        )
    return trace
