"""
Explicit split trees.

Each round replaces every multi-element leaf by all of its nonempty subsets
(singletons persist), and the original mass of each focal element is spread
uniformly over the leaves it has produced so far. Leaves on the same subset
coming from different rounds or origins are separate terms: they are never
merged.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Tuple

import numpy as np

from evidence_lib.model import (
    Frame,
    InvalidOrderError,
    LeafCountOverflowError,
    MassFunction,
    TreeTooLargeError,
)
from evidence_lib.model.frame import iter_submasks

from .leaf_count import leaf_count

logger = logging.getLogger(__name__)

DEFAULT_MAX_LEAVES = 10**7


@dataclass(frozen=True)
class LeafTerm:
    """
    One (subset, mass) term of a split round.

    Attributes:
        subset: Bitmask of the leaf's subset
        mass: Mass carried by this term
        origin: Bitmask of the original focal element it was split from
    """

    subset: int
    mass: float
    origin: int


@dataclass
class LeafMultiset:
    """Non-additive multiset of leaf terms produced by one split round."""

    terms: List[LeafTerm] = field(default_factory=list)
    round: int = 0

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[LeafTerm]:
        return iter(self.terms)

    def masses(self) -> np.ndarray:
        return np.fromiter((t.mass for t in self.terms), dtype=float, count=len(self.terms))

    @property
    def total(self) -> float:
        return float(self.masses().sum())

    def counts_by_origin(self) -> Dict[int, int]:
        """Number of terms per origin bitmask, origins ascending."""
        counts: Dict[int, int] = {}
        for term in self.terms:
            counts[term.origin] = counts.get(term.origin, 0) + 1
        return dict(sorted(counts.items()))

    def mass_by_origin(self) -> Dict[int, float]:
        totals: Dict[int, float] = {}
        for term in self.terms:
            totals[term.origin] = totals.get(term.origin, 0.0) + term.mass
        return dict(sorted(totals.items()))

    def rows(self, frame: Frame) -> Iterator[Tuple[str, str, int, float]]:
        """(origin, subset, round, mass) rows with subsets as comma-joined labels."""
        for term in self.terms:
            yield (
                frame.format_subset(term.origin),
                frame.format_subset(term.subset),
                self.round,
                term.mass,
            )


@dataclass
class SplitTree:
    """Root BPA terms plus the leaf multiset of every split round 1..k."""

    frame: Frame
    root_terms: List[Tuple[int, float]]
    rounds: List[LeafMultiset]
    order: int

    @property
    def leaves(self) -> LeafMultiset:
        """Leaves of the last round."""
        return self.rounds[-1]


def _split_once(subsets: List[int]) -> List[int]:
    out: List[int] = []
    for s in subsets:
        if s & (s - 1) == 0:
            out.append(s)
        else:
            out.extend(iter_submasks(s))
    return out


def expected_leaves(m: MassFunction, k: int) -> int:
    """Total round-k leaf count of ``m`` from the closed form."""
    return sum(leaf_count(bits.bit_count(), k) for bits, _ in m.positive_items())


def build_split_tree(
    m: MassFunction, k: int, max_leaves: int = DEFAULT_MAX_LEAVES, keep_rounds: bool = True
) -> SplitTree:
    """
    Split every positive focal element of ``m`` for ``k`` rounds.

    Args:
        m: Valid mass function
        k: Number of split rounds (>= 1)
        max_leaves: Guard on the round-k leaf count
        keep_rounds: Keep every round; otherwise only round k is stored

    Raises:
        InvalidOrderError: k < 1
        TreeTooLargeError: the round-k leaf count exceeds ``max_leaves``
    """
    if k < 1:
        raise InvalidOrderError(k)
    try:
        total = expected_leaves(m, k)
    except LeafCountOverflowError:
        raise TreeTooLargeError(1 << 63, max_leaves) from None
    if total > max_leaves:
        raise TreeTooLargeError(total, max_leaves)
    logger.debug("Building %d-round split tree with %d leaves", k, total)

    root = m.positive_items()
    rounds = [LeafMultiset(round=r) for r in range(1, k + 1)] if keep_rounds else []
    final = LeafMultiset(round=k)

    for origin, weight in root:
        current = [origin]
        for r in range(1, k + 1):
            current = _split_once(current)
            if keep_rounds or r == k:
                share = weight / len(current)
                target = rounds[r - 1] if keep_rounds else final
                target.terms.extend(LeafTerm(s, share, origin) for s in current)

    return SplitTree(
        frame=m.frame,
        root_terms=root,
        rounds=rounds if keep_rounds else [final],
        order=k,
    )


def split_tree_entropy(m: MassFunction, k: int, max_leaves: int = DEFAULT_MAX_LEAVES) -> float:
    """
    Shannon entropy of the round-k leaf masses read as one flat distribution.

    Independent of the closed-form TFB entropy; used as its oracle.
    """
    leaves = build_split_tree(m, k, max_leaves, keep_rounds=False).leaves.masses()
    leaves = leaves[leaves > 0.0]
    return float(0.0 - (leaves * np.log2(leaves)).sum())


def deng_split_masses(m: MassFunction) -> LeafMultiset:
    """The one-round split whose Shannon entropy is the Deng entropy of ``m``."""
    return build_split_tree(m, 1).leaves
