"""
Recursive power-set splitting: leaf counts, explicit split trees and the
iterative proportional-split information volume.
"""

from .deng_volume import DengVolumeTrace, deng_volume
from .leaf_count import leaf_count, log2_leaf_count, simulated_leaf_count
from .split_tree import (
    LeafMultiset,
    LeafTerm,
    SplitTree,
    build_split_tree,
    deng_split_masses,
    split_tree_entropy,
)

__all__ = [
    "leaf_count",
    "log2_leaf_count",
    "simulated_leaf_count",
    "LeafTerm",
    "LeafMultiset",
    "SplitTree",
    "build_split_tree",
    "split_tree_entropy",
    "deng_split_masses",
    "deng_volume",
    "DengVolumeTrace",
]
