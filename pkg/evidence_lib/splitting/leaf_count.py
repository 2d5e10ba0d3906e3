"""
Leaf counts of the recursive power-set split.

After k split rounds a focal element of cardinality a has produced
N_k(a) = (k+1)^a - k^a leaves: singletons persist, and every multi-element
leaf is replaced by all of its nonempty subsets.
"""

import math
from functools import lru_cache

from evidence_lib.model import InvalidOrderError, LeafCountOverflowError

INT63_MAX = (1 << 63) - 1


def _check_args(a: int, k: int) -> None:
    if a < 1:
        raise ValueError(f"Cardinality must be >= 1, got {a}")
    if k < 1:
        raise InvalidOrderError(k)


def leaf_count(a: int, k: int) -> int:
    """
    Number of leaves a cardinality-``a`` focal element has after ``k`` rounds.

    Raises:
        InvalidOrderError: k < 1
        LeafCountOverflowError: the count exceeds 63 bits (use log2_leaf_count)
    """
    _check_args(a, k)
    count = (k + 1) ** a - k**a
    if count > INT63_MAX:
        raise LeafCountOverflowError(a, k)
    return count


def log2_power_difference(base: int, exponent: int) -> float:
    """
    log2(base^e - (base-1)^e) for base >= 2, e >= 1.

    Exact integer evaluation while base^e fits in 63 bits, otherwise
    e*log2(base) + log2(1 - (1 - 1/base)^e) with the second term taken
    through log1p/expm1 so that neither factor loses precision.
    """
    if base < 2 or exponent < 1:
        raise ValueError(f"Need base >= 2 and exponent >= 1, got {base}, {exponent}")
    if exponent * math.log2(base) < 63:
        return math.log2(base**exponent - (base - 1) ** exponent)
    # (1 - 1/base)^e = exp(e * log1p(-1/base))
    shrink = exponent * math.log1p(-1.0 / base)
    return exponent * math.log2(base) + math.log(-math.expm1(shrink)) / math.log(2)


def log2_leaf_count(a: int, k: int) -> float:
    """log2 N_k(a), exact where N_k(a) fits 63 bits and log-domain beyond."""
    _check_args(a, k)
    return log2_power_difference(k + 1, a)


@lru_cache(maxsize=None)
def simulated_leaf_count(a: int, k: int) -> int:
    """
    Leaf count by replaying the split rounds instead of the closed form.

    L(a, 0) = 1, L(1, k) = 1 and L(a, k) = sum_b C(a, b) L(b, k-1): a round
    turns one cardinality-a leaf into C(a, b) leaves of each cardinality b.
    """
    if a < 1 or k < 0:
        raise ValueError(f"Need a >= 1 and k >= 0, got {a}, {k}")
    if k == 0 or a == 1:
        return 1
    return sum(math.comb(a, b) * simulated_leaf_count(b, k - 1) for b in range(1, a + 1))
