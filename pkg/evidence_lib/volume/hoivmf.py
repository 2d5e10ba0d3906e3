"""
Higher-order information volume of mass function (HOIVMF).

The maximum k-order TFB entropy on an n-element frame is reached when every
round-k leaf carries the same mass, giving

    E_n^k = log2( sum_a C(n, a) ((k+1)^a - k^a) ) = log2( (k+2)^n - (k+1)^n ).

The maximizing BPA puts m(F) = ((k+1)^|F| - k^|F|) / ((k+2)^n - (k+1)^n) on
every nonempty subset F.
"""

import logging
import math

from pydantic import BaseModel, Field

from evidence_lib.model import (
    Frame,
    FrameTooLargeError,
    InvalidOrderError,
    MassFunction,
    default_frame,
)
from evidence_lib.splitting.leaf_count import log2_power_difference

logger = logging.getLogger(__name__)

MAX_BINOMIAL_ELEMENTS = 30
MAX_EXPLICIT_ELEMENTS = 20


class VolumeQuery(BaseModel):
    """(n, k) pair of a HOIVMF evaluation."""

    model_config = {"frozen": True}

    n: int = Field(..., ge=1, description="Frame cardinality")
    k: int = Field(..., ge=1, description="Split order")

    @property
    def argument(self) -> int:
        """The integer (k+2)^n - (k+1)^n whose log2 is the volume."""
        return (self.k + 2) ** self.n - (self.k + 1) ** self.n

    @property
    def value(self) -> float:
        return hoivmf_value(self.n, self.k)


def _check(n: int, k: int) -> None:
    if n < 1:
        raise ValueError(f"Frame cardinality must be >= 1, got {n}")
    if k < 1:
        raise InvalidOrderError(k)


def hoivmf_argument(n: int, k: int) -> int:
    """Exact (k+2)^n - (k+1)^n."""
    _check(n, k)
    return (k + 2) ** n - (k + 1) ** n


def hoivmf_value(n: int, k: int) -> float:
    """
    k-order information volume of an n-element frame, log2((k+2)^n - (k+1)^n).

    Exact integer evaluation while (k+2)^n fits in 63 bits, otherwise
    n*log2(k+2) + log2(1 - ((k+1)/(k+2))^n) through log1p/expm1.
    """
    _check(n, k)
    return log2_power_difference(k + 2, n)


def hoivmf_via_binomial(n: int, k: int) -> float:
    """
    log2 of sum_{a=1..n} C(n, a) ((k+1)^a - k^a), the leaf total of the
    maximizing BPA summed per cardinality. Equal to ``hoivmf_value``.

    Raises:
        FrameTooLargeError: n > 30
    """
    _check(n, k)
    if n > MAX_BINOMIAL_ELEMENTS:
        raise FrameTooLargeError(n, MAX_BINOMIAL_ELEMENTS)
    total = sum(math.comb(n, a) * ((k + 1) ** a - k**a) for a in range(1, n + 1))
    return math.log2(total)


def max_tfb_bpa(frame: Frame, k: int) -> MassFunction:
    """
    BPA whose k-order TFB entropy equals ``hoivmf_value(frame.n, k)``.

    Raises:
        FrameTooLargeError: more than 20 elements (2^n - 1 explicit entries)
    """
    _check(frame.n, k)
    if frame.n > MAX_EXPLICIT_ELEMENTS:
        raise FrameTooLargeError(frame.n, MAX_EXPLICIT_ELEMENTS)
    total = hoivmf_argument(frame.n, k)
    by_cardinality = {a: ((k + 1) ** a - k**a) / total for a in range(1, frame.n + 1)}
    masses = {bits: by_cardinality[bits.bit_count()] for bits in range(1, frame.full_mask + 1)}
    logger.debug(
        "Maximizing BPA for n=%d, k=%d: m(Theta)=%.12g", frame.n, k, masses[frame.full_mask]
    )
    return MassFunction(frame=frame, masses=masses)


def max_theta_mass(n: int, k: int) -> float:
    """m(Theta) of the maximizing BPA, ((k+1)^n - k^n) / ((k+2)^n - (k+1)^n)."""
    _check(n, k)
    return ((k + 1) ** n - k**n) / hoivmf_argument(n, k)


def max_deng_entropy(n: int) -> float:
    """Maximum Deng entropy on an n-element frame, log2(3^n - 2^n)."""
    return hoivmf_value(n, 1)


def max_deng_bpa(frame: Frame) -> MassFunction:
    """m(F) = (2^|F| - 1) / (3^n - 2^n): the maximum Deng entropy BPA."""
    return max_tfb_bpa(frame, 1)


def max_tfb_bpa_for(n: int, k: int) -> MassFunction:
    """``max_tfb_bpa`` on the default frame of cardinality ``n``."""
    return max_tfb_bpa(default_frame(n), k)

