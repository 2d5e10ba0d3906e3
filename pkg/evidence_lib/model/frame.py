"""
Discernment frames and focal elements.

A Frame fixes the order of its element labels; every subset of the frame is
a bitmask over those indices (bit i set <=> labels[i] is in the subset).
"""

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple

from pydantic import BaseModel, Field, field_validator

from .errors import (
    DuplicateLabelError,
    ReservedCharacterError,
    TooManyElementsError,
    UnknownLabelError,
)

MAX_ELEMENTS = 64
SEPARATOR = ","
EMPTY_SET_KEY = "{}"


def iter_submasks(mask: int) -> Iterator[int]:
    """Yield every nonempty submask of ``mask`` in ascending order."""
    sub = 0
    while True:
        sub = (sub - mask) & mask
        if sub == 0:
            return
        yield sub


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask``, lowest first."""
    while mask:
        lsb = mask & -mask
        yield lsb.bit_length() - 1
        mask ^= lsb


@dataclass(frozen=True)
class FocalElement:
    """
    Nonempty subset of a frame, stored as a bitmask.

    Attributes:
        bits: Bitmask over frame element indices (never 0)
    """

    bits: int

    def __post_init__(self):
        if self.bits <= 0:
            raise ValueError("A focal element cannot be the empty set")
        if self.bits >= 1 << MAX_ELEMENTS:
            raise ValueError(f"Focal element bitmask exceeds {MAX_ELEMENTS} bits")

    @property
    def cardinality(self) -> int:
        return self.bits.bit_count()

    @property
    def is_singleton(self) -> bool:
        return self.bits & (self.bits - 1) == 0

    def issubset(self, other: "FocalElement") -> bool:
        return self.bits & ~other.bits == 0

    def __len__(self) -> int:
        return self.cardinality


def subsets_of(focal: FocalElement) -> List[FocalElement]:
    """All 2^|f| - 1 nonempty subsets of ``focal``, ascending by bitmask."""
    return [FocalElement(sub) for sub in iter_submasks(focal.bits)]


class Frame(BaseModel):
    """
    Discernment framework: an ordered set of mutually exclusive outcomes.

    Note: This model is frozen (immutable) so frames can be shared freely
    between mass functions and threads.
    """

    labels: Tuple[str, ...] = Field(..., description="Element labels in index order")

    model_config = {"frozen": True}

    @field_validator("labels", mode="before")
    @classmethod
    def validate_labels(cls, v: Sequence[str]) -> Tuple[str, ...]:
        labels = tuple(v)
        if not labels:
            raise ValueError("A frame needs at least one element")
        if len(labels) > MAX_ELEMENTS:
            raise TooManyElementsError(len(labels), MAX_ELEMENTS)
        seen = set()
        for label in labels:
            if not isinstance(label, str):
                raise ValueError(f"Frame labels must be strings, got {type(label).__name__}")
            if not label.strip() or SEPARATOR in label:
                raise ReservedCharacterError(label, SEPARATOR)
            if label != label.strip():
                raise ReservedCharacterError(
                    label, reason=f"Label '{label}' has leading or trailing whitespace"
                )
            if label == EMPTY_SET_KEY:
                raise ReservedCharacterError(
                    label, reason=f"Label '{label}' is reserved for the empty set"
                )
            if label in seen:
                raise DuplicateLabelError(label)
            seen.add(label)
        return labels

    @property
    def n(self) -> int:
        """Cardinality of the frame."""
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        """Bitmask of the whole frame (Theta)."""
        return (1 << self.n) - 1

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownLabelError(label) from None

    def mask_of(self, labels: Iterable[str]) -> int:
        """Bitmask of a collection of labels (order-insensitive)."""
        mask = 0
        for label in labels:
            mask |= 1 << self.index_of(label)
        return mask

    def focal(self, bits: int) -> FocalElement:
        """Focal element for ``bits``, checked against this frame."""
        if bits <= 0 or bits > self.full_mask:
            raise ValueError(
                f"Bitmask {bits:#x} is not a nonempty subset of a {self.n}-element frame"
            )
        return FocalElement(bits)

    def labels_of(self, bits: int) -> List[str]:
        return [self.labels[i] for i in iter_bits(bits)]

    def format_subset(self, bits: int) -> str:
        """Canonical comma-joined key in frame order, e.g. ``A,B``."""
        return SEPARATOR.join(self.labels_of(bits))

    def parse_subset(self, key: str) -> int:
        """Bitmask of a comma-joined subset key such as ``"B,A"``."""
        parts = [part.strip() for part in key.split(SEPARATOR)]
        if any(not part for part in parts):
            raise ValueError(f"Empty label in subset key '{key}'")
        return self.mask_of(parts)

    def all_subsets(self) -> List[FocalElement]:
        """Every nonempty subset of the frame, ascending by bitmask."""
        return subsets_of(FocalElement(self.full_mask))

    def __str__(self) -> str:
        return "{" + SEPARATOR.join(self.labels) + "}"


def make_frame(labels: Sequence[str]) -> Frame:
    """Build a frame whose index order equals the input order."""
    return Frame(labels=tuple(labels))


def default_frame(n: int) -> Frame:
    """Frame of cardinality ``n`` for when only the size matters: A, B, C, ... or t1..tn past 26."""
    if n <= 26:
        return make_frame([chr(ord("A") + i) for i in range(n)])
    return make_frame([f"t{i + 1}" for i in range(n)])
