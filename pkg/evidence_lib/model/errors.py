"""
Exception hierarchy for evidence_lib.

Every failure raised by the library derives from EvidenceError so callers
(and the CLI) can catch one type. Parse failures carry file context.
"""

from pathlib import Path
from typing import TYPE_CHECKING, Optional, Union

if TYPE_CHECKING:
    from .validators import ValidationResult


class EvidenceError(Exception):
    """Base class for all evidence_lib errors."""


class DuplicateLabelError(EvidenceError):
    """A frame was given the same label twice."""

    def __init__(self, label: str):
        self.label = label
        super().__init__(f"Duplicate frame label: '{label}'")


class TooManyElementsError(EvidenceError):
    """A frame exceeds the 64-element bitmask capacity."""

    def __init__(self, count: int, limit: int = 64):
        self.count = count
        self.limit = limit
        super().__init__(f"Frame has {count} elements, at most {limit} are supported")


class ReservedCharacterError(EvidenceError):
    """A label is empty, padded, contains the subset separator or is the empty-set key."""

    def __init__(self, label: str, reserved: str = ",", reason: Optional[str] = None):
        self.label = label
        super().__init__(
            reason or f"Label '{label}' is empty or contains reserved character '{reserved}'"
        )


class InvalidMassFunctionError(EvidenceError):
    """A mass function failed the BPA axioms."""

    def __init__(self, result: "ValidationResult"):
        self.result = result
        super().__init__(result.get_summary().strip())


class InvalidDistributionError(EvidenceError):
    """A probability vector has negative entries or does not sum to one."""


class InvalidOrderError(EvidenceError):
    """A split order k was not a positive integer."""

    def __init__(self, k: int):
        self.k = k
        super().__init__(f"Order k must be a positive integer, got {k}")


class LeafCountOverflowError(EvidenceError):
    """A leaf count does not fit in a signed 64-bit integer."""

    def __init__(self, cardinality: int, k: int):
        self.cardinality = cardinality
        self.k = k
        super().__init__(
            f"Leaf count for cardinality {cardinality} at order {k} exceeds 63 bits"
        )


class TreeTooLargeError(EvidenceError):
    """A split would materialize more leaves than the configured guard."""

    def __init__(self, leaves: int, limit: int):
        self.leaves = leaves
        self.limit = limit
        super().__init__(f"Split would produce {leaves} leaves, limit is {limit}")


class FrameTooLargeError(EvidenceError):
    """An operation needs every subset of a frame that is too large to enumerate."""

    def __init__(self, n: int, limit: int):
        self.n = n
        self.limit = limit
        super().__init__(f"Frame of {n} elements exceeds the enumeration limit of {limit}")


class StepInvalidError(EvidenceError):
    """A grid step is not in (0, 1) or does not divide 1."""

    def __init__(self, step: float):
        self.step = step
        super().__init__(f"Grid step must lie in (0, 1) and divide 1, got {step}")


class NonConvergenceWarning(UserWarning):
    """Iteration stopped at max_iter while the increase was still >= epsilon."""


class ParseError(EvidenceError):
    """Error while reading a BPA document."""

    def __init__(self, message: str, file_path: Optional[Union[str, Path]] = None):
        self.file_path = Path(file_path) if file_path is not None else None
        super().__init__(self._format_message(message))

    def _format_message(self, message: str) -> str:
        parts = []
        if self.file_path:
            parts.append(f"File: {self.file_path}")
        parts.append(message)
        return " | ".join(parts)


class MalformedDocumentError(ParseError):
    """The document is not a JSON/YAML object with 'frame' and 'masses'."""


class UnknownLabelError(ParseError):
    """A subset key names a label outside the frame."""

    def __init__(self, label: str, file_path: Optional[Union[str, Path]] = None):
        self.label = label
        super().__init__(f"Unknown label: '{label}'", file_path)


class DuplicateSubsetError(ParseError):
    """Two subset keys normalize to the same focal element."""

    def __init__(self, key: str, file_path: Optional[Union[str, Path]] = None):
        self.key = key
        super().__init__(f"Duplicate subset: '{key}'", file_path)
