"""
Pydantic-based canonical data models for belief functions.

Frames, focal elements and mass functions are the single source of truth
consumed by every measure; validators check the BPA axioms.
"""

from .errors import (
    DuplicateLabelError,
    DuplicateSubsetError,
    EvidenceError,
    FrameTooLargeError,
    InvalidDistributionError,
    InvalidMassFunctionError,
    InvalidOrderError,
    LeafCountOverflowError,
    MalformedDocumentError,
    NonConvergenceWarning,
    ParseError,
    ReservedCharacterError,
    StepInvalidError,
    TooManyElementsError,
    TreeTooLargeError,
    UnknownLabelError,
)
from .frame import FocalElement, Frame, default_frame, make_frame, subsets_of
from .mass import MassFunction
from .settings import RunSettings, load_settings
from .validators import IssueCode, ValidationIssue, ValidationResult, validate

__all__ = [
    # Frame
    "Frame",
    "FocalElement",
    "make_frame",
    "default_frame",
    "subsets_of",
    # Mass
    "MassFunction",
    # Validation
    "validate",
    "ValidationResult",
    "ValidationIssue",
    "IssueCode",
    # Settings
    "RunSettings",
    "load_settings",
    # Errors
    "EvidenceError",
    "DuplicateLabelError",
    "TooManyElementsError",
    "ReservedCharacterError",
    "InvalidMassFunctionError",
    "InvalidDistributionError",
    "InvalidOrderError",
    "LeafCountOverflowError",
    "TreeTooLargeError",
    "FrameTooLargeError",
    "StepInvalidError",
    "NonConvergenceWarning",
    "ParseError",
    "MalformedDocumentError",
    "UnknownLabelError",
    "DuplicateSubsetError",
]
