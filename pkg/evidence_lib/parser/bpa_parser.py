"""
Parser for BPA documents.

Loads JSON (or YAML) documents of the form

    {"frame": ["A", "B"], "masses": {"A": 0.2, "B": 0.2, "A,B": 0.6}}

and converts them to validated MassFunction models. Subset keys are
comma-joined labels in any order; ``""`` or ``"{}"`` denotes the empty set
(always rejected by validation).
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

import yaml
from pydantic import BaseModel, Field, ValidationError

from evidence_lib.model import (
    DuplicateSubsetError,
    Frame,
    MalformedDocumentError,
    MassFunction,
    ParseError,
    UnknownLabelError,
    make_frame,
)
from evidence_lib.model.frame import EMPTY_SET_KEY
from evidence_lib.model.validators import DEFAULT_TOLERANCE

logger = logging.getLogger(__name__)

EMPTY_SET_KEYS = ("", EMPTY_SET_KEY)
YAML_SUFFIXES = (".yml", ".yaml")


class BpaDocument(BaseModel):
    """Wire shape of a BPA document (also the source of the JSON schema)."""

    model_config = {"extra": "forbid"}

    frame: List[str] = Field(..., min_length=1, description="Element labels in index order")
    masses: Dict[str, float] = Field(
        ..., description="Comma-joined label subset -> mass, e.g. {'A,B': 0.6}"
    )


def _reject_duplicate_keys(pairs: List[Tuple[str, Any]]) -> Dict[str, Any]:
    """json object hook that refuses repeated keys instead of keeping the last one."""
    result: Dict[str, Any] = {}
    for key, value in pairs:
        if key in result:
            raise DuplicateSubsetError(key)
        result[key] = value
    return result


class BpaParser:
    """
    Parser for BPA documents.

    Handles:
    - JSON text and files (YAML files by suffix)
    - Order-insensitive subset keys, canonicalized to frame order
    - Rejection of unknown labels and duplicate subsets
    - Axiom validation with the configured tolerance
    """

    def __init__(self, tolerance: float = DEFAULT_TOLERANCE):
        self.tolerance = tolerance
        self._current_file: Optional[Path] = None

    def parse_text(self, text: str, fmt: str = "json") -> MassFunction:
        """
        Parse a BPA document from text.

        Args:
            text: Document text
            fmt: 'json' or 'yaml'

        Returns:
            MassFunction: Validated mass function

        Raises:
            ParseError: Malformed document, unknown label or duplicate subset
            InvalidMassFunctionError: Document parses but violates the BPA axioms
        """
        data = self._load(text, fmt)
        return self._parse_document(data)

    def parse_file(self, file_path: Union[str, Path]) -> MassFunction:
        """Parse a BPA document file; ``.yml``/``.yaml`` are read as YAML, anything else as JSON."""
        file_path = Path(file_path)
        self._current_file = file_path
        try:
            if not file_path.exists():
                raise ParseError(f"File not found: {file_path}")
            fmt = "yaml" if file_path.suffix.lower() in YAML_SUFFIXES else "json"
            text = file_path.read_text(encoding="utf-8")
            try:
                return self.parse_text(text, fmt)
            except ParseError as e:
                if e.file_path is None:
                    e.file_path = file_path
                    e.args = (f"File: {file_path} | {e.args[0]}",)
                raise
        finally:
            self._current_file = None

    def _load(self, text: str, fmt: str) -> Dict[str, Any]:
        if fmt == "json":
            try:
                data = json.loads(text, object_pairs_hook=_reject_duplicate_keys)
            except json.JSONDecodeError as e:
                raise MalformedDocumentError(f"JSON syntax error at line {e.lineno}: {e.msg}")
        elif fmt == "yaml":
            try:
                data = yaml.safe_load(text)
            except yaml.YAMLError as e:
                raise MalformedDocumentError(f"YAML syntax error: {e}")
        else:
            raise ValueError(f"Unsupported document format: {fmt}")

        if not isinstance(data, dict):
            raise MalformedDocumentError("Root element must be an object with 'frame' and 'masses'")
        return data

    def _parse_document(self, data: Dict[str, Any]) -> MassFunction:
        try:
            doc = BpaDocument.model_validate(data)
        except ValidationError as e:
            errors = []
            for error in e.errors():
                loc = " -> ".join(str(x) for x in error["loc"])
                errors.append(f"{loc}: {error['msg']}")
            raise MalformedDocumentError("Validation failed:\n  " + "\n  ".join(errors))

        frame = make_frame(doc.frame)
        masses = self._parse_masses(frame, doc.masses)
        m = MassFunction(frame=frame, masses=masses)
        logger.debug("Parsed BPA with %d focal entries on %s", len(masses), frame)
        return m.ensure_valid(self.tolerance)

    @staticmethod
    def _parse_masses(frame: Frame, raw: Dict[str, float]) -> Dict[int, float]:
        masses: Dict[int, float] = {}
        for key, value in raw.items():
            if key.strip() in EMPTY_SET_KEYS:
                bits = 0
            else:
                parts = [part.strip() for part in key.split(",")]
                if any(not part for part in parts):
                    raise MalformedDocumentError(f"Empty label in subset key '{key}'")
                bits = 0
                for part in parts:
                    if part not in frame.labels:
                        raise UnknownLabelError(part)
                    bit = 1 << frame.labels.index(part)
                    if bits & bit:
                        raise MalformedDocumentError(f"Label '{part}' repeated in key '{key}'")
                    bits |= bit
            if bits in masses:
                raise DuplicateSubsetError(key)
            masses[bits] = value
        return masses


def parse_bpa(text: str, tolerance: float = DEFAULT_TOLERANCE) -> MassFunction:
    """Parse a JSON BPA document into a validated MassFunction."""
    return BpaParser(tolerance).parse_text(text, "json")
