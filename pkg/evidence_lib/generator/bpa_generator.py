"""
BPA document generator: the inverse of BpaParser.

Output is canonical (frame order kept, subset keys in frame order, entries
ascending by bitmask) so it can be digested and diffed.
"""

import hashlib
import json
from pathlib import Path
from typing import Any, Dict, Union

import yaml

from evidence_lib.model import MassFunction
from evidence_lib.model.frame import EMPTY_SET_KEY


def to_document(m: MassFunction) -> Dict[str, Any]:
    """Plain dict in the BPA document shape."""
    return {
        "frame": list(m.frame.labels),
        "masses": {
            (m.frame.format_subset(bits) if bits else EMPTY_SET_KEY): m.masses[bits]
            for bits in sorted(m.masses)
        },
    }


def serialize_bpa(m: MassFunction, indent: Union[int, None] = 2) -> str:
    """Canonical JSON text for ``m``; ``parse_bpa(serialize_bpa(m))`` reproduces it."""
    return json.dumps(to_document(m), indent=indent, ensure_ascii=False)


def bpa_digest(m: MassFunction) -> str:
    """SHA-256 of the compact canonical serialization (masses written with repr precision)."""
    compact = serialize_bpa(m, indent=None)
    return hashlib.sha256(compact.encode("utf-8")).hexdigest()


def write_bpa_file(m: MassFunction, file_path: Union[str, Path]) -> Path:
    """Write ``m`` as JSON, or YAML when the suffix is .yml/.yaml."""
    file_path = Path(file_path)
    file_path.parent.mkdir(parents=True, exist_ok=True)
    if file_path.suffix.lower() in (".yml", ".yaml"):
        content = yaml.safe_dump(to_document(m), sort_keys=False, allow_unicode=True)
    else:
        content = serialize_bpa(m) + "\n"
    file_path.write_text(content, encoding="utf-8")
    return file_path
