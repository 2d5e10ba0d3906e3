"""
Run settings shared by the library defaults and the CLI.

Settings come from the built-in defaults, optionally a YAML file, then
explicit command-line flags (highest precedence).
"""

from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml
from pydantic import BaseModel, Field, ValidationError, field_validator

from .errors import ParseError


class RunSettings(BaseModel):
    """Numeric defaults for all computations."""

    model_config = {"extra": "forbid", "validate_assignment": True, "populate_by_name": True}

    tolerance: float = Field(default=1e-9, gt=0, description="Accepted |sum m - 1|")
    epsilon: float = Field(default=1e-6, gt=0, description="Deng volume stop increase")
    max_iter: int = Field(default=100, ge=1, alias="maxIter", description="Deng volume iterations")
    max_leaves: int = Field(
        default=10**7, ge=1, alias="maxLeaves", description="Split tree size guard"
    )
    precision: int = Field(default=4, ge=0, le=17, description="Printed decimals")
    grid_step: float = Field(default=0.01, gt=0, lt=1, alias="gridStep")
    samples: int = Field(default=10**5, ge=1, description="Random samples for n >= 3 maxima")
    seed: int = Field(default=0, ge=0, description="Base seed for random sampling")

    @field_validator("precision", mode="before")
    @classmethod
    def coerce_precision(cls, v: Any) -> Any:
        if isinstance(v, str) and v.strip().lower() == "full":
            return 17
        return v

    def with_overrides(self, **overrides: Any) -> "RunSettings":
        """Copy with every non-None override applied."""
        data = self.model_dump()
        data.update({k: v for k, v in overrides.items() if v is not None})
        return RunSettings.model_validate(data)


def load_settings(path: Optional[Union[str, Path]] = None) -> RunSettings:
    """
    Load settings from a YAML file, or return the defaults.

    Raises:
        ParseError: If the file is missing, not a mapping, or has invalid values
    """
    if path is None:
        return RunSettings()

    file_path = Path(path)
    if not file_path.exists():
        raise ParseError(f"File not found: {file_path}")
    try:
        with open(file_path, "r", encoding="utf-8") as f:
            data: Dict[str, Any] = yaml.safe_load(f) or {}
    except yaml.YAMLError as e:
        raise ParseError(f"YAML syntax error: {e}", file_path)
    if not isinstance(data, dict):
        raise ParseError("Root element must be a YAML object/dictionary", file_path)

    try:
        return RunSettings.model_validate(data)
    except ValidationError as e:
        errors = [f"{' -> '.join(str(x) for x in err['loc'])}: {err['msg']}" for err in e.errors()]
        raise ParseError("Invalid settings:\n  " + "\n  ".join(errors), file_path)
