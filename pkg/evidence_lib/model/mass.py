"""
Mass functions (basic probability assignments) over a frame.
"""

from typing import Dict, Iterator, List, Mapping, Tuple

from pydantic import BaseModel, Field, model_validator

from .frame import FocalElement, Frame


class MassFunction(BaseModel):
    """
    Basic probability assignment M0 = {m(F) : F nonempty subset of the frame}.

    Masses are keyed by focal-element bitmask and stored exactly as given:
    they are never renormalized. Zero-mass entries are kept but every measure
    skips them. Use ``validate()`` (or ``ensure_valid()``) to check the BPA
    axioms; construction only checks that keys fit the frame.
    """

    frame: Frame = Field(..., description="Discernment framework")
    masses: Dict[int, float] = Field(..., description="Bitmask -> mass")

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def check_keys_in_frame(self) -> "MassFunction":
        full = self.frame.full_mask
        for bits in self.masses:
            if bits < 0 or bits > full:
                raise ValueError(f"Subset bitmask {bits:#x} lies outside frame {self.frame}")
        return self

    @classmethod
    def from_labels(cls, frame: Frame, masses: Mapping[str, float]) -> "MassFunction":
        """
        Build from comma-joined label keys.

        Example:
            >>> frame = make_frame(["A", "B"])
            >>> MassFunction.from_labels(frame, {"A": 0.2, "B": 0.2, "A,B": 0.6})
        """
        data: Dict[int, float] = {}
        for key, value in masses.items():
            bits = frame.parse_subset(key)
            data[bits] = data.get(bits, 0.0) + float(value)
        return cls(frame=frame, masses=data)

    @classmethod
    def vacuous(cls, frame: Frame) -> "MassFunction":
        """Total ignorance: m(Theta) = 1."""
        return cls(frame=frame, masses={frame.full_mask: 1.0})

    @classmethod
    def bayesian(cls, frame: Frame, probabilities: List[float]) -> "MassFunction":
        """Mass on singletons only, one probability per frame element."""
        if len(probabilities) != frame.n:
            raise ValueError(f"Expected {frame.n} probabilities, got {len(probabilities)}")
        return cls(frame=frame, masses={1 << i: float(p) for i, p in enumerate(probabilities)})

    # --- Accessors ---

    def mass(self, bits: int) -> float:
        return self.masses.get(bits, 0.0)

    def focal_items(self) -> Iterator[Tuple[FocalElement, float]]:
        """Positive-mass focal elements in ascending bitmask order."""
        for bits in sorted(self.masses):
            value = self.masses[bits]
            if bits and value > 0.0:
                yield FocalElement(bits), value

    def positive_items(self) -> List[Tuple[int, float]]:
        """(bitmask, mass) pairs with positive mass, ascending by bitmask."""
        return [(bits, value) for bits, value in sorted(self.masses.items()) if bits and value > 0]

    @property
    def total(self) -> float:
        return sum(self.masses.values())

    @property
    def is_bayesian(self) -> bool:
        """True when all positive mass sits on singletons."""
        return all(bits & (bits - 1) == 0 for bits, _ in self.positive_items())

    @property
    def is_vacuous(self) -> bool:
        items = self.positive_items()
        return len(items) == 1 and items[0][0] == self.frame.full_mask

    @property
    def max_cardinality(self) -> int:
        return max((bits.bit_count() for bits, _ in self.positive_items()), default=0)

    def labelled(self) -> Dict[str, float]:
        """Masses keyed by canonical comma-joined labels, ascending by bitmask."""
        return {self.frame.format_subset(bits): self.masses[bits] for bits in sorted(self.masses)}

    # --- Validation ---

    def validate_axioms(self, tol: float = 1e-9):
        """Check the BPA axioms; see ``validators.validate``."""
        from .validators import validate

        return validate(self, tol)

    def ensure_valid(self, tol: float = 1e-9) -> "MassFunction":
        """Return self, or raise InvalidMassFunctionError listing every violation."""
        from .errors import InvalidMassFunctionError

        result = self.validate_axioms(tol)
        if not result.ok:
            raise InvalidMassFunctionError(result)
        return self

    def __str__(self) -> str:
        body = ", ".join(f"{key or '{}'}: {value:g}" for key, value in self.labelled().items())
        return "{" + body + "}"
