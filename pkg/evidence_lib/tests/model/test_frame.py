"""
Tests for frames and focal elements.
"""

import pytest
from pydantic import ValidationError

from evidence_lib.model import (
    DuplicateLabelError,
    FocalElement,
    Frame,
    ReservedCharacterError,
    TooManyElementsError,
    UnknownLabelError,
    default_frame,
    make_frame,
    subsets_of,
)
from evidence_lib.model.frame import iter_bits, iter_submasks


class TestMakeFrame:
    """Frame construction and its errors."""

    def test_keeps_input_order(self):
        """Index order equals the input order."""
        frame = make_frame(["R", "D"])
        assert frame.n == 2
        assert frame.labels == ("R", "D")
        assert frame.index_of("D") == 1
        assert str(frame) == "{R,D}"

    def test_duplicate_label(self):
        """Repeated labels are rejected."""
        with pytest.raises(DuplicateLabelError) as exc_info:
            make_frame(["A", "B", "A"])
        assert exc_info.value.label == "A"

    def test_too_many_elements(self):
        """65 labels exceed the bitmask capacity."""
        with pytest.raises(TooManyElementsError):
            make_frame([f"x{i}" for i in range(65)])

    def test_sixty_four_elements_accepted(self):
        frame = make_frame([f"x{i}" for i in range(64)])
        assert frame.full_mask == (1 << 64) - 1

    @pytest.mark.parametrize("label", ["A,B", "", "   ", " A", "B\t", "{}"])
    def test_reserved_character(self, label):
        """Labels may not contain the separator, be blank, padded, or name the empty set."""
        with pytest.raises(ReservedCharacterError):
            make_frame(["C", label])

    def test_empty_frame(self):
        with pytest.raises(ValidationError):
            make_frame([])

    def test_frame_is_frozen(self):
        frame = make_frame(["A"])
        with pytest.raises(ValidationError):
            frame.labels = ("B",)

    def test_default_frame(self):
        assert default_frame(3).labels == ("A", "B", "C")
        assert default_frame(30).labels[-1] == "t30"


class TestSubsets:
    """Bitmask subset handling."""

    def test_subsets_of_pair(self, frame_ab):
        """{A,B} -> [{A}, {B}, {A,B}] in ascending bitmask order."""
        subsets = subsets_of(FocalElement(0b11))
        assert [s.bits for s in subsets] == [0b01, 0b10, 0b11]
        assert [frame_ab.format_subset(s.bits) for s in subsets] == ["A", "B", "A,B"]

    def test_subsets_of_singleton(self):
        assert subsets_of(FocalElement(0b100)) == [FocalElement(0b100)]

    @pytest.mark.parametrize("bits", [0b1, 0b11, 0b111, 0b1011, 0b11111, 0b101010])
    def test_subset_count(self, bits):
        """|subsets_of(f)| = 2^|f| - 1, all distinct subsets of f."""
        focal = FocalElement(bits)
        subsets = subsets_of(focal)
        assert len(subsets) == 2 ** focal.cardinality - 1
        assert len({s.bits for s in subsets}) == len(subsets)
        assert all(s.issubset(focal) for s in subsets)

    def test_iter_submasks_is_ascending(self):
        subs = list(iter_submasks(0b1101))
        assert subs == sorted(subs)
        assert len(subs) == 7

    def test_iter_bits(self):
        assert list(iter_bits(0b10110)) == [1, 2, 4]

    def test_empty_focal_element(self):
        """The empty set is never a focal element."""
        with pytest.raises(ValueError):
            FocalElement(0)

    def test_parse_subset_is_order_insensitive(self, frame_ab):
        assert frame_ab.parse_subset("B,A") == frame_ab.parse_subset("A, B") == 0b11

    def test_parse_subset_unknown_label(self, frame_ab):
        with pytest.raises(UnknownLabelError):
            frame_ab.parse_subset("A,C")

    def test_focal_outside_frame(self, frame_ab):
        with pytest.raises(ValueError):
            frame_ab.focal(0b100)

    def test_all_subsets(self):
        frame = Frame(labels=("A", "B", "C"))
        assert len(frame.all_subsets()) == 7
        assert frame.all_subsets()[-1].bits == frame.full_mask
