"""
Tests for the BPA document parser.
"""

import json
from pathlib import Path

import pytest

from evidence_lib.generator import serialize_bpa
from evidence_lib.model import (
    DuplicateLabelError,
    DuplicateSubsetError,
    InvalidMassFunctionError,
    IssueCode,
    MalformedDocumentError,
    MassFunction,
    ParseError,
    ReservedCharacterError,
    UnknownLabelError,
    make_frame,
)
from evidence_lib.parser import BpaParser, parse_bpa


class TestParseBpa:
    """parse_bpa on JSON text."""

    def test_deng_max_ab(self, deng_max_ab):
        m = parse_bpa('{"frame":["A","B"],"masses":{"A":0.2,"B":0.2,"A,B":0.6}}')
        assert m == deng_max_ab

    def test_key_normalization(self, vacuous_ab):
        """'B,A' is the same subset as 'A,B'."""
        m = parse_bpa('{"frame":["A","B"],"masses":{"B,A":1.0}}')
        assert m == vacuous_ab
        assert m.labelled() == {"A,B": 1.0}

    def test_unknown_label(self):
        with pytest.raises(UnknownLabelError) as exc_info:
            parse_bpa('{"frame":["A"],"masses":{"A,B":1.0}}')
        assert exc_info.value.label == "B"

    def test_duplicate_key(self):
        with pytest.raises(DuplicateSubsetError):
            parse_bpa('{"frame":["A","B"],"masses":{"A":0.5,"A":0.5}}')

    def test_duplicate_after_normalization(self):
        with pytest.raises(DuplicateSubsetError):
            parse_bpa('{"frame":["A","B"],"masses":{"A,B":0.5,"B,A":0.5}}')

    def test_repeated_label_in_key(self):
        with pytest.raises(MalformedDocumentError):
            parse_bpa('{"frame":["A","B"],"masses":{"A,A":1.0}}')

    def test_duplicate_frame_label(self):
        with pytest.raises(DuplicateLabelError):
            parse_bpa('{"frame":["A","A"],"masses":{"A":1.0}}')

    @pytest.mark.parametrize("frame", ['[" A","B"]', '["{}","B"]'])
    def test_frame_labels_that_keys_cannot_name(self, frame):
        """Padded labels and the empty-set key would not survive a round trip."""
        with pytest.raises(ReservedCharacterError):
            parse_bpa('{"frame":' + frame + ',"masses":{"B":1.0}}')

    @pytest.mark.parametrize(
        "text",
        [
            "[1, 2]",
            '{"frame":["A"]}',
            '{"frame":[],"masses":{"A":1.0}}',
            '{"frame":["A"],"masses":{"A":"lots"}}',
            '{"frame":["A"],"masses":{"A":1.0},"extra":true}',
            '{"frame":["A"],"masses":{"A":1.0}',
        ],
    )
    def test_malformed(self, text):
        with pytest.raises(MalformedDocumentError):
            parse_bpa(text)

    def test_axioms_checked(self):
        with pytest.raises(InvalidMassFunctionError) as exc_info:
            parse_bpa('{"frame":["A","B"],"masses":{"A":0.5,"B":0.6}}')
        assert exc_info.value.result.codes() == [IssueCode.SUM_NOT_ONE]

    def test_empty_set_key_rejected(self):
        with pytest.raises(InvalidMassFunctionError) as exc_info:
            parse_bpa('{"frame":["A"],"masses":{"{}":0.0,"A":1.0}}')
        assert exc_info.value.result.codes() == [IssueCode.EMPTY_SET_MASS]

    def test_tolerance(self):
        text = '{"frame":["A","B"],"masses":{"A":0.5,"B":0.5001}}'
        with pytest.raises(InvalidMassFunctionError):
            parse_bpa(text)
        assert parse_bpa(text, tolerance=1e-3).total == pytest.approx(1.0001)


class TestParseFile:
    def test_yaml_file(self, examples_dir):
        m = BpaParser().parse_file(Path(examples_dir) / "vacuous_rd.bpa.yml")
        assert m.frame.labels == ("R", "D")
        assert m.is_vacuous

    def test_json_file(self, examples_dir, deng_max_ab):
        assert BpaParser().parse_file(Path(examples_dir) / "deng_max_ab.bpa.json") == deng_max_ab

    def test_error_carries_file(self, tmp_path):
        path = tmp_path / "bad.bpa.json"
        path.write_text('{"frame":["A"],"masses":{"B":1.0}}')
        with pytest.raises(UnknownLabelError) as exc_info:
            BpaParser().parse_file(path)
        assert exc_info.value.file_path == path
        assert str(exc_info.value).startswith(f"File: {path}")

    def test_missing_file(self, tmp_path):
        with pytest.raises(ParseError, match="File not found"):
            BpaParser().parse_file(tmp_path / "missing.json")


class TestSerializeRoundTrip:
    """parse_bpa(serialize_bpa(m)) reproduces m."""

    def test_round_trip_keeps_order_and_masses(self):
        frame = make_frame(["Z", "Y", "X"])
        m = MassFunction.from_labels(frame, {"X,Z": 0.25, "Y": 0.125, "Z,Y,X": 0.625})
        text = serialize_bpa(m)
        assert list(json.loads(text)["masses"]) == ["Y", "Z,X", "Z,Y,X"]
        assert parse_bpa(text) == m
