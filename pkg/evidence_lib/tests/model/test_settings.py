"""
Tests for run settings.
"""

import pytest
from pydantic import ValidationError

from evidence_lib.model import ParseError, RunSettings, load_settings


class TestRunSettings:
    def test_defaults(self):
        settings = RunSettings()
        assert settings.tolerance == 1e-9
        assert settings.epsilon == 1e-6
        assert settings.max_iter == 100
        assert settings.max_leaves == 10**7
        assert settings.precision == 4
        assert settings.grid_step == 0.01

    def test_full_precision(self):
        assert RunSettings(precision="full").precision == 17

    def test_overrides_skip_none(self):
        settings = RunSettings().with_overrides(precision=None, epsilon=1e-3)
        assert settings.precision == 4
        assert settings.epsilon == 1e-3

    def test_invalid_override(self):
        with pytest.raises(ValidationError):
            RunSettings().with_overrides(grid_step=0.0)

    def test_extra_forbidden(self):
        with pytest.raises(ValidationError):
            RunSettings(colour="red")


class TestLoadSettings:
    def test_no_path(self):
        assert load_settings(None) == RunSettings()

    def test_camel_case_keys(self, tmp_path):
        path = tmp_path / "settings.yml"
        path.write_text("maxIter: 14\ngridStep: 0.05\nprecision: full\n")
        settings = load_settings(path)
        assert settings.max_iter == 14
        assert settings.grid_step == 0.05
        assert settings.precision == 17

    def test_example_settings_file(self, examples_dir):
        assert load_settings(f"{examples_dir}/settings.yml") == RunSettings()

    def test_missing_file(self, tmp_path):
        with pytest.raises(ParseError, match="File not found"):
            load_settings(tmp_path / "nope.yml")

    def test_invalid_value(self, tmp_path):
        path = tmp_path / "settings.yml"
        path.write_text("epsilon: -1\n")
        with pytest.raises(ParseError, match="epsilon"):
            load_settings(path)

    def test_root_not_mapping(self, tmp_path):
        path = tmp_path / "settings.yml"
        path.write_text("- 1\n- 2\n")
        with pytest.raises(ParseError, match="Root element"):
            load_settings(path)
