import os
import sys

import pytest

# Add the project root to sys.path so that evidence_lib and scripts are importable
# This is needed because of the flat layout structure
project_root = os.path.abspath(os.path.join(os.path.dirname(__file__), "../.."))
if project_root not in sys.path:
    sys.path.insert(0, project_root)

from evidence_lib.model import MassFunction, make_frame  # noqa: E402

SPEC_EXAMPLES_DIR = os.path.join(project_root, "evidence_spec", "examples")


@pytest.fixture
def frame_ab():
    return make_frame(["A", "B"])


@pytest.fixture
def deng_max_ab(frame_ab):
    """m(A) = m(B) = 0.2, m(AB) = 0.6."""
    return MassFunction.from_labels(frame_ab, {"A": 0.2, "B": 0.2, "A,B": 0.6})


@pytest.fixture
def order3_max_ab(frame_ab):
    """m(A) = m(B) = 1/9, m(AB) = 7/9."""
    return MassFunction.from_labels(frame_ab, {"A": 1 / 9, "B": 1 / 9, "A,B": 7 / 9})


@pytest.fixture
def vacuous_ab(frame_ab):
    return MassFunction.vacuous(frame_ab)


@pytest.fixture
def examples_dir():
    return SPEC_EXAMPLES_DIR
