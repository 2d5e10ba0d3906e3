"""
Brute-force and randomized oracles: simplex grid search, random BPA
sampling and invariant cross-checks.
"""

from .cross_check import CheckResult, CrossCheckReport, EvidenceCrossChecker, cross_check
from .grid import GridResult, GridSpec, grid_divisions, grid_search_max, simplex_grid
from .sampling import (
    SampleResult,
    random_bayesian_bpa,
    random_bpa,
    sample_search_max,
    simplex_rows,
)

__all__ = [
    # Grid
    "GridSpec",
    "GridResult",
    "grid_divisions",
    "simplex_grid",
    "grid_search_max",
    # Sampling
    "random_bpa",
    "random_bayesian_bpa",
    "simplex_rows",
    "sample_search_max",
    "SampleResult",
    # Cross-checks
    "cross_check",
    "EvidenceCrossChecker",
    "CrossCheckReport",
    "CheckResult",
]
