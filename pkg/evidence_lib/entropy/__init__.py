"""
Entropy measures over mass functions (Shannon, Deng, FB, k-order TFB).
"""

from .measures import (
    EntropyReport,
    FractalMass,
    Measure,
    deng_entropy,
    entropy_report,
    fb_entropy,
    focal_shannon,
    fractal_transform,
    max_fb_entropy,
    measure_rows,
    measure_value,
    shannon,
    tfb_entropy,
    tfb_vacuous,
)

__all__ = [
    "Measure",
    "EntropyReport",
    "FractalMass",
    "shannon",
    "focal_shannon",
    "fractal_transform",
    "fb_entropy",
    "deng_entropy",
    "tfb_entropy",
    "tfb_vacuous",
    "max_fb_entropy",
    "measure_value",
    "measure_rows",
    "entropy_report",
]
