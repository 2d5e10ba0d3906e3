"""
Higher-order information volume of mass function and its maximizing BPA.
"""

from .hoivmf import (
    VolumeQuery,
    hoivmf_argument,
    hoivmf_value,
    hoivmf_via_binomial,
    max_deng_bpa,
    max_deng_entropy,
    max_tfb_bpa,
    max_tfb_bpa_for,
    max_theta_mass,
)

__all__ = [
    "VolumeQuery",
    "hoivmf_value",
    "hoivmf_argument",
    "hoivmf_via_binomial",
    "max_tfb_bpa",
    "max_tfb_bpa_for",
    "max_theta_mass",
    "max_deng_entropy",
    "max_deng_bpa",
]
