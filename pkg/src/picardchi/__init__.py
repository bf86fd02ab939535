"""Exact symmetric-function tools and closed formulas for weight-zero and
topological Euler characteristics of universal Picard stacks."""

from .formulas import (chi_pic, chi_series, equivariant_chi, n_count_closed, n_count_oracle,
                       topological_jacobian, weight_zero_jacobian, wz_enumeration_bounds)
from .plaurent import ExpKey, PLaurent, limit_transform
from .symfunc import (MarkedSymFunc, TruncatedSymFunc, exp_plethystic, inv_delta,
                      log_plethystic, plethysm, transform_T)

__version__ = "0.1.0"

__all__ = [
    "ExpKey", "MarkedSymFunc", "PLaurent", "TruncatedSymFunc",
    "chi_pic", "chi_series", "equivariant_chi", "exp_plethystic", "inv_delta",
    "limit_transform", "log_plethystic", "n_count_closed", "n_count_oracle", "plethysm",
    "topological_jacobian", "transform_T", "weight_zero_jacobian", "wz_enumeration_bounds",
]
