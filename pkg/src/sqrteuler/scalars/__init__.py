"""Exact scalars: Q(i), Laurent polynomials in t^(1/2), rational functions, series."""

from .gaussian import GaussianRational, I, format_scalar, gaussian_sqrt, parse_gaussian
from .laurent import LaurentPoly
from .ratfunc import PoleReport, RatFunc, limit_at_identity, limit_at_zero, normalize
from .series import PowerSeries, chow_to_series, exp_substitute, series_sqrt_unit

__all__ = [
    "GaussianRational", "I", "format_scalar", "gaussian_sqrt", "parse_gaussian",
    "LaurentPoly", "PoleReport", "RatFunc", "limit_at_identity", "limit_at_zero",
    "normalize", "PowerSeries", "chow_to_series", "exp_substitute", "series_sqrt_unit",
]
