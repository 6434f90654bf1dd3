"""2-adic numbers, truncated power series and linear algebra over Z_2."""

from .number import INF, PadicNumber, padic_sqrt, v2, v2_rational
from .series import PadicSeries, TailLaw, fixed_point_invert

__all__ = ["INF", "PadicNumber", "PadicSeries", "TailLaw", "fixed_point_invert",
           "padic_sqrt", "v2", "v2_rational"]
