"""The mod-2 etale algebra of f and its unit square classes."""

from .algebra import AlgebraElement
from .etale import (
    Delta2Generator,
    EtaleData,
    SquareClass,
    build_etale,
    delta2_coordinates,
    delta2_image_basis,
    is_square_unit,
    square_class_coords,
    theta_bar_inverse,
    trace_vector,
)

__all__ = [
    "AlgebraElement", "Delta2Generator", "EtaleData", "SquareClass", "build_etale",
    "delta2_coordinates", "delta2_image_basis", "is_square_unit", "square_class_coords",
    "theta_bar_inverse", "trace_vector",
]
