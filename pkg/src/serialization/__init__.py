"""Input parsing and output formats."""

from .parser import (
    InputDocument,
    parse_basis,
    parse_cone,
    parse_input,
    parse_order,
    parse_polynomial,
    parse_symmetry,
)
from .serializers import FORMATS, format_basis, format_polynomial, serialize, validate_fan_json
from .svg import render_slice_svg

__all__ = [
    "InputDocument",
    "parse_basis",
    "parse_cone",
    "parse_input",
    "parse_order",
    "parse_polynomial",
    "parse_symmetry",
    "FORMATS",
    "format_basis",
    "format_polynomial",
    "serialize",
    "validate_fan_json",
    "render_slice_svg",
]
