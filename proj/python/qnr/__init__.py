"""Quaternionic numerical range: spectrum, radius, sections and verification.

Matrices are nested lists ``a[r][c] = [q0, q1, q2, q3]`` for q0 + q1 i + q2 j + q3 k.
"""

import json

from ._core import (
    DimensionError,
    ParseError,
    attain_section_point,
    demo_matrix,
    demo_names,
    numerical_radius,
    operator_norm,
    parse_matrix,
    quadratic_form,
    radius_lower_bound,
    section,
    spherical_spectrum,
)
from . import _core

__all__ = [
    "DimensionError",
    "ParseError",
    "attain_section_point",
    "classify",
    "demo",
    "demo_matrix",
    "demo_names",
    "numerical_radius",
    "operator_norm",
    "parse_matrix",
    "quadratic_form",
    "radius_lower_bound",
    "section",
    "spherical_spectrum",
    "verify",
]


def classify(a):
    """Closed-form case of a 2x2 matrix as a dict."""
    return json.loads(_core.classify_json(a))


def verify(a, samples=20000, seed=42):
    """Run the property battery and return the report dict."""
    return json.loads(_core.verify_json(a, samples, seed))


def demo(name, samples=20000, seed=42):
    """Run a registered worked example and return the report dict."""
    return json.loads(_core.demo_json(name, samples, seed))
