"""
Root systems, reflections, inner products and angle classes.
"""

from .angle import PROPORTIONAL, AngleClass, classify_angle, vector_angle_class
from .group_type import GroupType
from .line_table import LineTable
from .root_system import (
    RootSystem,
    RootVector,
    angle_class,
    build_root_system,
    expected_root_count,
    inner,
    reflect,
    simple_roots_for,
)

__all__ = [
    "AngleClass",
    "PROPORTIONAL",
    "GroupType",
    "LineTable",
    "RootSystem",
    "RootVector",
    "angle_class",
    "build_root_system",
    "classify_angle",
    "expected_root_count",
    "inner",
    "reflect",
    "simple_roots_for",
    "vector_angle_class",
]
