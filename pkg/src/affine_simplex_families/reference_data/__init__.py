"""
Reference data package for affine_simplex_families.

This package provides centralized access to the frozen simple-root and affine
Coxeter diagram tables.
"""

from .utils import get_affine_diagram_table, get_simple_roots_table

__all__ = ["get_simple_roots_table", "get_affine_diagram_table"]
