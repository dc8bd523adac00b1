"""
Terminal output helpers: colours, tables and run manifests.
"""

from .base import ColoredOutput, Colors, strip_ansi
from .manifest import RunManifest, manifest_path
from .tables import CountRow, counts_table, family_listing, format_match, reproduction_report

__all__ = [
    "ColoredOutput",
    "Colors",
    "CountRow",
    "RunManifest",
    "counts_table",
    "family_listing",
    "format_match",
    "manifest_path",
    "reproduction_report",
    "strip_ansi",
]
