"""
Affine Simplex Families

Exact enumeration of the Euclidean simplices whose facet reflections generate
a given affine Weyl group, grouped into families of simplices sharing their
facet directions up to scaling of each facet.

Main Components:
- exact: Rational matrices, kernels and integer echelon forms.
- roots: Root systems, angle classes and the precomputed line table.
- gen: Closure of root subsets under reflection and subsystem types.
- enumeration: The two-step family search, records and checkpoints.
- diagram: Family diagrams, generalized Coxeter diagrams, Gamma graphs and keys.
- series: Closed-form counts and constructions for the classical series.
- alcove: Mirror closure of a simplex and identification of its group.
- report: Colored tables and run manifests.

Usage:
    from affine_simplex_families import GroupType, enumerate_families
    families = enumerate_families(GroupType.parse("F4~"))
"""

# Version information
__version__ = "1.0.0"
__author__ = "Affine Simplex Families Team"
__description__ = "Simplex families generating affine Weyl groups"

from .alcove import Simplex, identify_group
from .diagram import canonical_key, family_diagram, gamma_graph, gen_coxeter_diagram
from .enumeration import (
    Family,
    FamilyRecord,
    coxeter_family,
    disambiguate_bc,
    enumerate_families,
    enumerate_step1,
    enumerate_step2,
    families_digest,
)
from .errors import AffineSimplexError
from .roots import GroupType, build_root_system
from .series import construct_series_families, count_families
from .settings import AlcoveSettings, EnumerationSettings

__all__ = [
    # Package metadata
    "__version__",
    "__author__",
    "__description__",
    # Types and settings
    "GroupType",
    "EnumerationSettings",
    "AlcoveSettings",
    "AffineSimplexError",
    # Enumeration
    "build_root_system",
    "enumerate_step1",
    "enumerate_step2",
    "enumerate_families",
    "disambiguate_bc",
    "coxeter_family",
    "Family",
    "FamilyRecord",
    "families_digest",
    # Diagrams
    "family_diagram",
    "gen_coxeter_diagram",
    "gamma_graph",
    "canonical_key",
    # Series
    "count_families",
    "construct_series_families",
    # Alcove
    "Simplex",
    "identify_group",
]

import logging

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())  # Prevent "No handlers" warnings


def get_package_info():
    """Get information about the package and available components."""
    return {
        "version": __version__,
        "author": __author__,
        "description": __description__,
        "public_api": __all__,
    }
