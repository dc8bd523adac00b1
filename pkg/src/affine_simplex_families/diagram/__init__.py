"""
Family diagrams, generalized Coxeter diagrams, Gamma graphs, canonical keys
and p-codes.
"""

from .canonical import (
    CanonicalKey,
    canonical_key,
    minimal_code,
    p_code_e_series,
    p_code_f4,
    p_code_from_matrix,
)
from .family_diagram import (
    FamilyDiagram,
    GenCoxeterDiagram,
    diagram_from_vectors,
    family_diagram,
    gen_coxeter_diagram,
    gen_coxeter_from_normals,
)
from .gamma import GammaGraph, family_diagram_from_gamma, gamma_graph
from .graph_writer import family_diagram_dot, gamma_dot, gen_coxeter_dot, write_dot

__all__ = [
    "CanonicalKey",
    "FamilyDiagram",
    "GammaGraph",
    "GenCoxeterDiagram",
    "canonical_key",
    "diagram_from_vectors",
    "family_diagram",
    "family_diagram_dot",
    "family_diagram_from_gamma",
    "gamma_dot",
    "gamma_graph",
    "gen_coxeter_diagram",
    "gen_coxeter_dot",
    "gen_coxeter_from_normals",
    "minimal_code",
    "p_code_e_series",
    "p_code_f4",
    "p_code_from_matrix",
    "write_dot",
]
