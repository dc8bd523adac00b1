"""
Alcove oracle: mirror closure, fundamental alcove and group identification.
"""

from .mirror import Mirror, Simplex
from .oracle import (
    Identification,
    MirrorArrangement,
    alcove_index,
    fundamental_alcove,
    identify,
    identify_group,
    lookup_coxeter_diagram,
    mirror_closure,
    parallel_interior_mirrors,
    seed_point,
    special_vertex,
)
from .simplex_file import SimplexLoader, format_simplex, parse_simplex, write_simplex_file

__all__ = [
    "Identification",
    "Mirror",
    "MirrorArrangement",
    "Simplex",
    "SimplexLoader",
    "alcove_index",
    "format_simplex",
    "fundamental_alcove",
    "identify",
    "identify_group",
    "lookup_coxeter_diagram",
    "mirror_closure",
    "parallel_interior_mirrors",
    "parse_simplex",
    "seed_point",
    "special_vertex",
    "write_simplex_file",
]
