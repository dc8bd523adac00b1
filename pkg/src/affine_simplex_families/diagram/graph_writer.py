"""
Graph-description (DOT) text for diagrams.

Output is deterministic: nodes in index order, edges sorted by endpoints.
Edge attribute k carries the angle class, m the dihedral numerator of a
generalized Coxeter diagram; marked Gamma nodes carry marked=true.
"""

from pathlib import Path
from typing import List, Union

from .family_diagram import FamilyDiagram, GenCoxeterDiagram
from .gamma import GammaGraph


def _header(kind: str, name: str) -> List[str]:
    return [f'graph "{name}" {{', f'  comment="{kind}";']


def family_diagram_dot(d: FamilyDiagram, name: str = "family") -> str:
    lines = _header("family diagram", name)
    for node in range(d.size):
        lines.append(f"  n{node};")
    for i, j, k in d.edges:
        lines.append(f"  n{i} -- n{j} [k={k}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def gen_coxeter_dot(d: GenCoxeterDiagram, name: str = "coxeter") -> str:
    lines = _header("generalized Coxeter diagram", name)
    for node in range(d.size):
        lines.append(f"  n{node};")
    for i, j, angle in d.edges:
        lines.append(f"  n{i} -- n{j} [k={angle.k}, m={angle.m}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def gamma_dot(g: GammaGraph, name: str = "gamma") -> str:
    lines = _header(f"Gamma graph, {g.model} model", name)
    for node in range(g.node_count):
        attribute = " [marked=true]" if node in g.marks else ""
        lines.append(f"  v{node}{attribute};")
    for i, j, sign in sorted(g.edges):
        lines.append(f'  v{i} -- v{j} [sign="{sign}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_dot(text: str, output_file: Union[str, Path]) -> Path:
    """Write DOT text to a file and return its path."""
    path = Path(output_file)
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)
    return path
