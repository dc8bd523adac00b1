"""
Reference data utilities for affine_simplex_families.

This module provides centralized access to the frozen reference data shipped
with the package: the simple roots of the exceptional root systems and the
Coxeter diagrams of the affine Weyl groups.
"""

import json
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, List, Tuple

from ..errors import RecordFormatError

SimpleRootRow = Tuple[int, Tuple[int, ...]]


@lru_cache(maxsize=None)
def get_simple_roots_table() -> Dict[str, List[SimpleRootRow]]:
    """
    Get the simple roots of the exceptional types.

    Returns:
        Dict[str, List[SimpleRootRow]]: Type label ("E8", "F4", ...) mapped to its
        ordered simple roots, each as (scale, integer coordinates).

    Raises:
        RecordFormatError: If a data line is malformed.
    """
    _data_dir = Path(__file__).parent
    table_path = _data_dir / "simple_roots.txt"
    table: Dict[str, List[SimpleRootRow]] = {}
    with open(table_path, "r", encoding="utf-8") as f:
        for line_number, line in enumerate(f, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split()
            try:
                label, scale, coords = fields[0], int(fields[1]), tuple(int(x) for x in fields[2:])
            except (IndexError, ValueError) as e:
                raise RecordFormatError(f"{table_path.name}:{line_number}: {e}") from e
            if not coords:
                raise RecordFormatError(f"{table_path.name}:{line_number}: no coordinates")
            table.setdefault(label, []).append((scale, coords))
    return table


@lru_cache(maxsize=None)
def get_affine_diagram_table() -> Dict[str, Dict[str, Any]]:
    """
    Get the Coxeter diagrams of the affine Weyl groups.

    Returns:
        Dict[str, Dict[str, Any]]: ASCII group label ("E8~") mapped to
        {"nodes": int, "edges": [[i, j, k], ...]}.
    """
    _data_dir = Path(__file__).parent
    table_path = _data_dir / "affine_diagrams.json"
    with open(table_path, "r", encoding="utf-8") as f:
        _table = json.load(f)
    return {label: entry for label, entry in _table.items() if not label.startswith("_")}
