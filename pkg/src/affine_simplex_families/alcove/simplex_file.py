"""
Simplex description files.

    # affine-simplex-families simplex
    # version 1
    scale 2
    facet 1,-1,-1,-1,-1,-1,-1,1 1
    ...

Each facet line gives an outward integer normal (the represented normal is
coords / scale) and a rational offset p or p/q; the simplex is the set of x
in the span of the normals with (normal, x) <= offset for every facet.
"""

from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Tuple, Union

from ..errors import AffineSimplexError, RecordFormatError
from ..report.base import ColoredOutput, Colors
from .mirror import Simplex

SIMPLEX_FORMAT = "affine-simplex-families simplex"
SIMPLEX_VERSION = 1


def format_simplex(s: Simplex, scale: int = 1) -> str:
    """File text for s; normals are written as outward integer vectors."""
    lines = [f"# {SIMPLEX_FORMAT}", f"# version {SIMPLEX_VERSION}", f"scale {scale}"]
    for normal, mirror, sign in zip(s.outward_normals, s.facets, s.signs):
        offset = sign * mirror.offset / scale
        coords = ",".join(str(x) for x in normal)
        lines.append(f"facet {coords} {offset}")
    return "\n".join(lines) + "\n"


def write_simplex_file(s: Simplex, output_file: Union[str, Path], scale: int = 1) -> Path:
    path = Path(output_file)
    with open(path, "w", encoding="utf-8") as f:
        f.write(format_simplex(s, scale))
    return path


def parse_simplex(text: str) -> Tuple[List[Tuple[int, ...]], List[Fraction]]:
    """Normals and offsets (already multiplied by the scale) of a simplex file.

    Raises:
        RecordFormatError: On any malformed line.
    """
    scale = 1
    normals: List[Tuple[int, ...]] = []
    offsets: List[Fraction] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            if parts[0] == "scale" and len(parts) == 2:
                scale = int(parts[1])
                if scale < 1:
                    raise ValueError("scale must be positive")
            elif parts[0] == "facet" and len(parts) == 3:
                normals.append(tuple(int(x) for x in parts[1].split(",")))
                offsets.append(Fraction(parts[2]))
            else:
                raise ValueError(f"unexpected line {line!r}")
        except (ValueError, ZeroDivisionError) as e:
            raise RecordFormatError(f"line {number}: {e}") from e
    if len(normals) < 2:
        raise RecordFormatError("a simplex needs at least two facets")
    if len({len(n) for n in normals}) != 1:
        raise RecordFormatError("facet normals have different lengths")
    return normals, [c * scale for c in offsets]


class SimplexLoader(ColoredOutput):
    """Loads simplex files, reporting problems instead of raising."""

    def __init__(self, use_colors: bool = True):
        self.use_colors = use_colors

    def load_simplex_from_string(self, text: str) -> Dict[str, Any]:
        """
        Parse and realize a simplex.

        Returns:
            Dict containing:
                - 'success': bool indicating if loading was successful
                - 'simplex': the Simplex, or None
                - 'errors': List of error messages
        """
        result: Dict[str, Any] = {"success": False, "simplex": None, "errors": []}
        try:
            normals, offsets = parse_simplex(text)
            simplex = Simplex.from_facets(normals, offsets)
        except (AffineSimplexError, ValueError) as e:
            result["errors"].append(str(e))
            self._print_status(f"✘ Invalid simplex: {e}", Colors.RED)
            return result
        result.update({"success": True, "simplex": simplex})
        self._print_status(
            f"✓ Loaded a {simplex.dimension}-simplex with {len(normals)} facets", Colors.GREEN
        )
        return result

    def load_simplex_from_file(self, file_path: Union[str, Path]) -> Dict[str, Any]:
        try:
            with open(file_path, "r", encoding="utf-8") as f:
                text = f.read()
        except OSError as e:
            self._print_status(f"✘ Cannot read {file_path}: {e}", Colors.RED)
            return {"success": False, "simplex": None, "errors": [str(e)]}
        return self.load_simplex_from_string(text)
