"""
Line-delimited family records.

A record file starts with a versioned header followed by one tab-separated
line per family, sorted by canonical key:

    target  key  pcode  scale  vectors  lambda  angles

vectors are ';'-separated integer coordinate lists (the represented vector
is coords / scale), lambda is the positive integer dependency, and angles
lists the dihedral angles m/k (in units of pi) of the compact representative
over the upper triangle of the stored vector order. pcode is '-' for groups
without a p-code encoding. Every field is an integer or a ratio of
integers.
"""

import hashlib
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from ..diagram import CanonicalKey, p_code_e_series, p_code_f4
from ..errors import AffineSimplexError, RecordFormatError
from ..report.base import Colors, ColoredOutput
from ..roots import PROPORTIONAL, GroupType, RootVector, angle_class
from .family import Family

logger = logging.getLogger(__name__)

RECORD_FORMAT = "affine-simplex-families records"
RECORD_VERSION = 1
FIELDS = ("target", "key", "pcode", "scale", "vectors", "lambda", "angles")
HEADER = (
    f"# {RECORD_FORMAT}\n"
    f"# version {RECORD_VERSION}\n"
    f"# fields: {' '.join(FIELDS)}\n"
)


def family_p_code(f: Family) -> Optional[int]:
    """p-code of E-series and F4 families, None otherwise."""
    if f.target.series == "E":
        return p_code_e_series(f)
    if f.target.series == "F":
        return p_code_f4(f)
    return None


def dihedral_angles(vectors: Sequence[RootVector]) -> Tuple[Tuple[int, int], ...]:
    """(m, k) of every facet pair, upper triangle, from outward normals."""
    result = []
    for i in range(len(vectors)):
        for j in range(i + 1, len(vectors)):
            cls = angle_class(vectors[i], vectors[j])
            if cls is PROPORTIONAL:
                raise ValueError(f"normals {i} and {j} are parallel")
            dihedral = cls.as_dihedral()
            result.append((dihedral.m, dihedral.k))
    return tuple(result)


@dataclass(frozen=True)
class FamilyRecord:
    """One record line, with every field already in integer form."""

    target: GroupType
    key: str
    pcode: Optional[int]
    scale: int
    vectors: Tuple[Tuple[int, ...], ...]
    dependency: Tuple[int, ...]
    angles: Tuple[Tuple[int, int], ...]

    @classmethod
    def from_family(cls, f: Family) -> "FamilyRecord":
        return cls(
            target=f.target,
            key=f.canonical_key.text,
            pcode=family_p_code(f),
            scale=f.scale,
            vectors=tuple(v.coords for v in f.vectors),
            dependency=f.dependency,
            angles=dihedral_angles(f.vectors),
        )

    def to_line(self) -> str:
        return "\t".join(
            [
                self.target.label,
                self.key,
                "-" if self.pcode is None else str(self.pcode),
                str(self.scale),
                ";".join(",".join(str(x) for x in v) for v in self.vectors),
                ",".join(str(x) for x in self.dependency),
                ",".join(f"{m}/{k}" for m, k in self.angles),
            ]
        )

    @classmethod
    def parse(cls, line: str) -> "FamilyRecord":
        """Parse one record line.

        Raises:
            RecordFormatError: If a field is missing or malformed.
        """
        parts = line.rstrip("\n").split("\t")
        if len(parts) != len(FIELDS):
            raise RecordFormatError(
                f"expected {len(FIELDS)} tab-separated fields, got {len(parts)}"
            )
        target, key, pcode, scale, vectors, dependency, angles = parts
        try:
            group = GroupType.parse(target)
            if not key.isdigit():
                raise ValueError(f"key {key!r} is not a digit string")
            vector_rows = tuple(tuple(int(x) for x in v.split(",")) for v in vectors.split(";"))
            angle_pairs = []
            if angles:
                for item in angles.split(","):
                    m, k = item.split("/")
                    angle_pairs.append((int(m), int(k)))
            return cls(
                target=group,
                key=key,
                pcode=None if pcode == "-" else int(pcode),
                scale=int(scale),
                vectors=vector_rows,
                dependency=tuple(int(x) for x in dependency.split(",")),
                angles=tuple(angle_pairs),
            )
        except (ValueError, AffineSimplexError) as e:
            raise RecordFormatError(f"malformed record: {e}") from e

    def to_family(self) -> Family:
        """Rebuild the Family and check it against the stored key.

        Raises:
            RecordFormatError: If the vectors do not reproduce the key.
        """
        try:
            family = Family.from_vectors(
                self.target, [RootVector(v, self.scale) for v in self.vectors]
            )
        except (ValueError, AffineSimplexError) as e:
            raise RecordFormatError(f"record vectors do not form a family: {e}") from e
        if family.canonical_key != CanonicalKey.parse(self.key):
            raise RecordFormatError(
                f"record key {self.key} does not match its vectors ({family.canonical_key})"
            )
        return family

    def digest_line(self) -> str:
        """Fields that do not depend on which representative was stored."""
        angles = ",".join(f"{m}/{k}" for m, k in sorted(self.angles))
        pcode = "-" if self.pcode is None else str(self.pcode)
        return f"{self.target.label}\t{self.key}\t{pcode}\t{angles}\n"


def format_records(families: Iterable[Family]) -> str:
    """Header plus one line per family, sorted by canonical key."""
    records = sorted(
        (FamilyRecord.from_family(f) for f in families),
        key=lambda r: (r.target.label, CanonicalKey.parse(r.key)),
    )
    return HEADER + "".join(r.to_line() + "\n" for r in records)


def records_digest(records: Iterable[FamilyRecord]) -> str:
    """SHA-256 over the representative-independent fields of the sorted records."""
    digest = hashlib.sha256()
    for line in sorted(r.digest_line() for r in records):
        digest.update(line.encode("utf-8"))
    return digest.hexdigest()


def families_digest(families: Iterable[Family]) -> str:
    return records_digest(FamilyRecord.from_family(f) for f in families)


def write_records(families: Iterable[Family], output_file: Union[str, Path]) -> Path:
    path = Path(output_file)
    with open(path, "w", encoding="utf-8") as f:
        f.write(format_records(families))
    logger.info("Wrote records to %s", path)
    return path


class RecordLoader(ColoredOutput):
    """Loads record files, reporting problems instead of raising."""

    def __init__(self, use_colors: bool = True):
        self.use_colors = use_colors

    def load_records_from_string(self, text: str) -> Dict[str, Any]:
        """
        Parse record text.

        Returns:
            Dict containing:
                - 'success': bool, False if the header or any line is bad
                - 'records': List of parsed FamilyRecord objects
                - 'errors': List of error messages
        """
        result: Dict[str, Any] = {"success": False, "records": [], "errors": []}
        lines = text.splitlines()
        header = [line for line in lines if line.startswith("#")]
        if not header or header[0] != f"# {RECORD_FORMAT}":
            result["errors"].append("missing record header")
            self._print_status("✘ Not a family record file", Colors.RED)
            return result
        if f"# version {RECORD_VERSION}" not in header:
            result["errors"].append("unsupported record version")
            self._print_status("✘ Unsupported record version", Colors.RED)
            return result
        records: List[FamilyRecord] = []
        for number, line in enumerate(lines, start=1):
            if not line.strip() or line.startswith("#"):
                continue
            try:
                records.append(FamilyRecord.parse(line))
            except RecordFormatError as e:
                result["errors"].append(f"line {number}: {e}")
                self._print_status(f"✘ Line {number}: {e}", Colors.RED)
        if result["errors"]:
            return result
        result.update({"success": True, "records": records})
        self._print_status(f"✓ Loaded {len(records)} record(s)", Colors.GREEN)
        return result

    def load_records_from_file(self, file_path: Union[str, Path]) -> Dict[str, Any]:
        try:
            with open(file_path, "r", encoding="utf-8") as f:
                text = f.read()
        except OSError as e:
            self._print_status(f"✘ Cannot read {file_path}: {e}", Colors.RED)
            return {"success": False, "records": [], "errors": [str(e)]}
        return self.load_records_from_string(text)
