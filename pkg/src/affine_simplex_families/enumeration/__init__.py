"""
The enumeration pipeline, its data model, checkpoints and record format.
"""

from .checkpoint import load_latest, save_level
from .family import CandidateBasis, Family
from .pipeline import (
    compact_representative,
    coxeter_family,
    disambiguate_bc,
    enumerate_families,
    enumerate_step1,
    enumerate_step2,
    model_type,
)
from .pruning import gram_code, line_profile, partial_key
from .records import (
    FamilyRecord,
    RecordLoader,
    dihedral_angles,
    families_digest,
    family_p_code,
    format_records,
    records_digest,
    write_records,
)

__all__ = [
    "CandidateBasis",
    "Family",
    "FamilyRecord",
    "RecordLoader",
    "compact_representative",
    "coxeter_family",
    "dihedral_angles",
    "disambiguate_bc",
    "enumerate_families",
    "enumerate_step1",
    "enumerate_step2",
    "families_digest",
    "family_p_code",
    "format_records",
    "gram_code",
    "line_profile",
    "load_latest",
    "model_type",
    "partial_key",
    "records_digest",
    "save_level",
    "write_records",
]
