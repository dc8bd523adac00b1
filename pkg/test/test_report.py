"""
Tests for report tables and run manifests
"""

import json
import tempfile
from pathlib import Path

from affine_simplex_families.enumeration import FamilyRecord, coxeter_family
from affine_simplex_families.report import (
    Colors,
    CountRow,
    RunManifest,
    counts_table,
    family_listing,
    format_match,
    manifest_path,
    reproduction_report,
    strip_ansi,
)
from affine_simplex_families.roots import GroupType


class TestFormatMatch:
    """Test the match column."""

    def test_values(self):
        assert format_match(3, 3, use_colors=False) == "✓"
        assert format_match(3, 2, use_colors=False) == "✘"
        assert format_match(3, None, use_colors=False) == "-"

    def test_colors(self):
        assert format_match(3, 3) == f"{Colors.GREEN}✓{Colors.RESET}"
        assert strip_ansi(format_match(3, 2)) == "✘"


class TestCountsTable:
    """Test the counts table."""

    def test_rows_and_summary(self):
        rows = [CountRow("D4~", 2, 2, 0.5), CountRow("D8~", 12)]
        text = counts_table(rows, "SERIES D", use_colors=False)
        assert "SERIES D" in text
        assert "0.50s" in text
        assert text.splitlines()[-1] == "1/1 enumerated counts match"

    def test_mismatch(self):
        row = CountRow("B4~", 3, 4)
        assert not row.matches
        assert "0/1 enumerated counts match" in counts_table([row], "B", use_colors=False)

    def test_skipped_row_matches(self):
        assert CountRow("E8~", 1736).matches


class TestReproductionReport:
    """Test the reproduce report."""

    def test_checks_and_digests(self):
        rows = [CountRow("G2~", 2, 2, 0.1, "ab" * 32)]
        text = reproduction_report(rows, [("G2~: Coxeter family present", True)], False)
        assert "✓ G2~: Coxeter family present" in text
        assert "ab" * 32 in text
        assert "\x1b" not in text


class TestFamilyListing:
    """Test the human-readable listing."""

    def test_listing(self):
        record = FamilyRecord.from_family(coxeter_family(GroupType("G", 2, True)))
        text = family_listing([record], use_colors=False)
        lines = text.splitlines()
        assert lines[0].startswith("    1. G2~  key ")
        assert "lambda (" in lines[1]
        assert "1/6" in lines[1]


class TestRunManifest:
    """Test manifest files."""

    def test_path(self):
        assert manifest_path("out/e6.tsv") == Path("out/e6.tsv.manifest.json")

    def test_write(self):
        manifest = RunManifest("enumerate", "E6~", {"prune": True}, 1.5, 17, "cafe")
        with tempfile.TemporaryDirectory() as tmp:
            path = manifest.write(Path(tmp) / "m.json")
            payload = json.loads(path.read_text(encoding="utf-8"))
        assert payload == {
            "command": "enumerate",
            "digest": "cafe",
            "family_count": 17,
            "flags": {"prune": True},
            "target": "E6~",
            "wall_time": 1.5,
        }
