"""
Tests for frontier checkpoints
"""

import json
import tempfile
from pathlib import Path

import pytest

from affine_simplex_families.enumeration import load_latest, save_level
from affine_simplex_families.errors import CheckpointError
from affine_simplex_families.roots import GroupType

TARGET = GroupType("D", 5, True)
MODEL = GroupType("D", 5)


@pytest.fixture
def checkpoint_dir():
    with tempfile.TemporaryDirectory() as tmp:
        yield Path(tmp)


class TestSaveLevel:
    """Test writing checkpoints."""

    def test_writes_json_payload(self, checkpoint_dir):
        path = save_level(checkpoint_dir, TARGET, MODEL, True, 2, [(0, 3), (0, 7)])
        assert path.name == "level_2.json"
        payload = json.loads(path.read_text(encoding="utf-8"))
        assert payload["group"] == "D5~"
        assert payload["model"] == "D5"
        assert payload["size"] == 2
        assert payload["frontier"] == [[0, 3], [0, 7]]
        assert not list(checkpoint_dir.glob("*.tmp"))

    def test_creates_directory(self, checkpoint_dir):
        nested = checkpoint_dir / "a" / "b"
        save_level(nested, TARGET, MODEL, True, 1, [(0,)])
        assert (nested / "level_1.json").exists()


class TestLoadLatest:
    """Test resuming from checkpoints."""

    def test_missing_directory(self, checkpoint_dir):
        assert load_latest(checkpoint_dir / "absent", TARGET, MODEL, True, 5) is None

    def test_picks_deepest_level(self, checkpoint_dir):
        save_level(checkpoint_dir, TARGET, MODEL, True, 2, [(0, 1)])
        save_level(checkpoint_dir, TARGET, MODEL, True, 3, [(0, 1, 4), (0, 2, 5)])
        assert load_latest(checkpoint_dir, TARGET, MODEL, True, 5) == (3, [(0, 1, 4), (0, 2, 5)])

    def test_respects_max_level(self, checkpoint_dir):
        save_level(checkpoint_dir, TARGET, MODEL, True, 2, [(0, 1)])
        save_level(checkpoint_dir, TARGET, MODEL, True, 3, [(0, 1, 4)])
        assert load_latest(checkpoint_dir, TARGET, MODEL, True, 2) == (2, [(0, 1)])

    def test_corrupt_file_falls_back(self, checkpoint_dir):
        save_level(checkpoint_dir, TARGET, MODEL, True, 2, [(0, 1)])
        (checkpoint_dir / "level_3.json").write_text("{not json", encoding="utf-8")
        assert load_latest(checkpoint_dir, TARGET, MODEL, True, 5) == (2, [(0, 1)])

    def test_unknown_format_skipped(self, checkpoint_dir):
        (checkpoint_dir / "level_2.json").write_text(json.dumps({"format": "other"}))
        assert load_latest(checkpoint_dir, TARGET, MODEL, True, 5) is None

    def test_other_prune_flag_skipped(self, checkpoint_dir):
        save_level(checkpoint_dir, TARGET, MODEL, False, 2, [(0, 1)])
        assert load_latest(checkpoint_dir, TARGET, MODEL, True, 5) is None

    def test_inconsistent_frontier_skipped(self, checkpoint_dir):
        save_level(checkpoint_dir, TARGET, MODEL, True, 3, [(0, 1)])
        assert load_latest(checkpoint_dir, TARGET, MODEL, True, 5) is None

    def test_other_group_raises(self, checkpoint_dir):
        save_level(checkpoint_dir, GroupType("B", 5, True), GroupType("B", 5), True, 2, [(0, 1)])
        with pytest.raises(CheckpointError):
            load_latest(checkpoint_dir, TARGET, MODEL, True, 5)
