"""
Per-level frontier checkpoints of the basis search.

After each completed search level the surviving partial bases are written to
<directory>/level_<k>.json. A resumed run restarts after the deepest level
whose file matches the run (group, model, prune flag).
"""

import json
import logging
import os
import time
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

from ..errors import CheckpointError
from ..roots import GroupType

logger = logging.getLogger(__name__)

CHECKPOINT_FORMAT = "affine-simplex-frontier"
CHECKPOINT_VERSION = 1

Frontier = List[Tuple[int, ...]]


def _level_path(directory: Path, level: int) -> Path:
    return directory / f"level_{level}.json"


def save_level(
    directory: Union[str, Path],
    target: GroupType,
    model: GroupType,
    prune: bool,
    level: int,
    frontier: Sequence[Sequence[int]],
) -> Path:
    """Write the frontier of a completed level; the file is replaced atomically."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    path = _level_path(directory, level)
    payload = {
        "format": CHECKPOINT_FORMAT,
        "version": CHECKPOINT_VERSION,
        "group": target.label,
        "model": model.label,
        "prune": prune,
        "level": level,
        "size": len(frontier),
        "timestamp": time.strftime("%Y-%m-%d %H:%M:%S"),
        "frontier": [list(members) for members in frontier],
    }
    tmp = path.with_suffix(".json.tmp")
    with open(tmp, "w", encoding="utf-8") as f:
        json.dump(payload, f)
    os.replace(tmp, path)
    logger.info("Checkpointed level %d (%d bases) to %s", level, len(frontier), path)
    return path


def load_latest(
    directory: Union[str, Path],
    target: GroupType,
    model: GroupType,
    prune: bool,
    max_level: int,
) -> Optional[Tuple[int, Frontier]]:
    """Deepest compatible checkpoint at or below max_level, or None.

    Raises:
        CheckpointError: If a level file belongs to another group or model.
    """
    directory = Path(directory)
    if not directory.is_dir():
        return None
    for level in range(max_level, 0, -1):
        path = _level_path(directory, level)
        if not path.exists():
            continue
        try:
            with open(path, "r", encoding="utf-8") as f:
                payload = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            logger.warning("Skipping unreadable checkpoint %s: %s", path, e)
            continue
        if not isinstance(payload, dict):
            logger.warning("Skipping checkpoint %s: not a JSON object", path)
            continue
        known = (payload.get("format"), payload.get("version"))
        if known != (CHECKPOINT_FORMAT, CHECKPOINT_VERSION):
            logger.warning("Skipping checkpoint %s with unknown format", path)
            continue
        if payload.get("group") != target.label or payload.get("model") != model.label:
            raise CheckpointError(
                f"{path} belongs to a {payload.get('group')} run, not {target.label}"
            )
        if payload.get("prune") != prune or payload.get("level") != level:
            logger.warning("Skipping checkpoint %s from a run with other options", path)
            continue
        frontier = [tuple(int(i) for i in members) for members in payload.get("frontier", [])]
        if any(len(members) != level for members in frontier):
            logger.warning("Skipping inconsistent checkpoint %s", path)
            continue
        logger.info("Resuming after level %d from %s (%d bases)", level, path, len(frontier))
        return level, frontier
    return None
