"""
Run configuration for enumeration and the alcove oracle.

Defaults live here; the CLI builds these objects from its flags, and the
default worker count can be set through the AFFINE_SIMPLEX_THREADS
environment variable.
"""

import logging
import os
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional

logger = logging.getLogger(__name__)

THREADS_ENV_VAR = "AFFINE_SIMPLEX_THREADS"
EXTENDED_ENV_VAR = "AFFINE_SIMPLEX_EXTENDED"


def default_workers() -> int:
    """Return the worker count from the environment, or 1 when unset or invalid."""
    raw = os.environ.get(THREADS_ENV_VAR, "").strip()
    if not raw:
        return 1
    try:
        value = int(raw)
    except ValueError:
        logger.warning("Ignoring %s=%r: not an integer", THREADS_ENV_VAR, raw)
        return 1
    if value < 1:
        logger.warning("Ignoring %s=%r: must be positive", THREADS_ENV_VAR, raw)
        return 1
    return value


def extended_runs_enabled() -> bool:
    """Whether the long-running E7/E8 reproductions are switched on."""
    return os.environ.get(EXTENDED_ENV_VAR, "").strip() not in ("", "0", "false", "no")


@dataclass(frozen=True)
class EnumerationSettings:
    """Options of the enumeration pipeline.

    Args:
        prune: Merge partial bases with equal invariants at every search level.
            When False every generating basis is produced; both modes start
            from the same short seed line, since W is transitive on roots of
            one length.
        workers: Number of worker processes for the search (1 = in-process).
        checkpoint_dir: Directory for per-level frontier checkpoints, or None.
    """

    prune: bool = True
    workers: int = 1
    checkpoint_dir: Optional[Path] = None

    def __post_init__(self):
        if self.workers < 1:
            raise ValueError(f"workers must be positive, got {self.workers}")


@dataclass(frozen=True)
class AlcoveSettings:
    """Options of the mirror-closure oracle.

    Args:
        ball_factor: Radius of the bounding ball as a multiple of the circumradius.
        max_directions: Budget on the number of mirror directions (root lines).
        max_mirrors: Budget on the number of mirrors inside the ball.
    """

    ball_factor: Fraction = Fraction(3)
    max_directions: int = 512
    max_mirrors: int = 200000

    def __post_init__(self):
        if self.ball_factor <= 0:
            raise ValueError(f"ball_factor must be positive, got {self.ball_factor}")
