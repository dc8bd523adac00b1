"""
JSON run manifests written beside command output.
"""

import json
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Dict, Union


@dataclass
class RunManifest:
    """What was run and a digest of what it produced.

    The digest covers only representative-independent record fields, so
    equal inputs give equal digests whatever the worker count or pruning mode.
    """

    command: str
    target: str
    flags: Dict[str, Any] = field(default_factory=dict)
    wall_time: float = 0.0
    family_count: int = 0
    digest: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def write(self, output_file: Union[str, Path]) -> Path:
        path = Path(output_file)
        with open(path, "w", encoding="utf-8") as f:
            json.dump(self.to_dict(), f, indent=2, sort_keys=True)
            f.write("\n")
        return path


def manifest_path(output_file: Union[str, Path]) -> Path:
    """<output>.manifest.json"""
    path = Path(output_file)
    return path.with_name(path.name + ".manifest.json")
