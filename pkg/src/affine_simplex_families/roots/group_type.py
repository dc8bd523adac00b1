"""
Classification labels for finite and affine reflection groups.
"""

import re
from dataclasses import dataclass

from ..errors import UnsupportedType

SERIES = "ABCDEFG"
_LABEL_PATTERN = re.compile(r"^\s*([A-Ga-g])\s*(\d+)\s*(~?)\s*$")


@dataclass(frozen=True, order=True)
class GroupType:
    """Series letter plus rank, for a finite Weyl group or its affine extension.

    Args:
        series: One of A..G.
        rank: Rank of the finite root system (the affine group acts on R^rank).
        affine: True for the affine group X~_n.

    Raises:
        UnsupportedType: If the combination does not name a crystallographic type.
    """

    series: str
    rank: int
    affine: bool = False

    def __post_init__(self):
        if self.series not in SERIES or len(self.series) != 1:
            raise UnsupportedType(f"unknown series {self.series!r}")
        if not isinstance(self.rank, int) or self.rank < 1:
            raise UnsupportedType(f"rank must be a positive integer, got {self.rank!r}")
        minimum = {"A": 1, "B": 2, "C": 2, "D": 3}.get(self.series)
        if minimum is not None and self.rank < minimum:
            raise UnsupportedType(f"{self.series}{self.rank} needs rank >= {minimum}")
        if self.series == "E" and self.rank not in (6, 7, 8):
            raise UnsupportedType(f"E{self.rank} is not a Weyl group")
        if self.series == "F" and self.rank != 4:
            raise UnsupportedType(f"F{self.rank} is not a Weyl group")
        if self.series == "G" and self.rank != 2:
            raise UnsupportedType(f"G{self.rank} is not a Weyl group")

    @property
    def label(self) -> str:
        """ASCII label: "E8" for finite, "E8~" for affine."""
        return f"{self.series}{self.rank}{'~' if self.affine else ''}"

    def __str__(self) -> str:
        return self.label

    @classmethod
    def parse(cls, text: str) -> "GroupType":
        """Parse an ASCII label such as "B5~" or "F4"."""
        match = _LABEL_PATTERN.match(text)
        if not match:
            raise UnsupportedType(f"cannot parse group label {text!r}")
        series, rank, tilde = match.groups()
        return cls(series.upper(), int(rank), bool(tilde))

    def finite(self) -> "GroupType":
        return GroupType(self.series, self.rank, False)

    def as_affine(self) -> "GroupType":
        return GroupType(self.series, self.rank, True)

    def canonical(self) -> "GroupType":
        """Identify coinciding labels: B~2 is the same group as C~2."""
        if self.affine and self.series == "B" and self.rank == 2:
            return GroupType("C", 2, True)
        return self

    @property
    def simply_laced(self) -> bool:
        return self.series in "ADE"

    def check_enumerable(self) -> "GroupType":
        """Validate an enumeration target and return it.

        Raises:
            UnsupportedType: For finite labels, A~1 and D~3 (use A3~).
        """
        if not self.affine:
            raise UnsupportedType(f"{self.label} is finite; enumeration targets are affine")
        if self.series == "A" and self.rank < 2:
            raise UnsupportedType("A1~ has no compact simplex with crystallographic angles")
        if self.series == "D" and self.rank < 4:
            raise UnsupportedType(f"{self.label} coincides with A3~; use that label")
        return self
