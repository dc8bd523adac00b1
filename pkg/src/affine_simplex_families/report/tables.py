"""
Coloured text tables for the counts, reproduce and enumerate commands.

Everything here takes plain rows and returns a string; printing is left to
the caller.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence

from .base import Colors

WIDTH = 72


def _colorize(text: str, color: str, use_colors: bool = True) -> str:
    """Apply color to text."""
    if use_colors:
        return f"{color}{text}{Colors.RESET}"
    return text


def format_match(expected: int, computed: Optional[int], use_colors: bool = True) -> str:
    """✓/✘ for a computed value, '-' when it was not computed."""
    if computed is None:
        return _colorize("-", Colors.DIM, use_colors)
    if computed == expected:
        return _colorize("✓", Colors.GREEN, use_colors)
    return _colorize("✘", Colors.RED, use_colors)


@dataclass(frozen=True)
class CountRow:
    """One group: published count, enumerated count (None if skipped), seconds."""

    label: str
    expected: int
    computed: Optional[int] = None
    seconds: Optional[float] = None
    digest: Optional[str] = None

    @property
    def matches(self) -> bool:
        return self.computed is None or self.computed == self.expected


def counts_table(rows: Sequence[CountRow], title: str, use_colors: bool = True) -> str:
    lines: List[str] = []
    lines.append(_colorize("=" * WIDTH, Colors.TITLE, use_colors))
    lines.append(_colorize(title, Colors.TITLE, use_colors))
    lines.append(_colorize("=" * WIDTH, Colors.TITLE, use_colors))
    lines.append(
        _colorize(
            f"{'group':<8}{'closed form':>12}{'enumerated':>12}{'match':>8}{'time':>10}",
            Colors.HEADER,
            use_colors,
        )
    )
    for row in rows:
        computed = "-" if row.computed is None else str(row.computed)
        seconds = "" if row.seconds is None else f"{row.seconds:.2f}s"
        match = format_match(row.expected, row.computed, use_colors)
        lines.append(
            f"{row.label:<8}{row.expected:>12}{computed:>12}{'':>7}{match}{seconds:>10}"
        )
    lines.append(_colorize("-" * WIDTH, Colors.HEADER, use_colors))
    checked = [row for row in rows if row.computed is not None]
    failed = [row for row in checked if not row.matches]
    summary = f"{len(checked) - len(failed)}/{len(checked)} enumerated counts match"
    lines.append(_colorize(summary, Colors.RED if failed else Colors.GREEN, use_colors))
    return "\n".join(lines)


def reproduction_report(
    rows: Sequence[CountRow], checks: Sequence[tuple] = (), use_colors: bool = True
) -> str:
    """Counts table followed by named pass/fail checks, e.g. prune validation."""
    lines = [counts_table(rows, "FAMILY COUNTS: PUBLISHED VS COMPUTED", use_colors)]
    if checks:
        lines.append("")
        lines.append(_colorize("Consistency checks", Colors.HEADER + Colors.BOLD, use_colors))
        for name, passed in checks:
            color = Colors.GREEN if passed else Colors.RED
            mark = _colorize("✓" if passed else "✘", color, use_colors)
            lines.append(f"  {mark} {name}")
    digests = [row for row in rows if row.digest]
    if digests:
        lines.append("")
        lines.append(_colorize("Digests", Colors.HEADER + Colors.BOLD, use_colors))
        for row in digests:
            lines.append(f"  {row.label:<8}{_colorize(row.digest, Colors.DESCRIPTION, use_colors)}")
    return "\n".join(lines)


def family_listing(records: Sequence, use_colors: bool = True) -> str:
    """Human-readable listing of family records."""
    lines: List[str] = []
    for number, record in enumerate(records, start=1):
        pcode = "" if record.pcode is None else f"  p={record.pcode}"
        lines.append(
            f"{number:>5}. {_colorize(record.target.label, Colors.CYAN, use_colors)}  "
            f"key {_colorize(record.key, Colors.KEY, use_colors)}{pcode}"
        )
        angles = " ".join(f"{m}/{k}" for m, k in record.angles if k != 2)
        lambdas = ",".join(str(x) for x in record.dependency)
        detail = f"       lambda ({lambdas})  angles/pi {angles or '-'}"
        lines.append(_colorize(detail, Colors.DESCRIPTION, use_colors))
    return "\n".join(lines)
