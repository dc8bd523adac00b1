"""
Command-line interface.

    affine-simplex enumerate E6~ --output e6.tsv
    affine-simplex counts D --max-rank 8 --enumerate-up-to 6
    affine-simplex diagram e6.tsv --index 3 --emit coxeter
    affine-simplex identify triangle.txt
    affine-simplex reproduce --extended

Exit codes: 0 success, 2 usage error, 3 data error, 4 mismatch.
"""

import argparse
import contextlib
import logging
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from .alcove import SimplexLoader, identify, write_simplex_file
from .diagram import (
    family_diagram_dot,
    gamma_dot,
    gamma_graph,
    gen_coxeter_diagram,
    gen_coxeter_dot,
    write_dot,
)
from .enumeration import (
    FamilyRecord,
    RecordLoader,
    compact_representative,
    coxeter_family,
    enumerate_families,
    families_digest,
    format_records,
)
from .errors import (
    AffineSimplexError,
    BudgetExceeded,
    NonCrystallographicAngle,
    UnsupportedType,
)
from .report import Colors, CountRow, RunManifest, counts_table, family_listing, manifest_path
from .report import reproduction_report, strip_ansi
from .roots import GroupType
from .series import construct_series_families, count_families
from .settings import AlcoveSettings, EnumerationSettings, default_workers, extended_runs_enabled

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DATA = 3
EXIT_MISMATCH = 4

DESK_GROUPS = (
    [f"A{n}~" for n in range(2, 7)]
    + [f"B{n}~" for n in range(3, 7)]
    + [f"C{n}~" for n in range(2, 7)]
    + [f"D{n}~" for n in range(4, 7)]
    + ["G2~", "F4~", "E6~"]
)
EXTENDED_GROUPS = ["E7~", "E8~"]
PRUNE_CHECK_MAX_RANK = 5


def _print(message: str, color: str = Colors.WHITE, use_colors: bool = True) -> None:
    print(f"{color}{message}{Colors.RESET}" if use_colors else message)


def _error(message: str, use_colors: bool = True) -> None:
    text = f"✘ {message}"
    print(f"{Colors.RED}{text}{Colors.RESET}" if use_colors else text, file=sys.stderr)


def _configure_logging(verbosity: int) -> None:
    if verbosity <= 0:
        return
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s"))
    package_logger = logging.getLogger("affine_simplex_families")
    package_logger.addHandler(handler)
    package_logger.setLevel(logging.DEBUG if verbosity > 1 else logging.INFO)


def _parse_group(text: str) -> GroupType:
    return GroupType.parse(text).check_enumerable().canonical()


def _settings(args) -> EnumerationSettings:
    checkpoint = Path(args.checkpoint) if getattr(args, "checkpoint", None) else None
    return EnumerationSettings(
        prune=not getattr(args, "no_prune", False),
        workers=args.threads,
        checkpoint_dir=checkpoint,
    )


def cmd_enumerate(args) -> int:
    """Enumerate one group and emit its family records."""
    use_colors = not args.no_color
    try:
        group = _parse_group(args.group)
        settings = _settings(args)
    except (UnsupportedType, ValueError) as e:
        _error(str(e), use_colors)
        return EXIT_DATA
    began = time.time()
    try:
        families = enumerate_families(group, settings)
    except AffineSimplexError as e:
        _error(f"enumeration of {group.label} failed: {e}", use_colors)
        return EXIT_DATA
    elapsed = time.time() - began
    text = format_records(families)
    digest = families_digest(families)
    if args.output:
        try:
            output = Path(args.output)
            output.write_text(text, encoding="utf-8")
            RunManifest(
                command="enumerate",
                target=group.label,
                flags={"prune": settings.prune, "threads": settings.workers},
                wall_time=round(elapsed, 3),
                family_count=len(families),
                digest=digest,
            ).write(manifest_path(output))
            if args.simplex_dir:
                directory = Path(args.simplex_dir)
                directory.mkdir(parents=True, exist_ok=True)
                for number, family in enumerate(families, start=1):
                    write_simplex_file(
                        compact_representative(family),
                        directory / f"{group.label.rstrip('~')}_{number:04d}.txt",
                        family.scale,
                    )
        except OSError as e:
            _error(f"cannot write output: {e}", use_colors)
            return EXIT_DATA
    if args.format == "records":
        if not args.output:
            sys.stdout.write(text)
    else:
        records = [FamilyRecord.from_family(f) for f in families]
        print(family_listing(records, use_colors))
    if args.format == "records" and not args.output:
        return EXIT_OK
    summary = f"{len(families)} families generate {group.label} ({elapsed:.2f}s)"
    _print(f"✓ {summary}, digest {digest[:16]}", Colors.GREEN, use_colors)
    return EXIT_OK


def _series_groups(series: str, min_rank: int, max_rank: int) -> List[GroupType]:
    series = series.upper()
    fixed = {"E": [6, 7, 8], "F": [4], "G": [2]}
    if series in fixed:
        return [GroupType(series, n, True) for n in fixed[series] if min_rank <= n <= max_rank]
    lowest = {"A": 2, "B": 3, "C": 2, "D": 4}.get(series)
    if lowest is None:
        raise UnsupportedType(f"unknown series {series!r}")
    return [GroupType(series, n, True) for n in range(max(lowest, min_rank), max_rank + 1)]


def _timed_count(group: GroupType, settings: EnumerationSettings) -> Tuple[int, float, str]:
    began = time.time()
    families = enumerate_families(group, settings)
    return len(families), time.time() - began, families_digest(families)


def cmd_counts(args) -> int:
    """Closed-form and enumerated counts for one series."""
    use_colors = not args.no_color
    try:
        groups = _series_groups(args.series, args.min_rank, args.max_rank)
        settings = _settings(args)
    except (UnsupportedType, ValueError) as e:
        _error(str(e), use_colors)
        return EXIT_DATA
    rows = []
    for group in groups:
        computed = seconds = None
        if group.rank <= args.enumerate_up_to and (
            group.label not in EXTENDED_GROUPS or args.extended
        ):
            computed, seconds, _ = _timed_count(group, settings)
        rows.append(CountRow(group.label, count_families(group), computed, seconds))
    if args.format == "records":
        for row in rows:
            computed = "-" if row.computed is None else str(row.computed)
            print(f"{row.label}\t{row.expected}\t{computed}")
    else:
        print(counts_table(rows, f"FAMILY COUNTS: SERIES {args.series.upper()}", use_colors))
    return EXIT_OK if all(row.matches for row in rows) else EXIT_MISMATCH


def _select_record(records: Sequence[FamilyRecord], index: Optional[int], key: Optional[str]):
    if key is not None:
        for record in records:
            if record.key == key:
                return record
        raise ValueError(f"no record with key {key}")
    position = (index or 1) - 1
    if not 0 <= position < len(records):
        raise ValueError(f"record index {index} is outside 1..{len(records)}")
    return records[position]


def cmd_diagram(args) -> int:
    """Write the family, generalized Coxeter or Gamma diagram of one record."""
    use_colors = not args.no_color
    loader = RecordLoader(use_colors=use_colors)
    # keep stdout clean for DOT text
    with contextlib.redirect_stdout(sys.stderr if not args.output else sys.stdout):
        result = loader.load_records_from_file(args.records)
    if not result["success"]:
        return EXIT_DATA
    try:
        record = _select_record(result["records"], args.index, args.key)
        family = record.to_family()
        name = f"{family.target.label} {family.canonical_key}"
        if args.emit == "family":
            text = family_diagram_dot(family.diagram, name)
        elif args.emit == "coxeter":
            text = gen_coxeter_dot(gen_coxeter_diagram(compact_representative(family)), name)
        else:
            text = gamma_dot(gamma_graph(family), name)
    except (AffineSimplexError, ValueError) as e:
        _error(str(e), use_colors)
        return EXIT_DATA
    if args.output:
        try:
            write_dot(text, args.output)
        except OSError as e:
            _error(f"cannot write output: {e}", use_colors)
            return EXIT_DATA
        _print(f"✓ Diagram written to {args.output}", Colors.GREEN, use_colors)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_identify(args) -> int:
    """Name the affine group generated by a simplex file."""
    use_colors = not args.no_color
    loader = SimplexLoader(use_colors=use_colors)
    result = loader.load_simplex_from_file(args.simplex)
    if not result["success"]:
        return EXIT_DATA
    try:
        settings = AlcoveSettings(ball_factor=Fraction(args.ball_radius))
        found = identify(result["simplex"], settings)
    except (NonCrystallographicAngle, BudgetExceeded) as e:
        _error(f"non-discrete or unsupported simplex: {e}", use_colors)
        return EXIT_DATA
    except (AffineSimplexError, ValueError) as e:
        _error(str(e), use_colors)
        return EXIT_DATA
    print(found.group.label)
    return EXIT_OK


def _key_set(families) -> List[str]:
    return sorted(f.canonical_key.text for f in families)


def cmd_reproduce(args) -> int:
    """Recompute every published count and the cross-validation checks."""
    use_colors = not args.no_color
    extended = args.extended or extended_runs_enabled()
    labels = DESK_GROUPS + (EXTENDED_GROUPS if extended else [])
    settings = _settings(args)
    exhaustive = EnumerationSettings(prune=False, workers=settings.workers)
    output_dir = Path(args.output) if args.output else None
    if output_dir is not None:
        try:
            output_dir.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            _error(f"cannot write output: {e}", use_colors)
            return EXIT_DATA
    rows: List[CountRow] = []
    checks: List[Tuple[str, bool]] = []
    for label in labels:
        group = _parse_group(label)
        _print(f"… {group.label}", Colors.DESCRIPTION, use_colors)
        began = time.time()
        families = enumerate_families(group, settings)
        elapsed = time.time() - began
        digest = families_digest(families)
        rows.append(CountRow(group.label, count_families(group), len(families), elapsed, digest))
        keys = _key_set(families)
        coxeter_key = coxeter_family(group).canonical_key.text
        checks.append((f"{group.label}: Coxeter family present", coxeter_key in keys))
        checks.append((f"{group.label}: keys pairwise distinct", len(set(keys)) == len(keys)))
        if group.series in "ABCD":
            constructed = _key_set(construct_series_families(group))
            checks.append((f"{group.label}: matches Gamma construction", constructed == keys))
        if group.rank <= PRUNE_CHECK_MAX_RANK:
            checks.append(
                (
                    f"{group.label}: pruned and exhaustive digests agree",
                    families_digest(enumerate_families(group, exhaustive)) == digest,
                )
            )
        if output_dir is not None:
            output = output_dir / f"{group.label.rstrip('~')}.tsv"
            try:
                output.write_text(format_records(families), encoding="utf-8")
                RunManifest(
                    command="reproduce",
                    target=group.label,
                    flags={"prune": settings.prune, "threads": settings.workers},
                    wall_time=round(elapsed, 3),
                    family_count=len(families),
                    digest=digest,
                ).write(manifest_path(output))
            except OSError as e:
                _error(f"cannot write output: {e}", use_colors)
                return EXIT_DATA
    report = reproduction_report(rows, checks, use_colors)
    print(report)
    if output_dir is not None:
        try:
            (output_dir / "report.txt").write_text(strip_ansi(report) + "\n", encoding="utf-8")
        except OSError as e:
            _error(f"cannot write output: {e}", use_colors)
            return EXIT_DATA
    if all(row.matches for row in rows) and all(passed for _, passed in checks):
        return EXIT_OK
    return EXIT_MISMATCH


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"{text} is not a positive integer")
    return value


def _add_search_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--no-prune", action="store_true", help="exhaustive search without merging")
    parser.add_argument(
        "--threads",
        type=_positive_int,
        default=default_workers(),
        help="worker processes (default: $AFFINE_SIMPLEX_THREADS or 1)",
    )
    parser.add_argument("--checkpoint", metavar="DIR", help="per-level frontier checkpoints")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="affine-simplex",
        description="Enumerate the simplex families generating affine Weyl groups.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="log to stderr")
    parser.add_argument("--no-color", action="store_true", help="plain output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="enumerate the families of one group")
    p.add_argument("group", help='affine group label, e.g. "E6~"')
    _add_search_flags(p)
    p.add_argument("--output", help="record file to write (manifest written beside it)")
    p.add_argument("--format", choices=("text", "records"), default="text")
    p.add_argument("--simplex-dir", help="also write one simplex file per family (needs --output)")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("counts", help="closed-form vs enumerated counts of a series")
    p.add_argument("series", help="series letter A-G")
    p.add_argument("--min-rank", type=int, default=1)
    p.add_argument("--max-rank", type=int, default=8)
    p.add_argument("--enumerate-up-to", type=int, default=6, help="highest rank to enumerate")
    p.add_argument("--extended", action="store_true", help="allow E7~ and E8~")
    p.add_argument("--format", choices=("text", "records"), default="text")
    _add_search_flags(p)
    p.set_defaults(func=cmd_counts)

    p = sub.add_parser("diagram", help="diagram of one family record")
    p.add_argument("records", help="record file")
    selector = p.add_mutually_exclusive_group()
    selector.add_argument("--index", type=_positive_int, help="1-based record number")
    selector.add_argument("--key", help="canonical key of the record")
    p.add_argument("--emit", choices=("family", "coxeter", "gamma"), default="family")
    p.add_argument("--output", help="DOT file to write (default: stdout)")
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("identify", help="group generated by a simplex file")
    p.add_argument("simplex", help="simplex description file")
    p.add_argument("--ball-radius", default="3", help="closure ball radius in circumradii")
    p.set_defaults(func=cmd_identify)

    p = sub.add_parser("reproduce", help="recompute every published count")
    p.add_argument("--extended", action="store_true", help="include E7~ and E8~")
    p.add_argument("--output", help="directory for per-group records and manifests")
    _add_search_flags(p)
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    if getattr(args, "simplex_dir", None) and not args.output:
        parser.print_usage(sys.stderr)
        _error("--simplex-dir needs --output", not args.no_color)
        return EXIT_USAGE
    _configure_logging(args.verbose)
    return args.func(args)
