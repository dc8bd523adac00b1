"""
The four-stage enumeration of simplex families generating an affine Weyl group.

1. Choose n independent root lines generating W. The search grows partial
   bases one line at a time starting from a short root (W is transitive on
   roots of each length); partial bases with equal invariants are merged.
2. Add a line f0 so that every n of the n+1 lines are independent.
3. For B/C targets, keep the families whose short-root count matches the
   target (one short root for B~, at least two for C~).
4. Keep one family per canonical key of the family diagram.

Work is split into chunks that may run in a process pool; chunk results are
merged by minimum, so the output does not depend on the worker count.
"""

import logging
import multiprocessing
import time
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from ..diagram import gamma_graph, minimal_code
from ..errors import NotBCModel, NotSeriesModel
from ..exact import IntegerEchelon, RationalMatrix, inverse
from ..gen import RootSet, generates_full
from ..roots import GroupType, RootSystem, RootVector, build_root_system
from ..settings import EnumerationSettings
from . import checkpoint
from .family import CandidateBasis, Family
from .pruning import partial_key

logger = logging.getLogger(__name__)

Members = Tuple[int, ...]

_WORKER_ROOT_SYSTEM: Optional[RootSystem] = None


def model_type(target: GroupType) -> GroupType:
    """Finite root system the search for an affine target runs in."""
    t = target.check_enumerable().canonical()
    if t.series in "BC":
        return GroupType("B", t.rank)
    return t.finite()


def _seed(rs: RootSystem) -> int:
    table = rs.line_table
    shortest = min(table.norms)
    return table.norms.index(shortest)


def _echelon(rs: RootSystem, members: Iterable[int]) -> IntegerEchelon:
    echelon = IntegerEchelon()
    for i in members:
        extended = echelon.extended(rs.line_table.vectors[i])
        if extended is None:
            raise ValueError(f"lines {tuple(members)} are dependent")
        echelon = extended
    return echelon


def _children(rs: RootSystem, members: Members) -> Iterator[Members]:
    echelon = _echelon(rs, members)
    for x, vector in enumerate(rs.line_table.vectors):
        if x not in members and echelon.extended(vector) is not None:
            yield tuple(sorted(members + (x,)))


def _expand_chunk(rs: RootSystem, payload) -> Dict:
    """Children of a chunk of parents, one per partial key (or all at the last level)."""
    parents, final = payload
    seen: Set[Members] = set()
    buckets: Dict = {}
    for parent in parents:
        for child in _children(rs, parent):
            if child in seen:
                continue
            seen.add(child)
            if final:
                if generates_full(RootSet(rs, frozenset(child))):
                    buckets[child] = child
                continue
            key = partial_key(rs, child)
            if key not in buckets or child < buckets[key]:
                buckets[key] = child
    return buckets


def _short_count(rs: RootSystem, members: Sequence[int]) -> int:
    norms = rs.line_table.norms
    shortest = min(norms)
    return sum(1 for i in members if norms[i] == shortest)


def _bc_accepts(target: GroupType, short: int) -> bool:
    if target.series == "B":
        return short == 1
    return short >= 2


def _completions(rs: RootSystem, basis: Members) -> Iterator[Members]:
    """Line sets basis + f0 in which every n lines are independent."""
    table = rs.line_table
    gram = RationalMatrix.from_rows([[table.gram[a][b] for b in basis] for a in basis])
    inv = inverse(gram)
    for x in range(len(table)):
        if x in basis:
            continue
        coefficients = inv.apply([table.gram[x][b] for b in basis])
        if all(c != 0 for c in coefficients):
            yield tuple(sorted(basis + (x,)))


def _family_code(rs: RootSystem, members: Members) -> Tuple[int, ...]:
    digits = rs.line_table.digits
    values = [[digits[a][b] if a != b else 0 for b in members] for a in members]
    code, _ = minimal_code(values)
    return code


def _complete_chunk(rs: RootSystem, payload) -> Dict:
    """Admissible families of a chunk of bases, one per canonical key."""
    bases, target = payload
    bc_filter = target.series in "BC" and target.rank > 2
    seen: Set[Members] = set()
    buckets: Dict = {}
    for basis in bases:
        for members in _completions(rs, basis):
            if members in seen:
                continue
            seen.add(members)
            if bc_filter and not _bc_accepts(target, _short_count(rs, members)):
                continue
            code = _family_code(rs, members)
            if code not in buckets or members < buckets[code]:
                buckets[code] = members
    return buckets


def _init_worker(model: GroupType) -> None:
    global _WORKER_ROOT_SYSTEM
    _WORKER_ROOT_SYSTEM = build_root_system(model)
    _WORKER_ROOT_SYSTEM.line_table


def _call_in_worker(args):
    func, payload = args
    return func(_WORKER_ROOT_SYSTEM, payload)


def _chunks(items: Sequence, workers: int) -> List[List]:
    if not items:
        return []
    count = max(1, min(len(items), workers * 4))
    size = -(-len(items) // count)
    return [list(items[i : i + size]) for i in range(0, len(items), size)]


def _merge_min(results: Iterable[Dict]) -> Dict:
    merged: Dict = {}
    for result in results:
        for key, value in result.items():
            if key not in merged or value < merged[key]:
                merged[key] = value
    return merged


def _run(
    func: Callable,
    rs: RootSystem,
    items: Sequence,
    extra,
    workers: int,
) -> Dict:
    chunks = _chunks(items, workers)
    if workers <= 1 or len(chunks) <= 1:
        return _merge_min(func(rs, (chunk, extra)) for chunk in chunks)
    with multiprocessing.Pool(
        processes=workers, initializer=_init_worker, initargs=(rs.type,)
    ) as pool:
        return _merge_min(pool.map(_call_in_worker, [(func, (c, extra)) for c in chunks]))


def _pruned_bases(
    rs: RootSystem, settings: EnumerationSettings, target: GroupType
) -> List[Members]:
    n = rs.rank
    frontier: List[Members] = [(_seed(rs),)]
    start = 1
    if settings.checkpoint_dir is not None:
        resumed = checkpoint.load_latest(settings.checkpoint_dir, target, rs.type, True, n)
        if resumed is not None:
            start, frontier = resumed
    for level in range(start + 1, n + 1):
        began = time.time()
        final = level == n
        buckets = _run(_expand_chunk, rs, frontier, final, settings.workers)
        frontier = sorted(buckets.values())
        logger.info(
            "%s level %d: %d partial bases kept (%.2fs)",
            target.label,
            level,
            len(frontier),
            time.time() - began,
        )
        if settings.checkpoint_dir is not None:
            checkpoint.save_level(settings.checkpoint_dir, target, rs.type, True, level, frontier)
    return frontier


def _exhaustive_bases(rs: RootSystem) -> Iterator[Members]:
    """Every generating basis containing the seed line, depth-first."""
    n = rs.rank
    table = rs.line_table
    seed = _seed(rs)
    others = [x for x in range(len(table)) if x != seed]

    def extend(members: Members, echelon: IntegerEchelon, start: int) -> Iterator[Members]:
        if len(members) == n:
            ordered = tuple(sorted(members))
            if generates_full(RootSet(rs, frozenset(ordered))):
                yield ordered
            return
        for position in range(start, len(others)):
            x = others[position]
            extended = echelon.extended(table.vectors[x])
            if extended is not None:
                yield from extend(members + (x,), extended, position + 1)

    yield from extend((seed,), _echelon(rs, (seed,)), 0)


def enumerate_step1(
    rs: RootSystem,
    settings: Optional[EnumerationSettings] = None,
    target: Optional[GroupType] = None,
) -> Iterator[CandidateBasis]:
    """Generating bases of rs: n independent lines whose reflections generate W.

    With pruning (the default) one basis is kept per class of equal partial
    invariants at every level; without it every generating basis containing
    the seed line is produced.
    """
    settings = settings or EnumerationSettings()
    target = target or rs.type.as_affine().canonical()
    if settings.prune:
        bases: Iterable[Members] = _pruned_bases(rs, settings, target)
    else:
        bases = _exhaustive_bases(rs)
    for members in bases:
        yield CandidateBasis(rs, members)


def enumerate_step2(basis: CandidateBasis, target: Optional[GroupType] = None) -> Iterator[Family]:
    """Families obtained by adding one line f0 to a complete generating basis."""
    if not basis.is_complete:
        raise ValueError(f"basis has {len(basis)} of {basis.ambient.rank} lines")
    rs = basis.ambient
    target = target or rs.type.as_affine().canonical()
    table = rs.line_table
    for members in _completions(rs, basis.chosen):
        vectors = [RootVector(table.vectors[i], rs.scale) for i in members]
        yield Family.from_vectors(target, vectors)


def disambiguate_bc(f: Family) -> GroupType:
    """B~n or C~n, from the number of marked nodes of Gamma(P).

    Raises:
        NotBCModel: If f is not a family over the B/C coordinate model.
    """
    if f.target.series not in "BC":
        raise NotBCModel(f"{f.target.label} is not a B/C target")
    n = f.rank
    if n == 2:
        return GroupType("C", 2, True)
    try:
        marks = gamma_graph(f).marked_count
    except NotSeriesModel as e:
        raise NotBCModel(str(e)) from e
    if marks == 0:
        raise NotBCModel("no short root: the family cannot generate W(B_n)")
    return GroupType("C" if marks >= 2 else "B", n, True)


def enumerate_families(
    target: GroupType, settings: Optional[EnumerationSettings] = None
) -> List[Family]:
    """All families generating target, one per canonical key, sorted by key."""
    settings = settings or EnumerationSettings()
    target = target.check_enumerable().canonical()
    model = model_type(target)
    rs = build_root_system(model)
    began = time.time()
    logger.info(
        "Enumerating %s in %s (%d lines, prune=%s, workers=%d)",
        target.label,
        model.label,
        len(rs.line_table),
        settings.prune,
        settings.workers,
    )
    bases = [basis.chosen for basis in enumerate_step1(rs, settings, target)]
    logger.info("%s: %d generating bases", target.label, len(bases))
    buckets = _run(_complete_chunk, rs, bases, target, settings.workers)
    table = rs.line_table
    families = []
    for code in sorted(buckets):
        vectors = [RootVector(table.vectors[i], rs.scale) for i in buckets[code]]
        families.append(Family.from_vectors(target, vectors))
    families.sort(key=lambda f: f.canonical_key)
    logger.info(
        "%s: %d families (%.2fs)", target.label, len(families), time.time() - began
    )
    return families


def coxeter_family(target: GroupType) -> Family:
    """Family of the fundamental alcove: simple roots plus the highest root."""
    target = target.check_enumerable().canonical()
    finite = build_root_system(target.finite())
    vectors = list(finite.simple_roots) + [finite.highest_root()]
    if target.series == "C":
        vectors = [
            RootVector(tuple(x // 2 if abs(x) == 2 else x for x in v.coords), v.scale)
            for v in vectors
        ]
    return Family.from_vectors(target, vectors)


def compact_representative(f: Family):
    """The compact simplex {x : (f_i, x) <= 1} of the family."""
    from ..alcove import Simplex

    return Simplex.from_family(f)
