"""
Exhaustive Sweep for the Measurable Function Ring Auditor
Enumerates every sigma-algebra on small ground sets (one per set partition),
audits each one and runs the pairwise duality checks across them.
"""

import logging
from itertools import combinations, product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from measurable import __version__
from measurable.audits import PROPOSITIONS, AuditContext, resolve_props, run_check
from measurable.errors import InputShapeError
from measurable.lattice_ideal import DEFAULT_FIP_CAP
from measurable.quotient_duality import (
    compact_t_measurable, find_homeomorphism_brute_force, rings_isomorphic, spaces_homeomorphic
)
from measurable.report import AuditEntry, AuditReport, Status
from measurable.space_core import DEFAULT_COVER_CAP, GroundSet, MeasurableSpace, space_from_partition

# Configure logging
logger = logging.getLogger(__name__)

LABELS = 'abcdefgh'
DEFAULT_MAX_SWEEP_POINTS = 5
EQUIVALENCE_MAX_POINTS = 3


def set_partitions(n: int) -> Iterator[List[List[int]]]:
    """All partitions of range(n), via restricted-growth strings in lexicographic order."""
    if n < 1:
        return
    growth = [0] * n
    while True:
        blocks: List[List[int]] = [[] for _ in range(max(growth) + 1)]
        for i, b in enumerate(growth):
            blocks[b].append(i)
        yield blocks
        # advance to the next restricted-growth string
        i = n - 1
        while i > 0 and growth[i] > max(growth[:i]):
            i -= 1
        if i == 0:
            return
        growth[i] += 1
        for j in range(i + 1, n):
            growth[j] = 0


def partition_name(labels: Sequence[str], blocks: Sequence[Sequence[int]]) -> str:
    return '|'.join(''.join(labels[i] for i in block) for block in blocks)


def swept_spaces(max_points: int) -> List[Tuple[str, MeasurableSpace, Dict]]:
    """(name, space, document) for every partition of every ground set of 1..max_points points."""
    spaces = []
    for n in range(1, max_points + 1):
        labels = list(LABELS[:n])
        ground = GroundSet.from_labels(labels)
        count = 0
        for blocks in set_partitions(n):
            name = partition_name(labels, blocks)
            doc = {
                'name': name,
                'points': labels,
                'generators': [[labels[i] for i in block] for block in blocks],
            }
            spaces.append((name, space_from_partition(ground, blocks), doc))
            count += 1
        logger.debug(f"{count} sigma-algebras on {n} points")
    return spaces


def _pairwise_entry(prop_id: str, statement: str, witness: Optional[str],
                    involves: Sequence[str] = ()) -> AuditEntry:
    """`involves` names the swept spaces behind a failure so the report can replay them."""
    status = Status.FAIL if witness else Status.PASS
    return AuditEntry(prop_id, statement, 'pairwise', status, witness, involves=tuple(involves) if witness else ())


def pairwise_entries(contexts: Sequence[AuditContext]) -> List[AuditEntry]:
    """Ring/space duality, quotient duality, the homeomorphism criterion and its equivalence laws."""
    entries = []

    witness, involves = None, ()
    separated = [c for c in contexts if compact_t_measurable(c.space, c.cover_cap)]
    for first, second in combinations(separated, 2):
        rings = rings_isomorphic(first.space, second.space, validate=False).isomorphic
        spaces = spaces_homeomorphic(first.space, second.space).homeomorphic
        if rings != spaces:
            witness = f"{first.name} vs {second.name}: rings {rings}, spaces {spaces}"
            involves = (first.name, second.name)
            break
    by_name = {c.name: c for c in contexts}
    if witness is None and 'a|bc' in by_name and 'a|b' in by_name:
        x, y = by_name['a|bc'].space, by_name['a|b'].space
        if not rings_isomorphic(x, y).isomorphic or spaces_homeomorphic(x, y).homeomorphic:
            witness = "a|bc vs a|b should be ring-isomorphic but not homeomorphic"
            involves = ('a|bc', 'a|b')
    entries.append(_pairwise_entry('M220', 'M(X) ≅ M(Y) ⇔ X ≅ Y for compact T-measurable pairs',
                                   witness, involves))

    witness = None
    for first, second in combinations(contexts, 2):
        rings = rings_isomorphic(first.space, second.space, validate=False).isomorphic
        quotients = spaces_homeomorphic(first.quotient.quotient, second.quotient.quotient).homeomorphic
        if rings != quotients:
            witness = f"{first.name} vs {second.name}: rings {rings}, quotients {quotients}"
            involves = (first.name, second.name)
            break
    entries.append(_pairwise_entry('M295', 'M(X) ≅ M(Y) ⇔ X/∼ ≅ Y/∼', witness, involves))

    witness = None
    for first, second in combinations(contexts, 2):
        if first.space.size != second.space.size:
            continue
        decided = spaces_homeomorphic(first.space, second.space).homeomorphic
        searched = find_homeomorphism_brute_force(first.space, second.space) is not None
        if decided != searched:
            witness = f"{first.name} vs {second.name}: atom sizes say {decided}, search says {searched}"
            involves = (first.name, second.name)
            break
    entries.append(_pairwise_entry('homeo-criterion',
                                   'atom-size multisets decide homeomorphism', witness, involves))

    witness = None
    small = [c.space for c in contexts if c.space.size <= EQUIVALENCE_MAX_POINTS]
    names = [c.name for c in contexts if c.space.size <= EQUIVALENCE_MAX_POINTS]
    related = {(i, j): spaces_homeomorphic(small[i], small[j]).homeomorphic
               for i, j in product(range(len(small)), repeat=2)}
    for i, j, k in product(range(len(small)), repeat=3):
        if not related[i, i]:
            witness = f"{names[i]} is not homeomorphic to itself"
            involves = (names[i],)
        elif related[i, j] != related[j, i]:
            witness = f"{names[i]}, {names[j]} not symmetric"
            involves = (names[i], names[j])
        elif related[i, j] and related[j, k] and not related[i, k]:
            witness = f"{names[i]}, {names[j]}, {names[k]} not transitive"
            involves = (names[i], names[j], names[k])
        if witness:
            break
    entries.append(_pairwise_entry('homeo-equivalence',
                                   'homeomorphism is an equivalence relation', witness, involves))
    return entries


def run_sweep(max_points: int, seed: int, props: Optional[Sequence[str]] = None,
              random_samples: int = 100, cover_cap: int = DEFAULT_COVER_CAP,
              fip_cap: int = DEFAULT_FIP_CAP,
              limit: int = DEFAULT_MAX_SWEEP_POINTS) -> AuditReport:
    """
    Audit every sigma-algebra on 1..max_points points, then run the pairwise
    checks over all of them.

    Raises:
        InputShapeError: max_points outside 1..limit
    """
    if not 1 <= max_points <= limit:
        raise InputShapeError(f"max-points must be between 1 and {limit}, got {max_points}")
    ids = resolve_props(props)
    report = AuditReport(seed, __version__)
    contexts = []
    for name, space, doc in swept_spaces(max_points):
        ctx = AuditContext(space, name, seed, random_samples, cover_cap, fip_cap)
        report.spaces[name] = doc
        report.extend(run_check(PROPOSITIONS[p], ctx) for p in ids)
        contexts.append(ctx)
    logger.info(f"Swept {len(contexts)} spaces on up to {max_points} points")
    if not props:
        report.extend(pairwise_entries(contexts))
    return report
