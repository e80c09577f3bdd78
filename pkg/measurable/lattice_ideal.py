"""
Lattice Ideals for the Measurable Function Ring Auditor
Filters and ideals of the sigma-algebra lattice: principal constructors,
enumeration, ultrafilters, prime filters and ideals, the finite
intersection property and the fixed/free classification.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple

from measurable.errors import (
    ImproperError, InputShapeError, NoExtensionError, ResourceCapError
)
from measurable.space_core import MeasurableSpace, Subset, intersect_all, union_all

# Configure logging
logger = logging.getLogger(__name__)

DEFAULT_FIP_CAP = 1 << 16


class _Family:
    """Explicit member list plus its principal generator."""

    __slots__ = ('space', 'members', 'generator', '_masks')

    def __init__(self, space: MeasurableSpace, members: Iterable[Subset]):
        members = list(members)
        if not members:
            raise InputShapeError(f"A lattice {self.kind} must be nonempty")
        for m in members:
            space.require_member(m)
        self.space = space
        self._masks = frozenset(m.mask for m in members)
        self.members = tuple(sorted((Subset(m, space.size) for m in self._masks), key=Subset.sort_key))
        self._validate()

    kind = 'family'

    def _validate(self):
        raise NotImplementedError

    def __contains__(self, subset: Subset) -> bool:
        return subset.mask in self._masks

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __eq__(self, other) -> bool:
        return type(other) is type(self) and self.space == other.space and self._masks == other._masks

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.generator.mask))

    def issubset(self, other: '_Family') -> bool:
        return self._masks <= other._masks

    def __le__(self, other: '_Family') -> bool:
        return self.issubset(other)

    def __lt__(self, other: '_Family') -> bool:
        return self._masks < other._masks


class LatticeFilter(_Family):
    """
    A proper filter of the algebra (a Z_A-filter): meet-closed, up-closed,
    without the empty set. Finite, so its minimum is a member and generates it.
    """

    kind = 'filter'

    def _validate(self):
        if 0 in self._masks:
            raise ImproperError("A Z_A-filter may not contain the empty set")
        for a, b in combinations(self.members, 2):
            if (a & b).mask not in self._masks:
                raise InputShapeError(
                    f"Not meet-closed: {self.space.render(a)} ∩ {self.space.render(b)} missing")
        for a in self.members:
            for b in self.space.algebra.sets:
                if a <= b and b.mask not in self._masks:
                    raise InputShapeError(
                        f"Not up-closed: {self.space.render(b)} ⊇ {self.space.render(a)} missing")
        self.generator = intersect_all(self.space.size, self.members)

    def render(self) -> str:
        return '↑' + self.space.render(self.generator)

    def __repr__(self) -> str:
        return f"LatticeFilter({self.render()})"


class LatticeIdeal(_Family):
    """A lattice ideal of the algebra: join-closed and down-closed; ↓X is flagged improper."""

    kind = 'ideal'

    def _validate(self):
        for a, b in combinations(self.members, 2):
            if (a | b).mask not in self._masks:
                raise InputShapeError(
                    f"Not join-closed: {self.space.render(a)} ∪ {self.space.render(b)} missing")
        for a in self.members:
            for b in self.space.algebra.sets:
                if b <= a and b.mask not in self._masks:
                    raise InputShapeError(
                        f"Not down-closed: {self.space.render(b)} ⊆ {self.space.render(a)} missing")
        self.generator = union_all(self.space.size, self.members)

    @property
    def is_proper(self) -> bool:
        return not self.generator.is_full()

    def render(self) -> str:
        return '↓' + self.space.render(self.generator)

    def __repr__(self) -> str:
        return f"LatticeIdeal({self.render()})"


def principal_filter(space: MeasurableSpace, generator: Subset) -> LatticeFilter:
    space.require_member(generator)
    if not generator:
        raise ImproperError("↑∅ is the whole algebra, not a Z_A-filter")
    return LatticeFilter(space, (s for s in space.algebra.sets if generator <= s))


def principal_ideal(space: MeasurableSpace, generator: Subset) -> LatticeIdeal:
    space.require_member(generator)
    return LatticeIdeal(space, (s for s in space.algebra.sets if s <= generator))


def enumerate_filters(space: MeasurableSpace) -> List[LatticeFilter]:
    """All proper filters, one per nonempty member."""
    return [principal_filter(space, g) for g in space.algebra.sets if g]


def enumerate_ideals(space: MeasurableSpace) -> List[LatticeIdeal]:
    return [principal_ideal(space, g) for g in space.algebra.sets]


def intersect_filters(filters: Sequence[LatticeFilter]) -> LatticeFilter:
    if not filters:
        raise InputShapeError("Need at least one filter to intersect")
    common = set(filters[0].members)
    for f in filters[1:]:
        common &= set(f.members)
    return LatticeFilter(filters[0].space, common)


def is_ultrafilter(filt: LatticeFilter) -> bool:
    """No proper filter strictly contains this one."""
    return not any(filt < other for other in enumerate_filters(filt.space))


def is_ultrafilter_by_meets(filt: LatticeFilter) -> bool:
    """Every member of the algebra meeting all of the filter belongs to it."""
    for a in filt.space.algebra.sets:
        if all(a.meets(b) for b in filt.members) and a not in filt:
            return False
    return True


def extend_to_ultrafilter(filt: LatticeFilter) -> LatticeFilter:
    """A Z_A-ultrafilter containing the filter; the first maximal one in canonical order."""
    candidates = [f for f in enumerate_filters(filt.space) if filt <= f and is_ultrafilter(f)]
    if not candidates:
        raise NoExtensionError(f"{filt.render()} is contained in no ultrafilter")
    return candidates[0]


def is_prime_filter(filt: LatticeFilter) -> bool:
    """x ∨ y ∈ F implies x ∈ F or y ∈ F, over all pairs; properness is enforced by the type."""
    members = filt.space.algebra.sets
    for a in members:
        if a in filt:
            continue
        for b in members:
            if (a | b) in filt and b not in filt:
                return False
    return True


def is_prime_lattice_ideal(ideal: LatticeIdeal) -> bool:
    """J ≠ A and x ∧ y ∈ J implies x ∈ J or y ∈ J."""
    if not ideal.is_proper:
        raise ImproperError(f"{ideal.render()} is not a proper ideal")
    members = ideal.space.algebra.sets
    for a in members:
        if a in ideal:
            continue
        for b in members:
            if (a & b) in ideal and b not in ideal:
                return False
    return True


def sigma_id(space: MeasurableSpace) -> List[LatticeIdeal]:
    """Σ Id(A): the prime ideals of the algebra."""
    return [j for j in enumerate_ideals(space) if j.is_proper and is_prime_lattice_ideal(j)]


def max_id(space: MeasurableSpace) -> List[LatticeIdeal]:
    """Max(Id(A)): proper ideals strictly contained in no other proper ideal."""
    proper = [j for j in enumerate_ideals(space) if j.is_proper]
    return [j for j in proper if not any(j < other for other in proper)]


def has_fip(space: MeasurableSpace, family: Sequence[Subset], cap: int = DEFAULT_FIP_CAP) -> bool:
    """
    Every finite subfamily has nonempty intersection.

    Sweeps every nonempty subfamily, stopping at the first empty intersection.
    """
    family = list(family)
    if not family:
        raise InputShapeError("The finite intersection property needs a nonempty family")
    for s in family:
        space.require_member(s)
    if (1 << len(family)) - 1 > cap:
        raise ResourceCapError("finite-intersection sweep", cap)
    for size in range(1, len(family) + 1):
        for sub in combinations(family, size):
            if not intersect_all(space.size, sub):
                return False
    return True


def fip_extension(space: MeasurableSpace, family: Sequence[Subset], cap: int = DEFAULT_FIP_CAP) -> LatticeFilter:
    """An ultrafilter containing every member of a family with the finite intersection property."""
    if not has_fip(space, family, cap):
        rendered = ', '.join(space.render(s) for s in family)
        raise NoExtensionError(f"[{rendered}] lacks the finite intersection property")
    meet = intersect_all(space.size, family)
    for atom in space.atoms:
        if atom <= meet:
            ultra = principal_filter(space, atom)
            if all(s in ultra for s in family) and is_ultrafilter(ultra):
                return ultra
    raise NoExtensionError("No atom below the total intersection")


@dataclass
class FixedOrFree:
    kind: str
    witness: Optional[str] = None

    @property
    def fixed(self) -> bool:
        return self.kind == 'FIXED'


def fixed_or_free(filt: LatticeFilter) -> FixedOrFree:
    """FIXED with the first common point when ⋂F is nonempty, FREE otherwise."""
    common = intersect_all(filt.space.size, filt.members)
    if common:
        return FixedOrFree('FIXED', filt.space.ground.labels[min(common)])
    return FixedOrFree('FREE')


def disjoint_members(first: LatticeFilter, second: LatticeFilter) -> Optional[Tuple[Subset, Subset]]:
    """A pair A ∈ F, B ∈ G with A ∩ B = ∅, if any."""
    for a in first.members:
        for b in second.members:
            if not a.meets(b):
                return a, b
    return None
