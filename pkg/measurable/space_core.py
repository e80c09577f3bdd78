"""
Space Core for the Measurable Function Ring Auditor
Finite ground sets, bit-vector subsets, sigma-algebras and their atoms, plus
the lattice predicates (prime element, compact element, Boolean/sigma-frame
laws) the rest of the library audits against.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from measurable.errors import (
    InputShapeError, MembershipError, NotSigmaAlgebraError, ResourceCapError
)

# Configure logging
logger = logging.getLogger(__name__)

DEFAULT_COVER_CAP = 1 << 20


@dataclass(frozen=True)
class GroundSet:
    """A finite set of labelled points; bit i of a Subset is point i."""

    size: int
    labels: Tuple[str, ...] = ()

    def __post_init__(self):
        if not isinstance(self.size, int) or self.size < 1:
            raise InputShapeError(f"Ground set size must be a positive integer, got {self.size!r}")
        if not self.labels:
            object.__setattr__(self, 'labels', tuple(str(i) for i in range(self.size)))
        else:
            object.__setattr__(self, 'labels', tuple(str(label) for label in self.labels))
        if len(self.labels) != self.size:
            raise InputShapeError(f"Expected {self.size} labels, got {len(self.labels)}")
        seen = set()
        for label in self.labels:
            if label in seen:
                raise InputShapeError(f"Duplicate point label: {label}")
            seen.add(label)

    @classmethod
    def from_labels(cls, labels: Sequence[str]) -> 'GroundSet':
        labels = tuple(labels)
        if not labels:
            raise InputShapeError("Ground set needs at least one point")
        return cls(len(labels), labels)

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def index(self, label: str) -> int:
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise MembershipError(f"Unknown point: {label}") from None

    def subset(self, labels: Iterable[str]) -> 'Subset':
        mask = 0
        for label in labels:
            mask |= 1 << self.index(label)
        return Subset(mask, self.size)

    def full(self) -> 'Subset':
        return Subset(self.full_mask, self.size)

    def empty(self) -> 'Subset':
        return Subset(0, self.size)

    def all_subsets(self) -> Iterator['Subset']:
        for mask in range(1 << self.size):
            yield Subset(mask, self.size)


@dataclass(frozen=True, slots=True)
class Subset:
    """Fixed-width bit vector over a ground set."""

    mask: int
    width: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.width:
            raise InputShapeError(f"Mask {self.mask:#x} does not fit width {self.width}")

    def _check(self, other: 'Subset'):
        if other.width != self.width:
            raise InputShapeError(f"Width mismatch: {self.width} vs {other.width}")

    def __or__(self, other: 'Subset') -> 'Subset':
        self._check(other)
        return Subset(self.mask | other.mask, self.width)

    def __and__(self, other: 'Subset') -> 'Subset':
        self._check(other)
        return Subset(self.mask & other.mask, self.width)

    def __sub__(self, other: 'Subset') -> 'Subset':
        self._check(other)
        return Subset(self.mask & ~other.mask, self.width)

    def complement(self) -> 'Subset':
        return Subset(((1 << self.width) - 1) & ~self.mask, self.width)

    def issubset(self, other: 'Subset') -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def __le__(self, other: 'Subset') -> bool:
        return self.issubset(other)

    def __lt__(self, other: 'Subset') -> bool:
        return self.issubset(other) and self.mask != other.mask

    def meets(self, other: 'Subset') -> bool:
        self._check(other)
        return self.mask & other.mask != 0

    def __contains__(self, index: int) -> bool:
        return bool(self.mask >> index & 1)

    def __iter__(self) -> Iterator[int]:
        return (i for i in range(self.width) if self.mask >> i & 1)

    def __len__(self) -> int:
        return bin(self.mask).count('1')

    def __bool__(self) -> bool:
        return self.mask != 0

    def is_full(self) -> bool:
        return self.mask == (1 << self.width) - 1

    def sort_key(self) -> Tuple[int, int]:
        return (len(self), self.mask)

    def labels(self, ground: GroundSet) -> List[str]:
        return sorted(ground.labels[i] for i in self)


def union_all(width: int, subsets: Iterable[Subset]) -> Subset:
    mask = 0
    for s in subsets:
        mask |= s.mask
    return Subset(mask, width)


def intersect_all(width: int, subsets: Iterable[Subset]) -> Subset:
    mask = (1 << width) - 1
    for s in subsets:
        mask &= s.mask
    return Subset(mask, width)


class SigmaAlgebra:
    """
    A sigma-algebra on a finite ground set.

    The family is deduplicated and stored in canonical (popcount, value) order.
    Construction rejects any family that misses X or the empty set, or is not
    closed under complement and pairwise union. Atoms are the minimal nonempty
    members.
    """

    __slots__ = ('ground', 'sets', 'atoms', '_masks')

    def __init__(self, ground: GroundSet, sets: Iterable[Subset]):
        sets = list(sets)
        for s in sets:
            if s.width != ground.size:
                raise InputShapeError(f"Subset width {s.width} does not match ground size {ground.size}")
        masks = frozenset(s.mask for s in sets)
        self.ground = ground
        self._masks = masks
        self.sets = tuple(sorted((Subset(m, ground.size) for m in masks), key=Subset.sort_key))
        self._validate_closure()
        self.atoms = self._minimal_nonempty()
        self._validate_atoms()

    def _validate_closure(self):
        full = self.ground.full_mask
        if full not in self._masks:
            raise NotSigmaAlgebraError("Family does not contain the full set X")
        if 0 not in self._masks:
            raise NotSigmaAlgebraError("Family does not contain the empty set")
        for m in self._masks:
            if full & ~m not in self._masks:
                raise NotSigmaAlgebraError(
                    f"Family is not closed under complement: {self._render(m)}")
        for a, b in combinations(self._masks, 2):
            if a | b not in self._masks:
                raise NotSigmaAlgebraError(
                    f"Family is not closed under union: {self._render(a)} and {self._render(b)}")

    def _render(self, mask: int) -> str:
        return '{' + ','.join(Subset(mask, self.ground.size).labels(self.ground)) + '}'

    def _minimal_nonempty(self) -> Tuple[Subset, ...]:
        nonempty = [s for s in self.sets if s]
        minimal = [s for s in nonempty if not any(t < s for t in nonempty)]
        return tuple(sorted(minimal, key=lambda s: (min(s), s.mask)))

    def _validate_atoms(self):
        covered = 0
        for atom in self.atoms:
            if covered & atom.mask:
                raise NotSigmaAlgebraError("Atoms are not pairwise disjoint")
            covered |= atom.mask
        if covered != self.ground.full_mask:
            raise NotSigmaAlgebraError("Atoms do not cover the ground set")
        for s in self.sets:
            rebuilt = 0
            for atom in self.atoms:
                if atom.mask & ~s.mask == 0:
                    rebuilt |= atom.mask
            if rebuilt != s.mask:
                raise NotSigmaAlgebraError(f"{self._render(s.mask)} is not a union of atoms")

    def __contains__(self, subset: Subset) -> bool:
        return subset.width == self.ground.size and subset.mask in self._masks

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[Subset]:
        return iter(self.sets)

    def __eq__(self, other) -> bool:
        return isinstance(other, SigmaAlgebra) and self.ground == other.ground and self._masks == other._masks

    def __hash__(self) -> int:
        return hash((self.ground, self._masks))

    def issubset(self, other: 'SigmaAlgebra') -> bool:
        return self.ground == other.ground and self._masks <= other._masks

    def __repr__(self) -> str:
        return f"SigmaAlgebra({serialize_family(self.ground, self.sets)})"


@dataclass(frozen=True)
class MeasurableSpace:
    """A ground set together with a sigma-algebra on it."""

    ground: GroundSet
    algebra: SigmaAlgebra
    _atom_index: Tuple[int, ...] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.algebra.ground != self.ground:
            raise InputShapeError("Algebra is defined on a different ground set")
        index = [0] * self.ground.size
        for k, atom in enumerate(self.algebra.atoms):
            for i in atom:
                index[i] = k
        object.__setattr__(self, '_atom_index', tuple(index))

    @property
    def atoms(self) -> Tuple[Subset, ...]:
        return self.algebra.atoms

    @property
    def size(self) -> int:
        return self.ground.size

    def atom_index(self, point: int) -> int:
        return self._atom_index[point]

    def atom_of(self, point: int) -> Subset:
        return self.algebra.atoms[self._atom_index[point]]

    def full(self) -> Subset:
        return self.ground.full()

    def empty(self) -> Subset:
        return self.ground.empty()

    def subset(self, labels: Iterable[str]) -> Subset:
        return self.ground.subset(labels)

    def require_member(self, subset: Subset) -> Subset:
        if subset.width != self.ground.size:
            raise InputShapeError(f"Subset width {subset.width} does not match ground size {self.ground.size}")
        if subset not in self.algebra:
            raise MembershipError(f"{render_subset(self.ground, subset)} is not a measurable set")
        return subset

    def render(self, subset: Subset) -> str:
        return render_subset(self.ground, subset)

    @classmethod
    def from_generators(cls, labels: Sequence[str], generators: Iterable[Iterable[str]]) -> 'MeasurableSpace':
        ground = GroundSet.from_labels(labels)
        return cls(ground, generate_sigma_algebra(ground, [ground.subset(g) for g in generators]))


def render_subset(ground: GroundSet, subset: Subset) -> str:
    if not subset:
        return '∅'
    return '{' + ','.join(subset.labels(ground)) + '}'


def serialize_family(ground: GroundSet, family: Iterable[Subset]) -> List[List[str]]:
    """Canonical serialization: sorted label lists, family in (popcount, value) order."""
    return [s.labels(ground) for s in sorted(family, key=Subset.sort_key)]


def generate_sigma_algebra(ground: GroundSet, generators: Iterable[Subset]) -> SigmaAlgebra:
    """
    Smallest sigma-algebra containing all generators.

    Points are grouped by their membership fingerprint across the generators;
    the fingerprint classes are the atoms and the algebra is every union of
    atoms. The SigmaAlgebra constructor re-verifies the closure invariants.
    """
    generators = list(generators)
    for g in generators:
        if g.width != ground.size:
            raise InputShapeError(
                f"Generator width {g.width} does not match ground size {ground.size}")

    classes: Dict[Tuple[bool, ...], int] = {}
    for i in range(ground.size):
        fingerprint = tuple(i in g for g in generators)
        classes[fingerprint] = classes.get(fingerprint, 0) | (1 << i)
    atom_masks = list(classes.values())

    sets = []
    for selection in range(1 << len(atom_masks)):
        mask = 0
        for k, atom in enumerate(atom_masks):
            if selection >> k & 1:
                mask |= atom
        sets.append(Subset(mask, ground.size))

    logger.debug(f"Generated sigma-algebra with {len(atom_masks)} atoms from {len(generators)} generators")
    return SigmaAlgebra(ground, sets)


def space_from_partition(ground: GroundSet, blocks: Iterable[Iterable[int]]) -> MeasurableSpace:
    """Space whose atoms are the given blocks of point indices."""
    generators = []
    for block in blocks:
        mask = 0
        for i in block:
            mask |= 1 << i
        generators.append(Subset(mask, ground.size))
    return MeasurableSpace(ground, generate_sigma_algebra(ground, generators))


def power_set_space(labels: Sequence[str]) -> MeasurableSpace:
    ground = GroundSet.from_labels(labels)
    return space_from_partition(ground, [[i] for i in range(ground.size)])


def trivial_space(labels: Sequence[str]) -> MeasurableSpace:
    ground = GroundSet.from_labels(labels)
    return MeasurableSpace(ground, generate_sigma_algebra(ground, []))


def atoms(space: MeasurableSpace) -> Tuple[Subset, ...]:
    """Minimal nonempty members, recomputed as fingerprint classes over the whole algebra."""
    ground = space.ground
    classes: Dict[Tuple[bool, ...], int] = {}
    for i in range(ground.size):
        fingerprint = tuple(i in s for s in space.algebra.sets)
        classes[fingerprint] = classes.get(fingerprint, 0) | (1 << i)
    found = tuple(sorted((Subset(m, ground.size) for m in classes.values()),
                         key=lambda s: (min(s), s.mask)))
    return found


def is_prime_element(space: MeasurableSpace, prime: Subset) -> bool:
    """P < X and A∩B ⊆ P implies A ⊆ P or B ⊆ P, checked over all pairs of members."""
    space.require_member(prime)
    if prime.is_full():
        return False
    members = space.algebra.sets
    for a in members:
        if a <= prime:
            continue
        for b in members:
            if (a & b) <= prime and not b <= prime:
                return False
    return True


def prime_elements(space: MeasurableSpace) -> List[Subset]:
    return [s for s in space.algebra.sets if is_prime_element(space, s)]


def _every_cover_has_finite_subcover(target: Subset, members: Sequence[Subset], cap: int) -> bool:
    """
    Walk the subfamilies of members looking for a cover of target without a
    finite subcover.

    Members are taken largest first; once the chosen prefix covers the target
    it is a finite subcover of every extension, so the branch is settled there.
    Branches whose remaining members cannot complete a cover hold no covers
    and are dropped. Raises ResourceCapError when more than `cap` nodes would
    be visited.
    """
    members = sorted(members, key=lambda s: (-len(s), s.mask))
    visited = 0
    covers = 0
    target_mask = target.mask
    reachable = [0] * (len(members) + 1)
    for i in range(len(members) - 1, -1, -1):
        reachable[i] = reachable[i + 1] | members[i].mask

    def walk(i: int, union: int, chosen: Tuple[int, ...]) -> bool:
        nonlocal visited, covers
        visited += 1
        if visited > cap:
            raise ResourceCapError("cover enumeration", cap)
        if target_mask & ~(union | reachable[i]):
            return True
        if target_mask & ~union == 0:
            covers += 1 << (len(members) - i)
            subcover = 0
            for j in chosen:
                subcover |= members[j].mask
            return target_mask & ~subcover == 0
        if i == len(members):
            return True
        return (walk(i + 1, union | members[i].mask, chosen + (i,))
                and walk(i + 1, union, chosen))

    result = walk(0, 0, ())
    logger.debug(f"Cover sweep: {covers} covers settled in {visited} nodes")
    return result


def is_compact_element(space: MeasurableSpace, subset: Subset, cap: int = DEFAULT_COVER_CAP) -> bool:
    """
    Every cover of the subset by members of the algebra has a finite subcover.

    Only members meeting the subset are enumerated; members disjoint from it
    can be dropped from any subcover.
    """
    space.require_member(subset)
    if not subset:
        return True
    relevant = [s for s in space.algebra.sets if s.meets(subset)]
    return _every_cover_has_finite_subcover(subset, relevant, cap)


def is_compact_space(space: MeasurableSpace, cap: int = DEFAULT_COVER_CAP) -> bool:
    return is_compact_element(space, space.full(), cap)


def is_compact_interval(space: MeasurableSpace, subset: Subset, cap: int = DEFAULT_COVER_CAP) -> bool:
    """The sublattice ↑(A^c) is a compact lattice, i.e. its top X is a compact element there."""
    space.require_member(subset)
    bottom = subset.complement()
    if bottom.is_full():
        return True
    # joins in ↑(A^c) are unions, so covering X there means covering A with traces s ∩ A
    traces = [s & subset for s in space.algebra.sets if bottom <= s and s.meets(subset)]
    return _every_cover_has_finite_subcover(subset, traces, cap)


@dataclass
class LawResult:
    law: str
    passed: bool
    witness: Optional[str] = None
    exhaustive: bool = True


def audit_boolean_sigma_frame(space: MeasurableSpace, cap: int = DEFAULT_COVER_CAP) -> List[LawResult]:
    """
    Check distributivity, complementation and the frame law x ∧ ⋁S = ⋁(x ∧ s).

    The frame law is swept over every subfamily S when 2^|A| fits the cap and
    over subfamilies of at most three members otherwise.
    """
    ground = space.ground
    members = space.algebra.sets
    full = ground.full_mask
    results: List[LawResult] = []

    def render(*subsets: Subset) -> str:
        return ', '.join(space.render(s) for s in subsets)

    witness = None
    for x in members:
        for y in members:
            for z in members:
                left = x.mask & (y.mask | z.mask)
                right = (x.mask & y.mask) | (x.mask & z.mask)
                dual_left = x.mask | (y.mask & z.mask)
                dual_right = (x.mask | y.mask) & (x.mask | z.mask)
                if left != right or dual_left != dual_right:
                    witness = render(x, y, z)
                    break
            if witness:
                break
        if witness:
            break
    results.append(LawResult('distributive', witness is None, witness))

    witness = None
    for x in members:
        complement = x.complement()
        if complement not in space.algebra or x.mask & complement.mask or (x.mask | complement.mask) != full:
            witness = render(x)
            break
    results.append(LawResult('complemented', witness is None, witness))

    exhaustive = (1 << len(members)) <= cap
    witness = None
    if exhaustive:
        # walk subfamilies keeping ⋁S and, per x, ⋁(x ∧ s)
        stack = [(0, 0, tuple(0 for _ in members))]
        while stack and witness is None:
            i, join, meets = stack.pop()
            if i == len(members):
                for k, x in enumerate(members):
                    if x.mask & join != meets[k]:
                        witness = f"x={space.render(x)}"
                        break
                continue
            s = members[i].mask
            stack.append((i + 1, join, meets))
            stack.append((i + 1, join | s,
                          tuple(meets[k] | (x.mask & s) for k, x in enumerate(members))))
    else:
        for size in range(0, 4):
            for family in combinations(members, size):
                join = union_all(ground.size, family)
                for x in members:
                    if x.mask & join.mask != union_all(ground.size, (x & s for s in family)).mask:
                        witness = f"x={space.render(x)}, S=[{render(*family)}]"
                        break
                if witness:
                    break
            if witness:
                break
    results.append(LawResult('frame', witness is None, witness, exhaustive))
    return results
