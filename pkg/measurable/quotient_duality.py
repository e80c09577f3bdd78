"""
Quotient and Duality for the Measurable Function Ring Auditor
Point maps between measurable spaces, weak sigma-algebras, T-measurability,
the quotient X/∼ with M(X) ≅ M(X/∼), the spectrum max(M(X)) and the
homeomorphism / ring-isomorphism deciders.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import permutations, product
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from measurable.errors import InputShapeError, InvariantViolation, ResourceCapError
from measurable.fn_ring import (
    FunctionSample, MeasurableFn, add, characteristic, cozero, from_atom_values, mk_fn, mul,
    one, zero, zero_set
)
from measurable.lattice_ideal import enumerate_filters, is_prime_filter
from measurable.ring_ideal import MaxIdealPoint, maximal_ideals, point_ideal, z_preimage
from measurable.space_core import (
    DEFAULT_COVER_CAP, GroundSet, MeasurableSpace, SigmaAlgebra, Subset,
    generate_sigma_algebra, is_compact_element, is_compact_space, is_prime_element
)

# Configure logging
logger = logging.getLogger(__name__)

ValueRow = Union[MeasurableFn, Sequence[Union[int, Fraction, str]]]

RING_VALIDATION_MAX_ATOMS = 5


class SpaceMorphism:
    """
    A total point map source → target. Flags are always recomputed from the
    map and the two algebras.
    """

    def __init__(self, source: MeasurableSpace, target: MeasurableSpace, mapping: Sequence[int]):
        mapping = tuple(mapping)
        if len(mapping) != source.size:
            raise InputShapeError(f"Map needs {source.size} images, got {len(mapping)}")
        if any(not 0 <= t < target.size for t in mapping):
            raise InputShapeError("Map sends a point outside the target")
        self.source = source
        self.target = target
        self.mapping = mapping
        self.injective = len(set(mapping)) == len(mapping)
        self.surjective = set(mapping) == set(range(target.size))

    @cached_property
    def forward_measurable(self) -> bool:
        return all(self.image(a) in self.target.algebra for a in self.source.algebra.sets)

    @cached_property
    def backward_measurable(self) -> bool:
        return all(self.preimage(b) in self.source.algebra for b in self.target.algebra.sets)

    @classmethod
    def from_table(cls, source: MeasurableSpace, target: MeasurableSpace,
                   table: Mapping[str, str]) -> 'SpaceMorphism':
        return cls(source, target,
                   [target.ground.index(table[label]) for label in source.ground.labels])

    @property
    def bijective(self) -> bool:
        return self.injective and self.surjective

    def image(self, subset: Subset) -> Subset:
        mask = 0
        for i in subset:
            mask |= 1 << self.mapping[i]
        return Subset(mask, self.target.size)

    def preimage(self, subset: Subset) -> Subset:
        mask = 0
        for i, t in enumerate(self.mapping):
            if t in subset:
                mask |= 1 << i
        return Subset(mask, self.source.size)

    @property
    def is_homeomorphism(self) -> bool:
        """Bijective, and A is measurable exactly when its image is, for every A ⊆ X₁."""
        if not self.bijective:
            return False
        return all((a in self.source.algebra) == (self.image(a) in self.target.algebra)
                   for a in self.source.ground.all_subsets())

    def table(self) -> List[Tuple[str, str]]:
        src = self.source.ground.labels
        tgt = self.target.ground.labels
        return [(src[i], tgt[t]) for i, t in enumerate(self.mapping)]

    def flags(self) -> Dict[str, bool]:
        return {
            'forward_measurable': self.forward_measurable,
            'backward_measurable': self.backward_measurable,
            'injective': self.injective,
            'surjective': self.surjective,
        }


def _row(values: ValueRow) -> Tuple[Fraction, ...]:
    if isinstance(values, MeasurableFn):
        return values.values
    return tuple(Fraction(v) for v in values)


def level_sets(width: int, values: ValueRow) -> List[Subset]:
    row = _row(values)
    if len(row) != width:
        raise InputShapeError(f"Function has {len(row)} values on a {width}-point set")
    levels: Dict[Fraction, int] = {}
    for i, v in enumerate(row):
        levels[v] = levels.get(v, 0) | (1 << i)
    return [Subset(m, width) for m in levels.values()]


def weak_sigma_algebra(ground: GroundSet, functions: Iterable[ValueRow]) -> SigmaAlgebra:
    """
    Smallest sigma-algebra making every function measurable: on a finite set,
    the one generated by their level sets (preimages of open sets are unions
    of level sets).
    """
    generators = []
    for f in functions:
        generators.extend(level_sets(ground.size, f))
    return generate_sigma_algebra(ground, generators)


def is_measurable_row(space: MeasurableSpace, values: ValueRow) -> bool:
    """Every level set lies in the algebra."""
    return all(s in space.algebra for s in level_sets(space.size, values))


@dataclass
class CompositionAudit:
    compositions_measurable: bool
    generators_pull_back: bool
    algebra_pulls_back: bool

    @property
    def generated_preimages_agree(self) -> bool:
        return self.generators_pull_back == self.algebra_pulls_back

    @property
    def composition_criterion_holds(self) -> bool:
        return self.compositions_measurable == self.algebra_pulls_back


def composition_audit(space: MeasurableSpace, target_ground: GroundSet,
                      functions: Sequence[ValueRow], point_map: Sequence[int],
                      induced: Optional[SigmaAlgebra] = None) -> CompositionAudit:
    """
    For f: X → Y and the weak algebra A′ induced on Y by a function family C:
    g∘f is measurable for all g ∈ C exactly when f⁻¹(A′) ⊆ A, and
    preimages of a generating family land in A exactly when those of the
    generated algebra do.
    """
    rows = [_row(g) for g in functions]
    if induced is None:
        induced = weak_sigma_algebra(target_ground, rows)

    def pull(subset: Subset) -> Subset:
        mask = 0
        for i, t in enumerate(point_map):
            if subset.mask >> t & 1:
                mask |= 1 << i
        return Subset(mask, space.size)

    compositions = all(is_measurable_row(space, [row[t] for t in point_map]) for row in rows)
    generators = [s for row in rows for s in level_sets(target_ground.size, row)]
    generators_ok = all(pull(s) in space.algebra for s in generators)
    algebra_ok = all(pull(s) in space.algebra for s in induced.sets)
    return CompositionAudit(compositions, generators_ok, algebra_ok)


def composition_audit_all_maps(space: MeasurableSpace, target: MeasurableSpace) -> Optional[str]:
    """
    Run the composition criterion for every point map space → target, with the
    target's atom indicators as the inducing family. Returns the first failing
    map as a label table, or None.
    """
    rows = [[1 if j in atom else 0 for j in range(target.size)] for atom in target.atoms]
    induced = weak_sigma_algebra(target.ground, rows)
    checked = 0
    for mapping in product(range(target.size), repeat=space.size):
        audit = composition_audit(space, target.ground, rows, mapping, induced)
        checked += 1
        if not (audit.composition_criterion_holds and audit.generated_preimages_agree):
            src, tgt = space.ground.labels, target.ground.labels
            return ', '.join(f"{src[i]}→{tgt[t]}" for i, t in enumerate(mapping))
    logger.debug(f"Composition criterion held for {checked} point maps")
    return None


def indistinguishability(space: MeasurableSpace) -> Tuple[Subset, ...]:
    """Classes of x ∼ x′ ⇔ f(x) = f(x′) for all f ∈ M(X): the atoms."""
    return space.atoms


def indistinguishability_audit(space: MeasurableSpace, sample: FunctionSample) -> Optional[str]:
    """Rebuild ∼ from the sampled functions and check it against the atoms; every member is a union of classes."""
    classes: Dict[Tuple[Fraction, ...], int] = {}
    for i in range(space.size):
        key = tuple(f.values[i] for f in sample.functions)
        classes[key] = classes.get(key, 0) | (1 << i)
    found = {Subset(m, space.size) for m in classes.values()}
    if found != set(indistinguishability(space)):
        return f"classes {sorted(space.render(c) for c in found)} differ from atoms"
    for a in space.algebra.sets:
        rebuilt = 0
        for i in a:
            rebuilt |= classes[tuple(f.values[i] for f in sample.functions)]
        if rebuilt != a.mask:
            return f"{space.render(a)} is not a union of classes"
    return None


@dataclass
class TMeasurabilityAudit:
    conditions: Dict[str, bool]
    prime_bound: bool
    prime_complements: Optional[bool]
    witness: Optional[str] = None

    @property
    def verdict(self) -> bool:
        return self.conditions['separated']

    @property
    def consistent(self) -> bool:
        return len(set(self.conditions.values())) == 1 and self.prime_bound == self.verdict


def is_t_measurable(space: MeasurableSpace, sample: Optional[FunctionSample] = None) -> TMeasurabilityAudit:
    """
    Three independent T-measurability tests: separation by measurable sets,
    distinct point ideals, and at most one common zero per maximal ideal.
    Also the same bound over prime ideals and, on T-measurable spaces, that
    prime elements are exactly the co-singletons.
    """
    if sample is None:
        sample = FunctionSample(space, 0, 0)
    n = space.size
    labels = space.ground.labels
    conditions: Dict[str, bool] = {}
    witness = None

    separated = True
    for x in range(n):
        for y in range(x + 1, n):
            if not any((x in a) != (y in a) for a in space.algebra.sets):
                separated = False
                witness = f"{labels[x]} and {labels[y]} lie in the same measurable sets"
                break
        if not separated:
            break
    conditions['separated'] = separated

    point_ideals = [point_ideal(space, label).ideal for label in labels]
    conditions['distinct-point-ideals'] = len(set(point_ideals)) == n

    conditions['maximal-bound'] = all(
        len(m.ideal.zero_set_intersection(sample)) <= 1 for m in maximal_ideals(space, sample))

    prime_bound = all(
        len(z_preimage(f).zero_set_intersection(sample)) <= 1
        for f in enumerate_filters(space) if is_prime_filter(f))

    prime_complements = None
    if separated:
        prime_complements = all(
            is_prime_element(space, p) == (len(p.complement()) == 1) for p in space.algebra.sets)

    return TMeasurabilityAudit(conditions, prime_bound, prime_complements, witness)


def class_label(space: MeasurableSpace, cls: Subset) -> str:
    return '[' + ','.join(cls.labels(space.ground)) + ']'


@dataclass
class QuotientResult:
    quotient: MeasurableSpace
    theta: SpaceMorphism
    checks: Dict[str, bool] = field(default_factory=dict)
    witnesses: Dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def t_quotient(space: MeasurableSpace, sample: Optional[FunctionSample] = None,
               cover_cap: int = DEFAULT_COVER_CAP) -> QuotientResult:
    """
    Y = X/∼ with the weak algebra induced by {h_f}, θ(x) = [x].

    Verifies that Y is T-measurable, θ is onto, h_f∘θ = f, g ↦ g∘θ is a ring
    bijection on the function quotient, θ moves measurable sets both ways,
    and compact elements correspond under θ and θ⁻¹.
    """
    if sample is None:
        sample = FunctionSample(space, 0, 0)
    classes = indistinguishability(space)
    ground = GroundSet.from_labels([class_label(space, c) for c in classes])
    owner = [0] * space.size
    for k, cls in enumerate(classes):
        for i in cls:
            owner[i] = k
    representatives = [min(c) for c in classes]

    lifted = [[f.values[r] for r in representatives] for f in sample.functions]
    quotient = MeasurableSpace(ground, weak_sigma_algebra(ground, lifted))
    theta = SpaceMorphism(space, quotient, owner)
    checks: Dict[str, bool] = {}
    witnesses: Dict[str, str] = {}

    checks['t-measurable'] = is_t_measurable(quotient).verdict
    checks['surjective'] = theta.surjective

    naturality = True
    for f, row in zip(sample.functions, lifted):
        if tuple(row[owner[i]] for i in range(space.size)) != f.values:
            naturality = False
            witnesses['naturality'] = f"h_f∘θ ≠ f for {f.render()}"
            break
    checks['naturality'] = naturality

    checks['factors'] = all(is_measurable_row(quotient, row) for row in lifted)

    def pullback(g: MeasurableFn) -> MeasurableFn:
        return mk_fn(space, [g.values[owner[i]] for i in range(space.size)])

    quotient_patterns = FunctionSample(quotient, 0, 0).patterns
    kernel_zero = all(g.is_zero() or not pullback(g).is_zero() for g in quotient_patterns)
    images = {pullback(g) for g in quotient_patterns}
    onto = all(f in images for f in sample.patterns)
    homomorphic = all(
        pullback(add(g, h)) == add(pullback(g), pullback(h))
        and pullback(mul(g, h)) == mul(pullback(g), pullback(h))
        for g in quotient_patterns for h in quotient_patterns)
    checks['ring-bijection'] = kernel_zero and onto and homomorphic and pullback(one(quotient)) == one(space)

    checks['image-measurable'] = theta.forward_measurable
    checks['preimage-measurable'] = theta.backward_measurable

    checks['compact-image'] = all(
        is_compact_element(quotient, theta.image(a), cover_cap)
        for a in space.algebra.sets if is_compact_element(space, a, cover_cap))
    checks['compact-preimage'] = all(
        is_compact_element(space, theta.preimage(b), cover_cap)
        for b in quotient.algebra.sets if is_compact_element(quotient, b, cover_cap))

    checks['composition'] = composition_audit(space, ground, lifted, owner).composition_criterion_holds

    for name, ok in checks.items():
        if not ok and name not in witnesses:
            witnesses[name] = f"{name} failed for quotient of {len(classes)} classes"
    return QuotientResult(quotient, theta, checks, witnesses)


class SpectrumSpace:
    """max(M(X)) with the algebra generated by ℱ(f) = {M : f ∈ M}."""

    def __init__(self, source: MeasurableSpace, ideals: Sequence[MaxIdealPoint],
                 functions: Sequence[MeasurableFn]):
        self.source = source
        self.ideals = tuple(ideals)
        ground = GroundSet.from_labels([f"M{source.render(m.ideal.generator)}" for m in self.ideals])
        self.space = MeasurableSpace(ground, generate_sigma_algebra(
            ground, [self.family(f, ground.size) for f in functions]))

    def family(self, f: MeasurableFn, width: Optional[int] = None) -> Subset:
        mask = 0
        for k, m in enumerate(self.ideals):
            if m.ideal.contains(f):
                mask |= 1 << k
        return Subset(mask, width if width is not None else self.space.size)


@dataclass
class SpectrumResult:
    spectrum: SpectrumSpace
    phi: Optional[SpaceMorphism]
    checks: Dict[str, bool] = field(default_factory=dict)
    skipped_reason: Optional[str] = None

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def spectrum(space: MeasurableSpace, sample: Optional[FunctionSample] = None,
             cover_cap: int = DEFAULT_COVER_CAP) -> SpectrumResult:
    """
    Build max(M(X)) and its algebra for any X; when X is compact and
    T-measurable, also φ: x ↦ M_x and check it is a homeomorphism with
    φ[Z(f)] = ℱ(f).
    """
    if sample is None:
        sample = FunctionSample(space, 0, 0)
    ideals = maximal_ideals(space, sample)
    max_spec = SpectrumSpace(space, ideals, sample.functions)
    max_spec_space = max_spec.space
    checks: Dict[str, bool] = {}

    checks['F(1)=∅'] = not max_spec.family(one(space))
    checks['F(0)=all'] = max_spec.family(zero(space)).is_full()
    checks['complement-law'] = all(
        max_spec.family(f).complement() == max_spec.family(characteristic(space, zero_set(f)))
        for f in sample.functions)
    patterns = sample.patterns
    checks['union-law'] = all(
        (max_spec.family(f) | max_spec.family(g)) == max_spec.family(characteristic(space, cozero(f) & cozero(g)))
        for f in patterns for g in patterns)
    checks['spectrum-t-measurable'] = is_t_measurable(max_spec_space).verdict

    t_measurable = is_t_measurable(space, sample).verdict
    if not t_measurable:
        return SpectrumResult(max_spec, None, checks,
                              "space is not T-measurable; the homeomorphism x ↦ M_x needs separated points")
    if not is_compact_space(space, cover_cap):
        return SpectrumResult(max_spec, None, checks, "space is not compact")

    mapping = []
    for label in space.ground.labels:
        target = point_ideal(space, label).ideal
        mapping.append(next(k for k, m in enumerate(ideals) if m.ideal == target))
    phi = SpaceMorphism(space, max_spec_space, mapping)
    checks['phi-homeomorphism'] = phi.is_homeomorphism
    checks['phi-zero-sets'] = all(
        phi.image(zero_set(f)) == max_spec.family(f) and phi.preimage(max_spec.family(f)) == zero_set(f)
        for f in sample.functions)
    return SpectrumResult(max_spec, phi, checks)


def atom_sizes(space: MeasurableSpace) -> List[int]:
    return sorted(len(a) for a in space.atoms)


@dataclass
class HomeomorphismDecision:
    homeomorphic: bool
    witness: Optional[SpaceMorphism] = None
    certificate: Dict[str, List[int]] = field(default_factory=dict)


def spaces_homeomorphic(first: MeasurableSpace, second: MeasurableSpace) -> HomeomorphismDecision:
    """
    Compare the sorted multisets of atom sizes. When equal, match atoms of equal
    size in (size, least point) order, map points in increasing order, and
    verify the map; otherwise return the multiset difference.
    """
    sizes_first = Counter(atom_sizes(first))
    sizes_second = Counter(atom_sizes(second))
    if sizes_first != sizes_second:
        certificate = {
            'only_first': sorted((sizes_first - sizes_second).elements()),
            'only_second': sorted((sizes_second - sizes_first).elements()),
        }
        return HomeomorphismDecision(False, None, certificate)

    order = lambda space: sorted(space.atoms, key=lambda a: (len(a), min(a)))
    mapping = [0] * first.size
    for a, b in zip(order(first), order(second)):
        for i, j in zip(sorted(a), sorted(b)):
            mapping[i] = j
    witness = SpaceMorphism(first, second, mapping)
    if not witness.is_homeomorphism:
        raise InvariantViolation("Atom matching did not produce a homeomorphism")
    return HomeomorphismDecision(True, witness)


def find_homeomorphism_brute_force(first: MeasurableSpace, second: MeasurableSpace,
                                   max_points: int = 6) -> Optional[SpaceMorphism]:
    """Search every bijection for one satisfying the homeomorphism condition."""
    if first.size != second.size:
        return None
    if first.size > max_points:
        raise ResourceCapError("bijection search", max_points)
    for perm in permutations(range(second.size)):
        candidate = SpaceMorphism(first, second, perm)
        if candidate.is_homeomorphism:
            return candidate
    return None


@dataclass
class RingIsoDecision:
    isomorphic: bool
    atom_counts: Tuple[int, int]
    validated: Optional[bool] = None


def induced_ring_map_is_isomorphism(first: MeasurableSpace, second: MeasurableSpace) -> bool:
    """
    Send each function on the first space to the one with the same atom values
    on the second, and check it is a bijection of function quotients that
    preserves 𝟏, sums and products.
    """
    source = FunctionSample(first, 0, 0).patterns
    target = set(FunctionSample(second, 0, 0).patterns)

    def transfer(f: MeasurableFn) -> MeasurableFn:
        return from_atom_values(second, f.atom_values())

    images = [transfer(f) for f in source]
    if len(set(images)) != len(source) or set(images) != target:
        return False
    if transfer(one(first)) != one(second):
        return False
    return all(transfer(add(f, g)) == add(transfer(f), transfer(g))
               and transfer(mul(f, g)) == mul(transfer(f), transfer(g))
               for f in source for g in source)


def rings_isomorphic(first: MeasurableSpace, second: MeasurableSpace,
                     validate: bool = True) -> RingIsoDecision:
    """M(X) ≅ M(Y) exactly when the atom counts agree; small equal cases are validated by the induced map."""
    counts = (len(first.atoms), len(second.atoms))
    isomorphic = counts[0] == counts[1]
    validated = None
    if validate and isomorphic and counts[0] <= RING_VALIDATION_MAX_ATOMS:
        validated = induced_ring_map_is_isomorphism(first, second)
    return RingIsoDecision(isomorphic, counts, validated)


def compact_t_measurable(space: MeasurableSpace, cover_cap: int = DEFAULT_COVER_CAP) -> bool:
    return is_compact_space(space, cover_cap) and is_t_measurable(space).verdict
