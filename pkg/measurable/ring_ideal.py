"""
Ring Ideals for the Measurable Function Ring Auditor
Ideals of M(X) held through their Z-filters: the Z / Z⁻¹ correspondence,
maximal, point, prime-element and M^J ideals, the four-way primeness check,
z-ideal conditions, the Gelfand property and the compactness equivalences.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Sequence

from measurable.errors import ImproperError, InvariantViolation, NotPrimeError
from measurable.fn_ring import (
    FunctionSample, MeasurableFn, cozero_union, join, meet,
    mul, partial_inverse, sub, zero, zero_set
)
from measurable.lattice_ideal import (
    DEFAULT_FIP_CAP, LatticeFilter, LatticeIdeal, enumerate_filters, fixed_or_free,
    has_fip, is_prime_filter, is_ultrafilter, principal_filter, sigma_id
)
from measurable.space_core import (
    DEFAULT_COVER_CAP, MeasurableSpace, Subset, intersect_all, is_compact_space,
    is_prime_element
)

# Configure logging
logger = logging.getLogger(__name__)


class RingIdealRep:
    """
    An ideal I of M(X), held intensionally: f ∈ I ⇔ Z(f) ∈ Z[I].

    Every ideal of M(X) is a z-ideal, so its zero-set family determines it.
    `zfilter` is None only for the whole ring (whose zero-sets include ∅).
    """

    def __init__(self, space: MeasurableSpace, zfilter: Optional[LatticeFilter]):
        self.space = space
        self.zfilter = zfilter
        self._flags: Dict[str, bool] = {}

    @classmethod
    def from_generator(cls, space: MeasurableSpace, generator: Subset) -> 'RingIdealRep':
        """The ideal {f : generator ⊆ Z(f)}."""
        if not generator:
            return cls(space, None)
        return cls(space, principal_filter(space, generator))

    @property
    def generator(self) -> Subset:
        return self.zfilter.generator if self.zfilter is not None else self.space.empty()

    @property
    def is_proper(self) -> bool:
        return self.zfilter is not None

    def contains_zero_set(self, z: Subset) -> bool:
        return self.generator <= z

    def contains(self, f: MeasurableFn) -> bool:
        return self.contains_zero_set(zero_set(f))

    __contains__ = contains

    def issubset(self, other: 'RingIdealRep') -> bool:
        return other.generator <= self.generator

    def __le__(self, other: 'RingIdealRep') -> bool:
        return self.issubset(other)

    def __eq__(self, other) -> bool:
        return isinstance(other, RingIdealRep) and self.space == other.space and self.generator == other.generator

    def __hash__(self) -> int:
        return hash(self.generator.mask)

    def zero_set_intersection(self, sample: FunctionSample) -> Subset:
        """⋂ Z(f) over the sampled members of the ideal."""
        return intersect_all(self.space.size,
                             (z for z in sample.zero_sets if self.contains_zero_set(z)))

    @property
    def is_maximal(self) -> bool:
        if 'maximal' not in self._flags:
            self._flags['maximal'] = self.is_proper and is_ultrafilter(self.zfilter)
        return self._flags['maximal']

    @property
    def is_prime(self) -> bool:
        if 'prime' not in self._flags:
            self._flags['prime'] = self.is_proper and is_prime_filter(self.zfilter)
        return self._flags['prime']

    def render(self) -> str:
        if self.zfilter is None:
            return 'M(X)'
        return f"Z⁻¹[{self.zfilter.render()}]"

    def __repr__(self) -> str:
        return f"RingIdealRep({self.render()})"


@dataclass
class MaxIdealPoint:
    ideal: RingIdealRep
    witness: Optional[str] = None

    @property
    def fixed(self) -> bool:
        return self.witness is not None


def _require_proper(ideal: RingIdealRep):
    if not ideal.is_proper:
        raise ImproperError("The whole ring is not a proper ideal")


def z_image(ideal: RingIdealRep) -> LatticeFilter:
    """Z[I], a Z_A-filter for every proper ideal."""
    _require_proper(ideal)
    return ideal.zfilter


def z_image_audit(ideal: RingIdealRep, sample: FunctionSample) -> Optional[str]:
    """Recompute {Z(f) : f ∈ I sampled} and check it lands inside Z[I] and avoids ∅."""
    filt = z_image(ideal)
    seen = [z for z in sample.zero_sets if ideal.contains_zero_set(z)]
    for z in seen:
        if z not in filt:
            return f"Z(f)={ideal.space.render(z)} outside {filt.render()}"
        if not z:
            return "∅ ∈ Z[I]"
    if filt.generator not in seen:
        return f"generator {ideal.space.render(filt.generator)} not attained by a sampled member"
    return None


def z_preimage(filt: LatticeFilter) -> RingIdealRep:
    """Z⁻¹[F] = {f : Z(f) ∈ F}, a proper ideal of M(X)."""
    if any(not m for m in filt.members):
        raise ImproperError("Z⁻¹ needs a proper filter")
    return RingIdealRep(filt.space, filt)


def z_preimage_audit(filt: LatticeFilter, sample: FunctionSample) -> Optional[str]:
    """Members of Z⁻¹[F] are closed under subtraction and under multiplication by M(X)."""
    ideal = z_preimage(filt)
    members = [f for f in sample.patterns if ideal.contains(f)]
    for f in members:
        for g in members:
            if not ideal.contains(sub(f, g)):
                return f"{f.render()} − {g.render()} escapes the ideal"
        for h in sample.functions:
            if not ideal.contains(mul(f, h)):
                return f"{f.render()} · {h.render()} escapes the ideal"
    if any(ideal.contains(f) and not zero_set(f) for f in sample.functions):
        return "a unit lies in the ideal"
    return None


def ideal_from_lattice_ideal(ideal: LatticeIdeal) -> RingIdealRep:
    """M^J = {f : coz(f) ∈ J}; its zero-sets are the complements of members of J."""
    space = ideal.space
    if not ideal.is_proper:
        return RingIdealRep(space, None)
    return RingIdealRep(space, LatticeFilter(space, (m.complement() for m in ideal.members)))


def maximal_ideals(space: MeasurableSpace, sample: Optional[FunctionSample] = None) -> List[MaxIdealPoint]:
    """
    All maximal ideals, computed from the Z_A-ultrafilters and again as M^J
    over J ∈ Σ Id(A); the two lists must agree.
    """
    from_ultrafilters = [z_preimage(f) for f in enumerate_filters(space) if is_ultrafilter(f)]
    from_sigma_id = [ideal_from_lattice_ideal(j) for j in sigma_id(space)]
    if set(from_ultrafilters) != set(from_sigma_id):
        raise InvariantViolation(
            f"Ultrafilter and Σ Id(A) constructions disagree: "
            f"{sorted(i.render() for i in from_ultrafilters)} vs {sorted(i.render() for i in from_sigma_id)}")
    if sample is None:
        sample = FunctionSample(space, 0, 0)
    points = []
    for ideal in from_ultrafilters:
        ideal._flags['maximal'] = True
        common = ideal.zero_set_intersection(sample)
        witness = space.ground.labels[min(common)] if common else None
        points.append(MaxIdealPoint(ideal, witness))
    points.sort(key=lambda p: (min(p.ideal.generator), p.ideal.generator.mask))
    return points


def point_ideal(space: MeasurableSpace, label: str) -> MaxIdealPoint:
    """M_p = {f : f(p) = 0}, whose Z-filter is ↑(smallest member containing p)."""
    p = space.ground.index(label)
    smallest = intersect_all(space.size, (s for s in space.algebra.sets if p in s))
    ideal = RingIdealRep(space, principal_filter(space, smallest))
    if not ideal.is_maximal:
        raise InvariantViolation(f"M_{label} is not maximal")
    return MaxIdealPoint(ideal, label)


def ideal_from_prime_element(space: MeasurableSpace, prime: Subset,
                             sample: Optional[FunctionSample] = None) -> RingIdealRep:
    """M_P = {f : coz(f) ⊆ P}, a fixed maximal ideal whose cozero-sets union to P."""
    if not is_prime_element(space, prime):
        raise NotPrimeError(f"{space.render(prime)} is not a prime element")
    ideal = RingIdealRep(space, principal_filter(space, prime.complement()))
    if sample is None:
        sample = FunctionSample(space, 0, 0)
    members = [f for f in sample.functions if ideal.contains(f)]
    if cozero_union(members, space.size) != prime:
        raise InvariantViolation(f"⋃ coz over M_P is not {space.render(prime)}")
    if not ideal.is_maximal or not ideal.zero_set_intersection(sample):
        raise InvariantViolation(f"M_P for {space.render(prime)} is not fixed maximal")
    return ideal


@dataclass
class PrimeIdealAudit:
    conditions: Dict[str, bool]
    witnesses: Dict[str, str] = field(default_factory=dict)

    @property
    def verdict(self) -> bool:
        return self.conditions['prime-zfilter']

    @property
    def consistent(self) -> bool:
        return len(set(self.conditions.values())) == 1


def is_prime_ideal(ideal: RingIdealRep, sample: FunctionSample) -> PrimeIdealAudit:
    """
    Evaluate the four primeness conditions independently:

    * prime-zfilter: Z[I] is a prime Z_A-filter
    * contains-prime: some prime ideal sits inside I
    * zero-product: fg = 𝟎 implies f ∈ I or g ∈ I
    * sign: every f keeps one sign on some member of Z[I]
    """
    _require_proper(ideal)
    space = ideal.space
    conditions: Dict[str, bool] = {}
    witnesses: Dict[str, str] = {}

    conditions['prime-zfilter'] = is_prime_filter(ideal.zfilter)

    conditions['contains-prime'] = any(
        f <= ideal.zfilter and is_prime_filter(f) for f in enumerate_filters(space))

    members = sample.members_of(ideal)
    partners = sample.zero_partners
    ok = True
    for i in range(sample.pattern_count):
        if members >> i & 1:
            continue
        outside = partners[i] & ~members
        if outside:
            j = (outside & -outside).bit_length() - 1
            witnesses['zero-product'] = (
                f"{sample.functions[i].render()} · {sample.functions[j].render()} = 𝟎")
            ok = False
            break
    conditions['zero-product'] = ok

    ok = True
    zfilter_members = ideal.zfilter.members
    for f in sample.functions:
        nonneg = zero_set(meet(f, zero(space)))
        nonpos = zero_set(join(f, zero(space)))
        if not any(z <= nonneg or z <= nonpos for z in zfilter_members):
            witnesses['sign'] = f"{f.render()} changes sign on every member"
            ok = False
            break
    conditions['sign'] = ok

    return PrimeIdealAudit(conditions, witnesses)


def mason_family(f: MeasurableFn, maximal: Sequence[MaxIdealPoint]) -> frozenset:
    """𝔐(f): indices of the maximal ideals containing f."""
    return frozenset(k for k, m in enumerate(maximal) if m.ideal.contains(f))


@dataclass
class ZIdealAudit:
    conditions: Dict[str, bool]
    witnesses: Dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.conditions.values())


def z_ideal_audits(ideal: RingIdealRep, sample: FunctionSample,
                   maximal: Optional[Sequence[MaxIdealPoint]] = None) -> ZIdealAudit:
    """
    Check the Z_A-ideal, Mason z-ideal and Z°-ideal conditions on the
    sign-pattern quotient, plus the constructive witness g = (g·h)·f.
    """
    _require_proper(ideal)
    space = ideal.space
    maximal = maximal if maximal is not None else maximal_ideals(space, sample)
    patterns = sample.patterns
    n = len(patterns)
    members = sample.members_of(ideal)
    zero_sets = sample.zero_sets
    conditions: Dict[str, bool] = {}
    witnesses: Dict[str, str] = {}

    def sweep(name: str, related):
        for i in range(n):
            if not members >> i & 1:
                continue
            for j in range(n):
                if not members >> j & 1 and related(i, j):
                    witnesses[name] = f"f={patterns[i].render()}, g={patterns[j].render()}"
                    conditions[name] = False
                    return
        conditions[name] = True

    sweep('z-ideal', lambda i, j: zero_sets[i] <= zero_sets[j])

    families = [mason_family(f, maximal) for f in patterns]
    sweep('mason', lambda i, j: families[i] <= families[j])

    ann = sample.zero_partners
    ann_ann = sample.double_annihilators
    sweep('ann-equal', lambda i, j: ann[i] == ann[j])

    ok = True
    for i in range(n):
        if members >> i & 1 and ann_ann[i] & ~members:
            witnesses['double-ann'] = f"Ann(Ann({patterns[i].render()})) ⊄ I"
            ok = False
            break
    conditions['double-ann'] = ok

    ok = True
    for i in range(n):
        if not members >> i & 1:
            continue
        f = patterns[i]
        h = partial_inverse(f)
        for g in sample.functions:
            if zero_sets[i] <= zero_set(g) and mul(mul(g, h), f) != g:
                witnesses['quotient-witness'] = f"g={g.render()} ≠ (g·h)·f for f={f.render()}"
                ok = False
                break
        if not ok:
            break
    conditions['quotient-witness'] = ok

    return ZIdealAudit(conditions, witnesses)


@dataclass
class GelfandAudit:
    containing: Dict[str, int]
    intersections_not_prime: bool
    witness: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.intersections_not_prime and all(count == 1 for count in self.containing.values())


def gelfand_audit(space: MeasurableSpace, sample: Optional[FunctionSample] = None) -> GelfandAudit:
    """Every prime ideal lies in exactly one maximal ideal; M ∩ M' is never prime."""
    maximal = maximal_ideals(space, sample)
    containing: Dict[str, int] = {}
    witness = None
    for filt in enumerate_filters(space):
        if not is_prime_filter(filt):
            continue
        prime = z_preimage(filt)
        count = sum(1 for m in maximal if prime <= m.ideal)
        containing[prime.render()] = count
        if count != 1 and witness is None:
            witness = f"{prime.render()} lies in {count} maximal ideals"

    intersections_ok = True
    for first, second in combinations(maximal, 2):
        common = set(first.ideal.zfilter.members) & set(second.ideal.zfilter.members)
        meet_ideal = RingIdealRep(space, LatticeFilter(space, common))
        if is_prime_filter(meet_ideal.zfilter):
            intersections_ok = False
            witness = witness or f"{first.ideal.render()} ∩ {second.ideal.render()} is prime"
    return GelfandAudit(containing, intersections_ok, witness)


@dataclass
class CompactnessAudit:
    conditions: Dict[str, bool]
    fip_ok: bool
    meets_ok: bool
    witness: Optional[str] = None

    @property
    def equivalent(self) -> bool:
        return len(set(self.conditions.values())) == 1

    @property
    def passed(self) -> bool:
        return self.equivalent and self.fip_ok and self.meets_ok


def compactness_equivalences_audit(space: MeasurableSpace, sample: FunctionSample,
                                   cover_cap: int = DEFAULT_COVER_CAP,
                                   fip_cap: int = DEFAULT_FIP_CAP,
                                   fip_family_size: int = 4) -> CompactnessAudit:
    """
    The five compactness conditions, each by its own procedure, plus the
    finite-intersection characterization and the "meets every member" rule
    for maximal ideals.
    """
    filters = enumerate_filters(space)
    conditions: Dict[str, bool] = {}
    witness = None

    conditions['compact-lattice'] = is_compact_space(space, cover_cap)

    conditions['proper-ideals-fixed'] = all(
        bool(z_preimage(f).zero_set_intersection(sample)) for f in filters)

    maximal = maximal_ideals(space, sample)
    conditions['maximal-ideals-fixed'] = all(m.fixed for m in maximal)

    conditions['zfilters-fixed'] = all(fixed_or_free(f).fixed for f in filters)

    conditions['ultrafilters-fixed'] = all(
        fixed_or_free(f).fixed for f in filters if is_ultrafilter(f))

    fip_ok = True
    members = space.algebra.sets
    for size in range(1, min(fip_family_size, len(members)) + 1):
        for family in combinations(members, size):
            if has_fip(space, family, fip_cap) and not intersect_all(space.size, family):
                fip_ok = False
                witness = f"FIP family [{', '.join(space.render(s) for s in family)}] has empty intersection"
                break
        if not fip_ok:
            break

    meets_ok = True
    for m in maximal:
        zmembers = m.ideal.zfilter.members
        for f, z in zip(sample.functions, sample.zero_sets):
            if all(z.meets(b) for b in zmembers) and not m.ideal.contains(f):
                meets_ok = False
                witness = witness or f"Z({f.render()}) meets Z[{m.ideal.render()}] but f ∉ M"
                break

    return CompactnessAudit(conditions, fip_ok, meets_ok, witness)

