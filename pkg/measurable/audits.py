"""
Proposition Audits for the Measurable Function Ring Auditor
Registry of every checked proposition and the runner that evaluates them on
one measurable space. Each check returns None on success or a witness string.
"""

import logging
import time
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Callable, Dict, List, Optional, Sequence

from measurable import __version__
from measurable.errors import (
    MeasurableError, NonUnitError, ResourceCapError, UnknownPropositionError
)
from measurable.fn_ring import (
    FunctionSample, MeasurableFn, abs_, add, annihilator, characteristic, cozero_union, inverse,
    is_unit, mul, one, zero_set, zero_set_family_closed, zero_set_image
)
from measurable.lattice_ideal import (
    DEFAULT_FIP_CAP, disjoint_members, enumerate_filters, extend_to_ultrafilter,
    fip_extension, has_fip, intersect_filters, is_prime_filter, is_ultrafilter,
    is_ultrafilter_by_meets, enumerate_ideals, max_id, principal_filter, sigma_id
)
from measurable.quotient_duality import (
    composition_audit_all_maps, indistinguishability_audit, is_t_measurable,
    rings_isomorphic, spaces_homeomorphic, spectrum, t_quotient, weak_sigma_algebra
)
from measurable.report import AuditEntry, AuditReport, Status
from measurable.ring_ideal import (
    compactness_equivalences_audit, gelfand_audit, ideal_from_lattice_ideal,
    ideal_from_prime_element, is_prime_ideal, maximal_ideals, mason_family, point_ideal,
    z_ideal_audits, z_image, z_image_audit, z_preimage, z_preimage_audit
)
from measurable.space_core import (
    DEFAULT_COVER_CAP, MeasurableSpace, atoms, audit_boolean_sigma_frame,
    generate_sigma_algebra, is_compact_element, is_compact_interval, is_compact_space,
    is_prime_element
)

# Configure logging
logger = logging.getLogger(__name__)


class AuditSkipped(Exception):
    """Raised by a check whose hypothesis does not hold on the space."""


@dataclass(frozen=True)
class Proposition:
    prop_id: str
    statement: str
    check: Callable[['AuditContext'], Optional[str]]


PROPOSITIONS: Dict[str, Proposition] = {}


def proposition(prop_id: str, statement: str):
    def register(check):
        PROPOSITIONS[prop_id] = Proposition(prop_id, statement, check)
        return check
    return register


class AuditContext:
    """Shared, lazily computed objects for all checks on one space."""

    def __init__(self, space: MeasurableSpace, name: str, seed: int,
                 random_samples: int = 100, cover_cap: int = DEFAULT_COVER_CAP,
                 fip_cap: int = DEFAULT_FIP_CAP, extra: Sequence[MeasurableFn] = ()):
        self.space = space
        self.name = name
        self.extra = tuple(extra)
        self.seed = seed
        self.random_samples = random_samples
        self.cover_cap = cover_cap
        self.fip_cap = fip_cap

    def render(self, subset) -> str:
        return self.space.render(subset)

    @cached_property
    def sample(self) -> FunctionSample:
        return FunctionSample(self.space, self.seed, self.random_samples, self.extra)

    @cached_property
    def filters(self):
        return enumerate_filters(self.space)

    @cached_property
    def ultrafilters(self):
        return [f for f in self.filters if is_ultrafilter(f)]

    @cached_property
    def maximal(self):
        return maximal_ideals(self.space, self.sample)

    @cached_property
    def prime_audits(self):
        return {f: is_prime_ideal(z_preimage(f), self.sample) for f in self.filters}

    @cached_property
    def t_audit(self):
        return is_t_measurable(self.space, self.sample)

    @cached_property
    def quotient(self):
        return t_quotient(self.space, self.sample, self.cover_cap)

    @cached_property
    def spectrum(self):
        return spectrum(self.space, self.sample, self.cover_cap)

    @cached_property
    def compactness(self):
        return compactness_equivalences_audit(self.space, self.sample, self.cover_cap, self.fip_cap)

    @cached_property
    def gelfand(self):
        return gelfand_audit(self.space, self.sample)


def _failed_checks(checks: Dict[str, bool], names: Sequence[str], witnesses=None) -> Optional[str]:
    failed = [n for n in names if not checks.get(n, False)]
    if not failed:
        return None
    details = [f"{n}: {witnesses[n]}" if witnesses and n in witnesses else n for n in failed]
    return '; '.join(details)


@proposition('sigma-frame', 'the algebra is a Boolean σ-frame generated by its own members')
def check_sigma_frame(ctx: AuditContext) -> Optional[str]:
    space = ctx.space
    for law in audit_boolean_sigma_frame(space, ctx.cover_cap):
        if not law.passed:
            return f"{law.law} law fails at {law.witness}"
    if generate_sigma_algebra(space.ground, space.algebra.sets) != space.algebra:
        return "regenerating from all members changes the algebra"
    if atoms(space) != space.atoms:
        return "fingerprint atoms differ from minimal members"
    for p in space.algebra.sets:
        if is_prime_element(space, p) != (p.complement() in space.atoms):
            return f"{ctx.render(p)}: prime element ⇎ complement of an atom"
    return None


@proposition('M15', 'zero-sets of M(X) are exactly the measurable sets')
def check_zero_sets(ctx: AuditContext) -> Optional[str]:
    space = ctx.space
    image = zero_set_image(space)
    if tuple(image) != space.algebra.sets:
        return f"Z[X] has {len(image)} members, algebra has {len(space.algebra)}"
    closure = zero_set_family_closed(space, ctx.sample.functions)
    if closure:
        return f"zero-sets not closed under ∩/∪ at {closure}"
    randoms = ctx.sample.randoms
    for f, g in zip(randoms, reversed(randoms)):
        if zero_set(mul(f, g)) != zero_set(f) | zero_set(g):
            return f"Z(fg) ≠ Z(f) ∪ Z(g) for f={f.render()}, g={g.render()}"
        if zero_set(add(mul(f, f), mul(g, g))) != zero_set(f) & zero_set(g):
            return f"Z(f²+g²) ≠ Z(f) ∩ Z(g) for f={f.render()}, g={g.render()}"
        if not zero_set(f) == zero_set(abs_(f)) == zero_set(f ** 2) == zero_set(f ** 3):
            return f"Z(f), Z(|f|), Z(fⁿ) differ for f={f.render()}"
    return None


@proposition('unit', 'f is a unit iff Z(f) = ∅')
def check_units(ctx: AuditContext) -> Optional[str]:
    space = ctx.space
    for f in ctx.sample.functions:
        if is_unit(f) != (not zero_set(f)):
            return f"is_unit({f.render()}) disagrees with its zero-set"
        if is_unit(f):
            if mul(f, inverse(f)) != one(space):
                return f"f·f⁻¹ ≠ 𝟏 for f={f.render()}"
        else:
            try:
                inverse(f)
            except NonUnitError:
                continue
            return f"inverse accepted the non-unit {f.render()}"
    return None


@proposition('chi', 'Z(χ_A) = A^c for every measurable A')
def check_characteristic(ctx: AuditContext) -> Optional[str]:
    for a in ctx.space.algebra.sets:
        if zero_set(characteristic(ctx.space, a)) != a.complement():
            return f"A={ctx.render(a)}"
    return None


@proposition('M25', 'Z_A-filters: ultrafilters, extensions, intersections')
def check_filters(ctx: AuditContext) -> Optional[str]:
    space = ctx.space
    for f in ctx.filters:
        if is_ultrafilter(f) != is_ultrafilter_by_meets(f):
            return f"{f.render()}: maximality and the meets criterion disagree"
        if is_ultrafilter(f) != (f.generator in space.atoms):
            return f"{f.render()}: ultrafilter ⇎ principal at an atom"
        ultra = extend_to_ultrafilter(f)
        if not (f <= ultra and is_ultrafilter(ultra)):
            return f"{f.render()} does not extend to {ultra.render()}"
    for f, g in combinations(ctx.filters, 2):
        meet = intersect_filters([f, g])
        if meet != principal_filter(space, f.generator | g.generator):
            return f"{f.render()} ∩ {g.render()} = {meet.render()}"
    for f, g in combinations(ctx.ultrafilters, 2):
        if disjoint_members(f, g) is None:
            return f"distinct ultrafilters {f.render()}, {g.render()} share no disjoint pair"
    if len(ctx.ultrafilters) != len(space.atoms):
        return f"{len(ctx.ultrafilters)} ultrafilters for {len(space.atoms)} atoms"
    return None


@proposition('M30', 'Z[I] is a Z_A-filter and Z⁻¹[F] a proper ideal')
def check_galois_maps(ctx: AuditContext) -> Optional[str]:
    for f in ctx.filters:
        witness = z_preimage_audit(f, ctx.sample) or z_image_audit(z_preimage(f), ctx.sample)
        if witness:
            return f"{f.render()}: {witness}"
        if any(not m for m in z_image(z_preimage(f)).members):
            return f"∅ ∈ Z[{z_preimage(f).render()}]"
    return None


@proposition('M35', 'Z is a bijection; ultrafilters ↔ maximal ideals')
def check_galois_bijection(ctx: AuditContext) -> Optional[str]:
    space = ctx.space
    for f in ctx.filters:
        if z_image(z_preimage(f)) != f:
            return f"Z[Z⁻¹[{f.render()}]] ≠ {f.render()}"
    top = principal_filter(space, space.full())
    zero_only = ctx.sample.select(ctx.sample.members_of(z_preimage(top)))
    if any(not f.is_zero() for f in zero_only):
        return "Z⁻¹[↑X] contains a nonzero function"
    if len(ctx.maximal) != len(space.atoms):
        return f"{len(ctx.maximal)} maximal ideals for {len(space.atoms)} atoms"
    for m in ctx.maximal:
        if not is_ultrafilter(z_image(m.ideal)):
            return f"Z[{m.ideal.render()}] is not an ultrafilter"
    for u in ctx.ultrafilters:
        if not z_preimage(u).is_maximal:
            return f"Z⁻¹[{u.render()}] is not maximal"
    return None


@proposition('M40', 'f meeting every member of Z[M] lies in M')
def check_meets_membership(ctx: AuditContext) -> Optional[str]:
    audit = ctx.compactness
    return None if audit.meets_ok else audit.witness


@proposition('M45', 'M_p is maximal and every maximal ideal is some M_p')
def check_point_ideals(ctx: AuditContext) -> Optional[str]:
    space = ctx.space
    ideals = {}
    for i, label in enumerate(space.ground.labels):
        point = point_ideal(space, label)
        if point.ideal.generator != space.atom_of(i):
            return f"Z[M_{label}] is not ↑ of the atom of {label}"
        ideals[i] = point.ideal
    for i, j in combinations(range(space.size), 2):
        if (ideals[i] == ideals[j]) != (space.atom_index(i) == space.atom_index(j)):
            labels = space.ground.labels
            return f"M_{labels[i]} = M_{labels[j]} disagrees with shared atom"
    for m in ctx.maximal:
        if m.ideal not in ideals.values():
            return f"{m.ideal.render()} is not a point ideal"
    return None


@proposition('M45-1', 'M^P is fixed maximal iff ⋃P ⊊ X, for prime lattice ideals P')
def check_prime_lattice_ideal_route(ctx: AuditContext) -> Optional[str]:
    space = ctx.space
    for j in sigma_id(space):
        m = ideal_from_lattice_ideal(j)
        criterion = not j.generator.is_full() and m.is_maximal
        direct = m.is_maximal and bool(m.zero_set_intersection(ctx.sample))
        if criterion != direct:
            return f"{j.render()}: criterion {criterion}, direct {direct}"
        if is_prime_element(space, j.generator):
            if ideal_from_prime_element(space, j.generator, ctx.sample) != m:
                return f"M^J and M_P differ for {j.render()}"
    return None


@proposition('M50', '𝔐(f) ⊆ 𝔐(g) ⇔ Z(f) ⊆ Z(g) ⇔ Ann(f) ⊆ Ann(g)')
def check_annihilator_order(ctx: AuditContext) -> Optional[str]:
    sample = ctx.sample
    patterns = sample.patterns
    partners = sample.zero_partners
    families = [mason_family(f, ctx.maximal) for f in patterns]
    anns = [annihilator(f) for f in patterns]
    for i, f in enumerate(patterns):
        literal = sum(1 << j for j, g in enumerate(patterns) if anns[i].contains(g))
        if literal != partners[i]:
            return f"Ann({f.render()}) disagrees with brute-force products"
    for i, f in enumerate(patterns):
        for j, g in enumerate(patterns):
            by_mason = families[i] <= families[j]
            by_zero = zero_set(f) <= zero_set(g)
            by_ann = anns[i] <= anns[j]
            by_products = partners[i] & ~partners[j] == 0
            if not by_mason == by_zero == by_ann == by_products:
                return f"f={f.render()}, g={g.render()}"
    return None


@proposition('M55/M65/M66', 'every ideal is a z-ideal, a Mason z-ideal and a Z°-ideal')
def check_z_ideals(ctx: AuditContext) -> Optional[str]:
    for f in ctx.filters:
        audit = z_ideal_audits(z_preimage(f), ctx.sample, ctx.maximal)
        if not audit.passed:
            failed = [n for n, ok in audit.conditions.items() if not ok]
            return f"{z_preimage(f).render()}: " + _failed_checks(audit.conditions, failed, audit.witnesses)
    return None


@proposition('M85', 'families with the finite intersection property have a common point')
def check_fip(ctx: AuditContext) -> Optional[str]:
    audit = ctx.compactness
    if not audit.fip_ok:
        return audit.witness
    space = ctx.space
    for family in combinations(space.algebra.sets, 2):
        if has_fip(space, family, ctx.fip_cap):
            ultra = fip_extension(space, family, ctx.fip_cap)
            if not all(s in ultra for s in family):
                return f"{ultra.render()} misses part of the family"
    return None


@proposition('M95', 'compactness ⇔ proper ideals fixed ⇔ maximal fixed ⇔ Z-filters fixed ⇔ ultrafilters fixed')
def check_compactness(ctx: AuditContext) -> Optional[str]:
    audit = ctx.compactness
    if audit.equivalent and all(audit.conditions.values()):
        return None
    return _failed_checks(audit.conditions, list(audit.conditions))


@proposition('M105', 'separation ⇔ distinct point ideals ⇔ |⋂ Z[M]| ≤ 1')
def check_t_measurable(ctx: AuditContext) -> Optional[str]:
    conditions = ctx.t_audit.conditions
    if len(set(conditions.values())) == 1:
        return None
    return ', '.join(f"{n}={v}" for n, v in conditions.items())


@proposition('M110', 'the four primeness conditions agree')
def check_prime_conditions(ctx: AuditContext) -> Optional[str]:
    for f, audit in ctx.prime_audits.items():
        if not audit.consistent:
            return f"{z_preimage(f).render()}: " + ', '.join(
                f"{n}={v}" for n, v in audit.conditions.items())
    for m in ctx.maximal:
        if not m.ideal.is_prime:
            return f"maximal {m.ideal.render()} is not prime"
    for f in ctx.filters:
        if not is_prime_filter(f):
            continue
        for g in ctx.filters:
            if f <= g and not is_prime_filter(g):
                return f"{z_preimage(g).render()} contains a prime but is not prime"
    return None


@proposition('M115', 'M(X) is Gelfand: each prime lies in a unique maximal ideal')
def check_gelfand(ctx: AuditContext) -> Optional[str]:
    audit = ctx.gelfand
    return None if audit.passed else audit.witness


@proposition('M120', 'prime ideals have at most one common zero iff X is T-measurable')
def check_prime_bound(ctx: AuditContext) -> Optional[str]:
    audit = ctx.t_audit
    if audit.prime_bound == audit.verdict:
        return None
    return f"prime bound {audit.prime_bound}, separated {audit.verdict}"


@proposition('M130', 'Z maps prime ideals onto prime Z_A-filters')
def check_prime_correspondence(ctx: AuditContext) -> Optional[str]:
    ring_primes = {f for f, audit in ctx.prime_audits.items() if audit.conditions['zero-product']}
    lattice_primes = {f for f in ctx.filters if is_prime_filter(f)}
    if ring_primes != lattice_primes:
        extra = sorted(f.render() for f in ring_primes ^ lattice_primes)
        return f"mismatch at {', '.join(extra)}"
    return None


@proposition('I=J', 'M^I = M^J iff I = J')
def check_lattice_ideal_injective(ctx: AuditContext) -> Optional[str]:
    ideals = enumerate_ideals(ctx.space)
    ring = [ideal_from_lattice_ideal(j) for j in ideals]
    for a, b in combinations(range(len(ideals)), 2):
        if (ring[a] == ring[b]) != (ideals[a] == ideals[b]):
            return f"{ideals[a].render()} vs {ideals[b].render()}"
    return None


@proposition('prime=max', 'Σ Id(A) = Max(Id(A))')
def check_prime_equals_max(ctx: AuditContext) -> Optional[str]:
    primes = set(sigma_id(ctx.space))
    maximal = set(max_id(ctx.space))
    if primes == maximal:
        return None
    return f"Σ Id: {sorted(j.render() for j in primes)}, Max Id: {sorted(j.render() for j in maximal)}"


@proposition('max', 'each maximal ideal is M^J for a unique J ∈ Σ Id(A)')
def check_unique_sigma_ideal(ctx: AuditContext) -> Optional[str]:
    primes = sigma_id(ctx.space)
    for m in ctx.maximal:
        count = sum(1 for j in primes if ideal_from_lattice_ideal(j) == m.ideal)
        if count != 1:
            return f"{m.ideal.render()} arises from {count} prime lattice ideals"
    return None


@proposition('fixmax', 'fixed maximal ideals are exactly M_P for prime elements P')
def check_fixed_maximal(ctx: AuditContext) -> Optional[str]:
    space = ctx.space
    from_primes = {p: ideal_from_prime_element(space, p, ctx.sample)
                   for p in space.algebra.sets if is_prime_element(space, p)}
    for m in ctx.maximal:
        if m.fixed != (m.ideal in from_primes.values()):
            return f"{m.ideal.render()}: fixed={m.fixed}"
    for p, ideal in from_primes.items():
        if ideal not in [m.ideal for m in ctx.maximal]:
            return f"M_P for P={ctx.render(p)} is not maximal"
    return None


@proposition('fixprim', 'fixed prime with ⋃coz ∈ A ⇔ fixed maximal')
def check_fixed_prime(ctx: AuditContext) -> Optional[str]:
    space = ctx.space
    sample = ctx.sample
    for f in ctx.filters:
        ideal = z_preimage(f)
        fixed = bool(ideal.zero_set_intersection(sample))
        cover = cozero_union(sample.select(sample.members_of(ideal)), space.size)
        prime_side = ctx.prime_audits[f].verdict and fixed and cover in space.algebra
        maximal_side = ideal.is_maximal and fixed
        if prime_side != maximal_side:
            return f"{ideal.render()}: prime side {prime_side}, maximal side {maximal_side}"
    return None


@proposition('M200/M205', 'every measurable set is compact, also as the interval ↑A^c')
def check_compact_elements(ctx: AuditContext) -> Optional[str]:
    space = ctx.space
    if not is_compact_space(space, ctx.cover_cap):
        return "X is not a compact element"
    for a in space.algebra.sets:
        element = is_compact_element(space, a, ctx.cover_cap)
        if not element:
            return f"{ctx.render(a)} is not compact"
        if is_compact_interval(space, a, ctx.cover_cap) != element:
            return f"↑{ctx.render(a.complement())} disagrees with {ctx.render(a)}"
    return None


@proposition('M200-1', 'θ and θ⁻¹ carry compact elements to compact elements')
def check_quotient_compactness(ctx: AuditContext) -> Optional[str]:
    result = ctx.quotient
    return _failed_checks(result.checks, ['compact-image', 'compact-preimage'], result.witnesses)


@proposition('M210', 'the spectrum is T-measurable with ℱ(𝟏)=∅, ℱ(𝟎)=all and the complement and union laws')
def check_spectrum(ctx: AuditContext) -> Optional[str]:
    result = ctx.spectrum
    witness = _failed_checks(result.checks,
                             ['F(1)=∅', 'F(0)=all', 'complement-law', 'union-law', 'spectrum-t-measurable'])
    if witness:
        return witness
    if ctx.t_audit.verdict:
        max_spec_space = result.spectrum.space
        again = spectrum(max_spec_space, cover_cap=ctx.cover_cap).spectrum.space
        if not spaces_homeomorphic(again, max_spec_space).homeomorphic:
            return "spectrum of the spectrum is not homeomorphic to it"
    return None


@proposition('M215', 'X ≅ max(M(X)) via x ↦ M_x for compact T-measurable X')
def check_spectrum_homeomorphism(ctx: AuditContext) -> Optional[str]:
    result = ctx.spectrum
    if result.skipped_reason:
        raise AuditSkipped(result.skipped_reason)
    return _failed_checks(result.checks, ['phi-homeomorphism', 'phi-zero-sets'])


@proposition('M220', 'M(X) ≅ M(Y) ⇔ X ≅ Y for compact T-measurable spaces')
def check_ring_duality(ctx: AuditContext) -> Optional[str]:
    space = ctx.space
    quotient = ctx.quotient.quotient
    if not rings_isomorphic(space, quotient, validate=False).isomorphic:
        return "M(X) and M(X/∼) have different atom counts"
    homeomorphic = spaces_homeomorphic(space, quotient).homeomorphic
    if homeomorphic != ctx.t_audit.verdict:
        return f"X ≅ X/∼ is {homeomorphic} but T-measurability is {ctx.t_audit.verdict}"
    if ctx.t_audit.verdict and not spaces_homeomorphic(space, space).homeomorphic:
        return "X is not homeomorphic to itself"
    return None


@proposition('M260/M270/M280', 'weak σ-algebras and the composition criterion for point maps')
def check_weak_algebra(ctx: AuditContext) -> Optional[str]:
    space = ctx.space
    if weak_sigma_algebra(space.ground, ctx.sample.functions) != space.algebra:
        return "M(X) does not regenerate the algebra"
    if len(weak_sigma_algebra(space.ground, [])) != 2:
        return "the empty family does not induce the trivial algebra"
    if not ctx.quotient.checks['composition']:
        return "composition criterion fails for θ"
    witness = composition_audit_all_maps(space, ctx.quotient.quotient)
    return f"composition criterion fails for {witness}" if witness else None


@proposition('M285', 'indistinguishability classes are the atoms and every member is a union of classes')
def check_indistinguishability(ctx: AuditContext) -> Optional[str]:
    return indistinguishability_audit(ctx.space, ctx.sample)


@proposition('M290', 'M(X) ≅ M(X/∼) via g ↦ g∘θ')
def check_quotient(ctx: AuditContext) -> Optional[str]:
    result = ctx.quotient
    witness = _failed_checks(result.checks, [
        't-measurable', 'surjective', 'naturality', 'factors', 'ring-bijection',
        'image-measurable', 'preimage-measurable'], result.witnesses)
    if witness:
        return witness
    again = t_quotient(result.quotient, cover_cap=ctx.cover_cap).quotient
    if not spaces_homeomorphic(again, result.quotient).homeomorphic:
        return "quotient of the quotient is not homeomorphic to it"
    return None


@proposition('X-P=1', 'on T-measurable spaces prime elements are the co-singletons')
def check_prime_complements(ctx: AuditContext) -> Optional[str]:
    audit = ctx.t_audit
    if not audit.verdict:
        raise AuditSkipped("space is not T-measurable")
    return None if audit.prime_complements else "a prime element has a complement of size ≠ 1"


@proposition('M295', 'M(X) ≅ M(X/∼) with X/∼ compact and T-measurable')
def check_quotient_ring(ctx: AuditContext) -> Optional[str]:
    quotient = ctx.quotient.quotient
    decision = rings_isomorphic(ctx.space, quotient)
    if not decision.isomorphic:
        return f"atom counts {decision.atom_counts}"
    if decision.validated is False:
        return "induced map on function quotients is not a ring isomorphism"
    if not is_compact_space(quotient, ctx.cover_cap):
        return "X/∼ is not compact"
    if not is_t_measurable(quotient).verdict:
        return "X/∼ is not T-measurable"
    return None


def resolve_props(props: Optional[Sequence[str]]) -> List[str]:
    """Proposition ids to run, in registry order; raises on unknown ids."""
    if not props:
        return list(PROPOSITIONS)
    unknown = [p for p in props if p not in PROPOSITIONS]
    if unknown:
        raise UnknownPropositionError(
            f"Unknown proposition id(s): {', '.join(unknown)}. Known: {', '.join(PROPOSITIONS)}")
    return [p for p in PROPOSITIONS if p in props]


def run_check(prop: Proposition, ctx: AuditContext) -> AuditEntry:
    started = time.perf_counter()
    try:
        witness = prop.check(ctx)
        status = Status.FAIL if witness else Status.PASS
    except AuditSkipped as e:
        status, witness = Status.SKIPPED, str(e)
    except ResourceCapError as e:
        status, witness = Status.SKIPPED, str(e)
    except MeasurableError as e:
        status, witness = Status.FAIL, f"{type(e).__name__}: {e}"
    elapsed = time.perf_counter() - started
    logger.debug(f"{prop.prop_id} on {ctx.name}: {status.value} in {elapsed:.3f}s")
    return AuditEntry(prop.prop_id, prop.statement, ctx.name, status, witness, elapsed)


def run_audit(space: MeasurableSpace, name: str, seed: int,
              props: Optional[Sequence[str]] = None, random_samples: int = 100,
              cover_cap: int = DEFAULT_COVER_CAP, fip_cap: int = DEFAULT_FIP_CAP,
              extra: Sequence[MeasurableFn] = ()) -> List[AuditEntry]:
    """Evaluate the selected propositions on one space; `extra` functions join the sample."""
    ids = resolve_props(props)
    ctx = AuditContext(space, name, seed, random_samples, cover_cap, fip_cap, extra)
    logger.info(f"Auditing {name}: {len(ids)} propositions, seed {seed}")
    entries = [run_check(PROPOSITIONS[p], ctx) for p in ids]
    failed = sum(1 for e in entries if e.status is Status.FAIL)
    logger.info(f"Finished {name}: {len(entries) - failed} of {len(entries)} not failing")
    return entries


def audit_report(space: MeasurableSpace, name: str, seed: int, doc: Dict,
                 props: Optional[Sequence[str]] = None, **caps) -> AuditReport:
    report = AuditReport(seed, __version__)
    report.spaces[name] = doc
    report.extend(run_audit(space, name, seed, props, **caps))
    return report
