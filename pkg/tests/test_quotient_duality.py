from itertools import combinations_with_replacement

import pytest

from measurable.errors import InputShapeError
from measurable.fn_ring import FunctionSample, mk_fn, one, zero
from measurable.quotient_duality import (
    SpaceMorphism, composition_audit, composition_audit_all_maps, find_homeomorphism_brute_force,
    indistinguishability, indistinguishability_audit, induced_ring_map_is_isomorphism,
    is_t_measurable, rings_isomorphic, spaces_homeomorphic, spectrum, t_quotient,
    weak_sigma_algebra
)
from measurable.space_core import (
    GroundSet, MeasurableSpace, power_set_space, serialize_family, space_from_partition, trivial_space
)
from measurable.sweep import set_partitions


def spaces_on(n):
    ground = GroundSet.from_labels('abcde'[:n])
    return [space_from_partition(ground, blocks) for blocks in set_partitions(n)]


def test_weak_sigma_algebra_examples(split_space):
    ground = split_space.ground
    assert weak_sigma_algebra(ground, [[1, 0, 0]]) == split_space.algebra
    assert len(weak_sigma_algebra(ground, [])) == 2
    sample = FunctionSample(split_space, 3, 10)
    assert weak_sigma_algebra(ground, sample.functions) == split_space.algebra
    with pytest.raises(InputShapeError):
        weak_sigma_algebra(ground, [[1, 0]])


def test_composition_criterion_on_a_single_map(split_space, power_two):
    rows = [[1, 0], [0, 1]]
    through_atoms = composition_audit(split_space, power_two.ground, rows, [0, 1, 1])
    assert through_atoms.compositions_measurable and through_atoms.algebra_pulls_back
    splitting = composition_audit(split_space, power_two.ground, rows, [0, 0, 1])
    assert not splitting.compositions_measurable and not splitting.algebra_pulls_back
    assert splitting.composition_criterion_holds and splitting.generated_preimages_agree


def test_composition_criterion_over_all_maps(split_space, power_two):
    assert composition_audit_all_maps(split_space, power_two) is None


def test_indistinguishability(split_space, power_three, trivial_three):
    assert [c.labels(split_space.ground) for c in indistinguishability(split_space)] == [['a'], ['b', 'c']]
    assert all(len(c) == 1 for c in indistinguishability(power_three))
    assert indistinguishability(trivial_three) == (trivial_three.full(),)
    for space in (split_space, power_three, trivial_three):
        assert indistinguishability_audit(space, FunctionSample(space, 1, 20)) is None


def test_t_measurability(split_space, power_three, trivial_three):
    audit = is_t_measurable(power_three)
    assert audit.verdict and audit.consistent
    assert audit.prime_complements
    split = is_t_measurable(split_space)
    assert not split.verdict and split.consistent
    assert 'b and c' in split.witness
    assert split.prime_complements is None
    assert not is_t_measurable(trivial_three).verdict


@pytest.mark.parametrize('n', [1, 2, 3, 4])
def test_t_measurability_conditions_agree(n):
    for space in spaces_on(n):
        audit = is_t_measurable(space)
        assert audit.consistent
        assert audit.verdict == (len(space.atoms) == n)


def test_quotient_of_split_space(split_space):
    result = t_quotient(split_space, FunctionSample(split_space, 7, 100))
    assert result.passed, result.witnesses
    quotient = result.quotient
    assert quotient.ground.labels == ('[a]', '[b,c]')
    assert len(quotient.algebra) == 4
    assert result.theta.mapping == (0, 1, 1)
    assert result.theta.table() == [('a', '[a]'), ('b', '[b,c]'), ('c', '[b,c]')]


def test_quotient_of_separated_space_is_a_relabeling(power_three):
    result = t_quotient(power_three)
    assert result.passed
    assert result.theta.bijective
    assert spaces_homeomorphic(power_three, result.quotient).homeomorphic


def test_quotient_of_trivial_space_is_a_point(trivial_three):
    result = t_quotient(trivial_three)
    assert result.passed
    assert result.quotient.size == 1


@pytest.mark.parametrize('n', [1, 2, 3, 4])
def test_quotient_is_terminal(n):
    for space in spaces_on(n):
        once = t_quotient(space)
        assert once.passed, once.witnesses
        twice = t_quotient(once.quotient)
        assert spaces_homeomorphic(once.quotient, twice.quotient).homeomorphic


def test_spectrum_of_power_set(power_two):
    result = spectrum(power_two, FunctionSample(power_two, 7, 30))
    assert result.passed
    assert result.skipped_reason is None
    assert result.spectrum.space.size == 2
    assert result.phi.is_homeomorphism
    assert result.spectrum.family(one(power_two)).mask == 0
    assert result.spectrum.family(zero(power_two)).is_full()


def test_spectrum_on_unseparated_space_skips_phi(split_space):
    result = spectrum(split_space, FunctionSample(split_space, 7, 30))
    assert result.phi is None
    assert 'T-measurable' in result.skipped_reason
    assert result.passed
    assert result.spectrum.space.size == 2


def test_morphism_flags_are_recomputed(split_space, power_two):
    theta = SpaceMorphism(split_space, power_two, [0, 1, 1])
    assert theta.flags() == {
        'forward_measurable': True, 'backward_measurable': True,
        'injective': False, 'surjective': True,
    }
    assert not theta.is_homeomorphism
    broken = SpaceMorphism.from_table(power_two, split_space, {'a': 'a', 'b': 'b'})
    assert not broken.forward_measurable
    assert broken.backward_measurable
    with pytest.raises(InputShapeError):
        SpaceMorphism(split_space, power_two, [0, 1])
    with pytest.raises(InputShapeError):
        SpaceMorphism(split_space, power_two, [0, 1, 2])


def test_homeomorphism_examples(split_space, power_two, power_three):
    decision = spaces_homeomorphic(split_space, power_two)
    assert not decision.homeomorphic
    assert decision.certificate == {'only_first': [2], 'only_second': [1]}
    assert find_homeomorphism_brute_force(split_space, power_two) is None
    itself = spaces_homeomorphic(split_space, split_space)
    assert itself.homeomorphic
    assert itself.witness.mapping == (0, 1, 2)
    relabeled = power_set_space(['x', 'y', 'z'])
    assert spaces_homeomorphic(power_three, relabeled).homeomorphic


def test_atom_matching_witness_is_verified():
    first = MeasurableSpace.from_generators(['a', 'b', 'c', 'd'], [['a', 'b']])
    second = MeasurableSpace.from_generators(['a', 'b', 'c', 'd'], [['b', 'd']])
    decision = spaces_homeomorphic(first, second)
    assert decision.homeomorphic
    assert decision.witness.is_homeomorphism


@pytest.mark.parametrize('n', [1, 2, 3, 4, pytest.param(5, marks=pytest.mark.slow)])
def test_atom_sizes_match_brute_force(n):
    spaces = spaces_on(n)
    for first, second in combinations_with_replacement(spaces, 2):
        decided = spaces_homeomorphic(first, second).homeomorphic
        searched = find_homeomorphism_brute_force(first, second) is not None
        assert decided == searched


def test_ring_isomorphism_examples(split_space, power_two, power_three):
    decision = rings_isomorphic(split_space, power_two)
    assert decision.isomorphic
    assert decision.atom_counts == (2, 2)
    assert decision.validated is True
    assert rings_isomorphic(power_three, power_set_space(['x', 'y', 'z'])).isomorphic
    assert not rings_isomorphic(power_two, power_three).isomorphic
    assert rings_isomorphic(power_two, power_three).validated is None
    assert induced_ring_map_is_isomorphism(split_space, power_two)


def test_duality_on_separated_pairs():
    separated = [space for n in (1, 2, 3, 4) for space in spaces_on(n) if is_t_measurable(space).verdict]
    for first in separated:
        for second in separated:
            rings = rings_isomorphic(first, second, validate=False).isomorphic
            assert rings == spaces_homeomorphic(first, second).homeomorphic


def test_trivial_space_serialization():
    space = trivial_space(['a', 'b'])
    assert serialize_family(space.ground, space.algebra.sets) == [[], ['a', 'b']]
    assert mk_fn(space, [3, 3]).atom_values() == (3,)
