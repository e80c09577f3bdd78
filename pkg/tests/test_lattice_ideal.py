from itertools import combinations

import pytest

from measurable.errors import ImproperError, InputShapeError, MembershipError, NoExtensionError, ResourceCapError
from measurable.lattice_ideal import (
    LatticeFilter, LatticeIdeal, disjoint_members, enumerate_filters, enumerate_ideals,
    extend_to_ultrafilter, fip_extension, fixed_or_free, has_fip, intersect_filters,
    is_prime_filter, is_prime_lattice_ideal, is_ultrafilter, is_ultrafilter_by_meets,
    max_id, principal_filter, principal_ideal, sigma_id
)
from measurable.space_core import GroundSet, intersect_all, space_from_partition
from measurable.sweep import set_partitions


def small_spaces(max_points=4):
    for n in range(1, max_points + 1):
        ground = GroundSet(n)
        for blocks in set_partitions(n):
            yield space_from_partition(ground, blocks)


def test_principal_constructors(split_space):
    a = split_space.subset(['a'])
    up = principal_filter(split_space, a)
    assert up.members == (a, split_space.full())
    assert up.render() == '↑{a}'
    assert principal_filter(split_space, split_space.full()).members == (split_space.full(),)
    down = principal_ideal(split_space, split_space.full())
    assert len(down) == 4
    assert not down.is_proper


def test_principal_filter_rejects_bad_generators(split_space):
    with pytest.raises(ImproperError):
        principal_filter(split_space, split_space.empty())
    with pytest.raises(MembershipError):
        principal_filter(split_space, split_space.subset(['b']))


def test_constructors_reject_unclosed_families(split_space):
    with pytest.raises(InputShapeError):
        LatticeFilter(split_space, [split_space.subset(['a'])])
    with pytest.raises(InputShapeError):
        LatticeIdeal(split_space, [split_space.full()])
    with pytest.raises(ImproperError):
        LatticeFilter(split_space, list(split_space.algebra))


def test_enumeration_counts(split_space, trivial_three, power_three):
    assert len(enumerate_filters(split_space)) == 3
    assert len(enumerate_ideals(split_space)) == 4
    assert len(enumerate_filters(trivial_three)) == 1
    assert len(enumerate_filters(power_three)) == 7


def test_principal_round_trip(power_three):
    for filt in enumerate_filters(power_three):
        assert principal_filter(power_three, filt.generator) == filt
        assert intersect_all(3, filt.members) == filt.generator


def test_ultrafilter_examples(split_space):
    assert is_ultrafilter(principal_filter(split_space, split_space.subset(['a'])))
    assert not is_ultrafilter(principal_filter(split_space, split_space.full()))


@pytest.mark.parametrize('space', list(small_spaces()), ids=lambda s: str(len(s.algebra)))
def test_ultrafilters_are_atoms(space):
    ultras = [f for f in enumerate_filters(space) if is_ultrafilter(f)]
    assert len(ultras) == len(space.atoms)
    for filt in enumerate_filters(space):
        assert is_ultrafilter(filt) == is_ultrafilter_by_meets(filt)
        assert is_ultrafilter(filt) == (filt.generator in space.atoms)
        if is_ultrafilter(filt):
            assert is_prime_filter(filt)
        assert fixed_or_free(filt).fixed
    for first, second in combinations(ultras, 2):
        assert disjoint_members(first, second) is not None


@pytest.mark.parametrize('space', list(small_spaces()), ids=lambda s: str(len(s.algebra)))
def test_prime_ideals_are_maximal(space):
    assert set(sigma_id(space)) == set(max_id(space))
    for j in sigma_id(space):
        assert j.generator.complement() in space.atoms


def test_prime_filter_examples(power_three, trivial_three):
    assert not is_prime_filter(principal_filter(power_three, power_three.subset(['a', 'b'])))
    assert is_prime_filter(principal_filter(trivial_three, trivial_three.full()))


def test_prime_lattice_ideal_examples(power_two, split_space):
    assert not is_prime_lattice_ideal(principal_ideal(power_two, power_two.empty()))
    assert is_prime_lattice_ideal(principal_ideal(split_space, split_space.subset(['b', 'c'])))
    with pytest.raises(ImproperError):
        is_prime_lattice_ideal(principal_ideal(split_space, split_space.full()))


def test_filter_intersection(power_three):
    a = principal_filter(power_three, power_three.subset(['a']))
    b = principal_filter(power_three, power_three.subset(['b']))
    meet = intersect_filters([a, b])
    assert meet == principal_filter(power_three, power_three.subset(['a', 'b']))
    with pytest.raises(InputShapeError):
        intersect_filters([])


def test_extend_to_ultrafilter(power_three):
    filt = principal_filter(power_three, power_three.subset(['b', 'c']))
    ultra = extend_to_ultrafilter(filt)
    assert filt <= ultra
    assert ultra.generator == power_three.subset(['b'])


def test_fip_examples(power_two):
    a, ab = power_two.subset(['a']), power_two.full()
    assert has_fip(power_two, [a, ab])
    assert fip_extension(power_two, [a, ab]) == principal_filter(power_two, a)
    b = power_two.subset(['b'])
    assert not has_fip(power_two, [a, b])
    with pytest.raises(NoExtensionError):
        fip_extension(power_two, [a, b])
    with pytest.raises(InputShapeError):
        has_fip(power_two, [])


def test_fip_cap(power_three):
    with pytest.raises(ResourceCapError):
        has_fip(power_three, list(power_three.algebra), cap=4)


@pytest.mark.parametrize('space', list(small_spaces(3)), ids=lambda s: str(len(s.algebra)))
def test_fip_families_have_common_points(space):
    members = space.algebra.sets
    for size in range(1, min(4, len(members)) + 1):
        for family in combinations(members, size):
            if has_fip(space, family):
                assert intersect_all(space.size, family)


def test_fixed_witness(split_space):
    result = fixed_or_free(principal_filter(split_space, split_space.subset(['a'])))
    assert result.kind == 'FIXED'
    assert result.witness == 'a'
    assert fixed_or_free(principal_filter(split_space, split_space.full())).fixed
