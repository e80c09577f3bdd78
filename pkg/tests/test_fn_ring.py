from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from measurable.errors import InputShapeError, MeasurabilityError, NonUnitError, SpaceMismatchError
from measurable.fn_ring import (
    FunctionSample, abs_, add, annihilator, characteristic, cozero, from_atom_values, inverse,
    is_unit, join, meet, mk_fn, mul, neg, neg_part, one, pos_part, random_functions, scalar,
    sign_patterns, sub, zero, zero_set, zero_set_image
)
from measurable.quotient_duality import level_sets
from measurable.space_core import GroundSet, MeasurableSpace, power_set_space, space_from_partition, trivial_space
from measurable.sweep import set_partitions

SPLIT = MeasurableSpace.from_generators(['a', 'b', 'c'], [['a']])
POWER = power_set_space(['a', 'b', 'c'])

rationals = st.fractions(min_value=-12, max_value=12, max_denominator=6)
split_fns = st.lists(rationals, min_size=2, max_size=2).map(lambda v: from_atom_values(SPLIT, v))
power_fns = st.lists(rationals, min_size=3, max_size=3).map(lambda v: mk_fn(POWER, v))


def test_mk_fn_accepts_atom_constant_values():
    f = mk_fn(SPLIT, [1, 0, 0])
    assert f.values == (Fraction(1), Fraction(0), Fraction(0))
    assert mk_fn(SPLIT, {'a': '1/2', 'b': 3, 'c': 3}).at('a') == Fraction(1, 2)


def test_mk_fn_names_the_violating_atom():
    with pytest.raises(MeasurabilityError) as excinfo:
        mk_fn(SPLIT, [1, 0, 2])
    assert excinfo.value.atom_labels == ('b', 'c')


def test_mk_fn_shape_errors():
    with pytest.raises(InputShapeError):
        mk_fn(SPLIT, [1, 0])
    with pytest.raises(InputShapeError):
        mk_fn(SPLIT, {'a': 1, 'b': 0})
    with pytest.raises(InputShapeError):
        mk_fn(SPLIT, {'a': 1, 'b': 0, 'c': 0, 'z': 4})
    with pytest.raises(InputShapeError):
        mk_fn(SPLIT, ['x', 0, 0])


@given(st.lists(rationals, min_size=3, max_size=3))
def test_power_set_accepts_any_values(values):
    assert mk_fn(POWER, values).values == tuple(values)


@pytest.mark.parametrize('n', [1, 2, 3])
def test_measurability_matches_level_set_oracle(n):
    ground = GroundSet(n)
    for blocks in set_partitions(n):
        space = space_from_partition(ground, blocks)
        for values in [[i % 2 for i in range(n)], [0] * n, list(range(n))]:
            measurable = all(s in space.algebra for s in level_sets(n, values))
            try:
                mk_fn(space, values)
                accepted = True
            except MeasurabilityError:
                accepted = False
            assert accepted == measurable


def test_product_and_sign_parts():
    f = mk_fn(SPLIT, [1, 0, 0])
    g = mk_fn(SPLIT, [0, 2, 2])
    assert mul(f, g).is_zero()
    h = mk_fn(SPLIT, [-1, 2, 2])
    assert pos_part(h) == mk_fn(SPLIT, [0, 2, 2])
    assert meet(h, zero(SPLIT)) == mk_fn(SPLIT, [-1, 0, 0])
    assert neg_part(h) == mk_fn(SPLIT, [1, 0, 0])


def test_sign_parts_multiply_to_zero_on_random_functions():
    for f in random_functions(SPLIT, seed=3, count=50):
        assert mul(join(f, zero(SPLIT)), meet(f, zero(SPLIT))).is_zero()


@given(power_fns, power_fns, power_fns)
@settings(max_examples=80)
def test_ring_axioms(f, g, h):
    assert add(add(f, g), h) == add(f, add(g, h))
    assert mul(mul(f, g), h) == mul(f, mul(g, h))
    assert mul(f, add(g, h)) == add(mul(f, g), mul(f, h))
    assert add(f, g) == add(g, f)
    assert mul(f, g) == mul(g, f)
    assert add(f, neg(f)) == zero(POWER)
    assert mul(f, one(POWER)) == f
    assert sub(f, g) == add(f, neg(g))


@given(split_fns)
def test_lattice_identities(f):
    z = zero(SPLIT)
    assert abs_(f) == sub(join(f, z), meet(f, z))
    assert f == sub(pos_part(f), neg_part(f))
    assert abs(f) == abs_(f)


@given(split_fns, split_fns)
def test_zero_set_laws(f, g):
    assert zero_set(mul(f, g)) == zero_set(f) | zero_set(g)
    assert zero_set(add(mul(f, f), mul(g, g))) == zero_set(f) & zero_set(g)
    assert zero_set(add(abs_(f), abs_(g))) == zero_set(f) & zero_set(g)
    assert zero_set(f) == zero_set(abs_(f)) == zero_set(f ** 2) == zero_set(f ** 3)
    assert cozero(f) == zero_set(f).complement()
    assert zero_set(f) in SPLIT.algebra


def test_zero_set_example():
    assert zero_set(mk_fn(SPLIT, [1, 0, 0])) == SPLIT.subset(['b', 'c'])


def test_characteristic_functions():
    a = SPLIT.subset(['a'])
    assert characteristic(SPLIT, a) == mk_fn(SPLIT, [1, 0, 0])
    assert characteristic(SPLIT, SPLIT.empty()) == zero(SPLIT)
    for member in SPLIT.algebra:
        assert zero_set(characteristic(SPLIT, member)) == member.complement()


def test_units_and_inverse():
    f = mk_fn(SPLIT, [2, 3, 3])
    assert is_unit(f)
    assert inverse(f) == mk_fn(SPLIT, ['1/2', '1/3', '1/3'])
    assert inverse(one(SPLIT)) == one(SPLIT)
    assert not is_unit(mk_fn(SPLIT, [1, 0, 0]))
    with pytest.raises(NonUnitError):
        inverse(mk_fn(SPLIT, [1, 0, 0]))


@given(split_fns)
def test_unit_iff_empty_zero_set(f):
    assert is_unit(f) == (not zero_set(f))
    if is_unit(f):
        assert mul(f, inverse(f)) == one(SPLIT)


def test_annihilators():
    f = mk_fn(SPLIT, [1, 0, 0])
    ann = annihilator(f)
    for g in sign_patterns(SPLIT):
        assert ann.contains(g) == mul(f, g).is_zero()
        assert ann.contains(g) == (g.at('a') == 0)
    unit_ann = annihilator(mk_fn(SPLIT, [2, 5, 5]))
    assert [g for g in sign_patterns(SPLIT) if unit_ann.contains(g)] == [zero(SPLIT)]
    assert not annihilator(zero(SPLIT)).is_proper


def test_scalars_are_constant_functions():
    assert scalar(SPLIT, '3/4').values == (Fraction(3, 4),) * 3
    assert mul(scalar(SPLIT, 2), one(SPLIT)) == scalar(SPLIT, 2)


def test_space_mismatch_is_rejected():
    with pytest.raises(SpaceMismatchError):
        add(one(SPLIT), one(POWER))


def test_zero_set_image_is_the_algebra():
    assert len(zero_set_image(SPLIT)) == 4
    assert tuple(zero_set_image(POWER)) == POWER.algebra.sets
    assert len(zero_set_image(trivial_space(['a', 'b']))) == 2


def test_function_sample_is_seeded():
    first = FunctionSample(SPLIT, seed=11, random_count=20)
    second = FunctionSample(SPLIT, seed=11, random_count=20)
    assert first.functions == second.functions
    assert len(first) == 9 + 20
    extra = mk_fn(SPLIT, ['1/7', 5, 5])
    assert extra in FunctionSample(SPLIT, 11, 0, [extra]).functions
    with pytest.raises(SpaceMismatchError):
        FunctionSample(SPLIT, 11, 0, [one(POWER)])
