import json

import pytest

from measurable.space_core import MeasurableSpace, power_set_space, trivial_space


@pytest.fixture
def split_space():
    """{∅, {a}, {b,c}, X} on three points: b and c cannot be told apart."""
    return MeasurableSpace.from_generators(['a', 'b', 'c'], [['a']])


@pytest.fixture
def power_two():
    return power_set_space(['a', 'b'])


@pytest.fixture
def power_three():
    return power_set_space(['a', 'b', 'c'])


@pytest.fixture
def trivial_three():
    return trivial_space(['a', 'b', 'c'])


@pytest.fixture
def write_doc(tmp_path):
    """Write a space description to a temporary file and return its path."""

    def write(data, name='space.json'):
        path = tmp_path / name
        text = data if isinstance(data, str) else json.dumps(data, indent=2)
        path.write_text(text, encoding='utf-8')
        return str(path)

    return write


@pytest.fixture
def split_doc():
    return {
        'name': 'a|bc',
        'points': ['a', 'b', 'c'],
        'generators': [['a']],
        'functions': ['f = {a:1, b:1/2, c:1/2}'],
    }


@pytest.fixture
def pair_doc():
    return {'name': 'a|b', 'points': ['a', 'b'], 'generators': [['a']]}
