"""
Space description parsing: JSON documents naming points, generating subsets
and optional function literals such as `f = {a:1, b:1/2}`.
"""

import json
import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from measurable.errors import DocumentError, InputShapeError, MeasurableError
from measurable.fn_ring import MeasurableFn, mk_fn
from measurable.space_core import MeasurableSpace

# Configure logging
logger = logging.getLogger(__name__)

_LITERAL = re.compile(r'^\s*([A-Za-z_]\w*)\s*=\s*\{(.*)\}\s*$', re.DOTALL)
_RATIONAL = re.compile(r'^[+-]?\d+(/\d+)?$')


@dataclass
class SpaceDoc:
    name: str
    points: List[str]
    generators: List[List[str]]
    functions: Dict[str, Dict[str, str]] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        data = {'name': self.name, 'points': self.points, 'generators': self.generators}
        if self.functions:
            data['functions'] = [render_function_literal(n, v) for n, v in self.functions.items()]
        return data


def _locate(text: Optional[str], token: str) -> Tuple[Optional[int], Optional[int]]:
    """Line and column of the first occurrence of token in the source, if any."""
    if not text:
        return None, None
    index = text.find(token)
    if index < 0:
        return None, None
    line = text.count('\n', 0, index) + 1
    column = index - text.rfind('\n', 0, index)
    return line, column


def _fail(message: str, text: Optional[str], token: Optional[str] = None):
    line, column = _locate(text, token) if token else (None, None)
    raise DocumentError(message, line, column)


def parse_function_literal(literal: str, text: Optional[str] = None) -> Tuple[str, Dict[str, str]]:
    """
    Parse `name = {label:value, ...}` with integer or p/q values.

    Returns:
        (name, {label: value}) with values kept as normalized strings
    """
    match = _LITERAL.match(literal)
    if not match:
        _fail(f"Malformed function literal: {literal!r}", text, literal)
    name, body = match.group(1), match.group(2)
    values: Dict[str, str] = {}
    for item in filter(None, (part.strip() for part in body.split(','))):
        label, sep, value = (s.strip() for s in item.partition(':'))
        if not sep or not label:
            _fail(f"Function {name}: expected label:value, got {item!r}", text, item)
        if not _RATIONAL.match(value):
            _fail(f"Function {name}: {value!r} is not a rational literal", text, value)
        if label in values:
            _fail(f"Function {name}: label {label!r} given twice", text, item)
        try:
            values[label] = str(Fraction(value))
        except ZeroDivisionError:
            _fail(f"Function {name}: zero denominator in {value!r}", text, value)
    return name, values


def render_function_literal(name: str, values: Dict[str, str]) -> str:
    return f"{name} = {{" + ', '.join(f"{label}:{value}" for label, value in values.items()) + '}'


def parse_space_doc(data: Any, text: Optional[str] = None) -> SpaceDoc:
    """Validate an already-decoded document."""
    if not isinstance(data, dict):
        _fail("A space description must be a JSON object", text)

    name = data.get('name', 'space')
    if not isinstance(name, str) or not name:
        _fail("'name' must be a nonempty string", text, '"name"')

    points = data.get('points')
    if not isinstance(points, list) or not points:
        _fail("'points' must be a nonempty list of labels", text, '"points"')
    seen = set()
    for label in points:
        if not isinstance(label, str) or not label or label != label.strip():
            _fail(f"Malformed point label {label!r}", text, json.dumps(label))
        if label in seen:
            _fail(f"Duplicate point label {label!r}", text, json.dumps(label))
        seen.add(label)

    generators = data.get('generators', [])
    if not isinstance(generators, list):
        _fail("'generators' must be a list of label lists", text, '"generators"')
    for generator in generators:
        if not isinstance(generator, list):
            _fail(f"Generator {generator!r} must be a list of labels", text, '"generators"')
        for label in generator:
            if not isinstance(label, str):
                _fail(f"Generator label {label!r} must be a string", text, '"generators"')
            if label not in seen:
                _fail(f"Generator names unknown point {label!r}", text, json.dumps(label))

    raw_functions = data.get('functions', [])
    functions: Dict[str, Dict[str, str]] = {}
    if isinstance(raw_functions, list):
        for literal in raw_functions:
            if not isinstance(literal, str):
                _fail(f"Function literal {literal!r} must be a string", text, '"functions"')
            fname, values = parse_function_literal(literal, text)
            functions[fname] = values
    elif isinstance(raw_functions, dict):
        for fname, body in raw_functions.items():
            if isinstance(body, dict):
                body = '{' + ', '.join(f"{k}:{v}" for k, v in body.items()) + '}'
            parsed, values = parse_function_literal(f"{fname} = {body}", text)
            functions[parsed] = values
    else:
        _fail("'functions' must be a list of literals", text, '"functions"')

    for fname, values in functions.items():
        for label in values:
            if label not in seen:
                _fail(f"Function {fname} names unknown point {label!r}", text, label)

    return SpaceDoc(name, list(points), [list(g) for g in generators], functions)


def load_space_doc(text: str) -> SpaceDoc:
    """
    Parse a JSON space description.

    Raises:
        DocumentError: with line and column when the text is not valid JSON
            or names an unknown or malformed label
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"Invalid JSON: {e.msg}", e.lineno, e.colno) from None
    return parse_space_doc(data, text)


def read_space_doc(file_stream) -> SpaceDoc:
    """Read a space description from an uploaded file stream."""
    file_stream.seek(0)
    raw = file_stream.read()
    try:
        text = raw.decode('utf-8') if isinstance(raw, bytes) else raw
    except UnicodeDecodeError:
        raise DocumentError("Space description must be UTF-8 text") from None
    return load_space_doc(text)


def space_from_doc(doc: SpaceDoc) -> MeasurableSpace:
    """The measurable space generated by the document's subsets."""
    try:
        return MeasurableSpace.from_generators(doc.points, doc.generators)
    except InputShapeError as e:
        raise DocumentError(f"{doc.name}: {e}") from None


def doc_functions(doc: SpaceDoc, space: MeasurableSpace) -> Dict[str, MeasurableFn]:
    """Build each named function; a rejected one becomes a DocumentError naming the offending atom."""
    functions = {}
    for name, values in doc.functions.items():
        try:
            functions[name] = mk_fn(space, values)
        except MeasurableError as e:
            logger.warning(f"Function {name} rejected: {e}")
            raise DocumentError(f"Function {name}: {e}") from e
    return functions


def doc_from_space(space: MeasurableSpace, name: str) -> Dict[str, Any]:
    """A document regenerating the space: its atoms as generators."""
    labels = list(space.ground.labels)
    return {
        'name': name,
        'points': labels,
        'generators': [atom.labels(space.ground) for atom in space.atoms],
    }
