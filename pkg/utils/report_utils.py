"""
Rendering helpers: audit reports and constructions as deterministic text or
structured (sorted-key JSON) output.
"""

import json
import logging
from typing import Any, Dict, List, Optional

from measurable.fn_ring import MeasurableFn, cozero, is_unit, zero_set
from measurable.quotient_duality import (
    HomeomorphismDecision, QuotientResult, RingIsoDecision, SpaceMorphism, SpectrumResult
)
from measurable.report import AuditReport
from measurable.space_core import MeasurableSpace, prime_elements, serialize_family

# Configure logging
logger = logging.getLogger(__name__)


def render_structured(payload: Dict[str, Any]) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + '\n'


def _family(family: List[List[str]]) -> str:
    return ', '.join('{' + ','.join(s) + '}' if s else '∅' for s in family)


def render_report_text(report: AuditReport, timings: bool = False) -> str:
    lines = [f"seed: {report.seed}", f"version: {report.version}", '']
    for entry in report.sorted_entries():
        line = f"[{entry.status.value.upper():7}] {entry.prop_id:<16} {entry.space:<12} {entry.statement}"
        if timings:
            line += f" ({entry.elapsed * 1000:.1f} ms)"
        lines.append(line)
        if entry.witness:
            label = 'reason' if entry.status.value == 'skipped' else 'witness'
            lines.append(f"          {label}: {entry.witness}")
    counts = report.counts()
    lines.append('')
    lines.append(f"pass: {counts['pass']}  fail: {counts['fail']}  skipped: {counts['skipped']}")
    for name, doc in report.replay().items():
        lines.append(f"replay {name}: {json.dumps(doc, sort_keys=True, ensure_ascii=False)}")
    lines.append(f"status: {'PASS' if report.passed else 'FAIL'}")
    return '\n'.join(lines) + '\n'


def space_payload(space: MeasurableSpace) -> Dict[str, Any]:
    return {
        'points': list(space.ground.labels),
        'algebra': serialize_family(space.ground, space.algebra.sets),
        'atoms': serialize_family(space.ground, space.atoms),
        'size': len(space.algebra),
    }


def function_payload(f: MeasurableFn) -> Dict[str, Any]:
    ground = f.space.ground
    return {
        'values': {label: str(v) for label, v in zip(ground.labels, f.values)},
        'zero_set': zero_set(f).labels(ground),
        'cozero': cozero(f).labels(ground),
        'unit': is_unit(f),
    }


def generate_payload(name: str, space: MeasurableSpace,
                     functions: Optional[Dict[str, MeasurableFn]] = None) -> Dict[str, Any]:
    payload = {'name': name}
    payload.update(space_payload(space))
    payload['prime_elements'] = serialize_family(space.ground, prime_elements(space))
    if functions:
        payload['functions'] = {n: function_payload(f) for n, f in functions.items()}
    return payload


def morphism_payload(morphism: SpaceMorphism) -> Dict[str, Any]:
    data = {'map': [list(pair) for pair in morphism.table()]}
    data.update(morphism.flags())
    data['homeomorphism'] = morphism.is_homeomorphism
    return data


def quotient_payload(name: str, result: QuotientResult) -> Dict[str, Any]:
    return {
        'name': name,
        'quotient': space_payload(result.quotient),
        'theta': morphism_payload(result.theta),
        'checks': dict(result.checks),
        'status': 'pass' if result.passed else 'fail',
    }


def spectrum_payload(name: str, result: SpectrumResult) -> Dict[str, Any]:
    max_spec = result.spectrum
    payload = {
        'name': name,
        'spectrum': space_payload(max_spec.space),
        'maximal_ideals': {label: m.ideal.render()
                           for label, m in zip(max_spec.space.ground.labels, max_spec.ideals)},
        'checks': dict(result.checks),
        'status': 'pass' if result.passed else 'fail',
    }
    if result.phi is not None:
        payload['phi'] = morphism_payload(result.phi)
    else:
        payload['phi_skipped'] = result.skipped_reason
    return payload


def iso_payload(first_name: str, second_name: str, rings: RingIsoDecision,
                spaces: HomeomorphismDecision, separated: Dict[str, bool]) -> Dict[str, Any]:
    payload = {
        'first': first_name,
        'second': second_name,
        'rings': 'YES' if rings.isomorphic else 'NO',
        'spaces': 'YES' if spaces.homeomorphic else 'NO',
        'atom_counts': list(rings.atom_counts),
        'ring_map_validated': rings.validated,
    }
    if spaces.witness is not None:
        payload['witness'] = morphism_payload(spaces.witness)
    else:
        payload['certificate'] = spaces.certificate
    if rings.isomorphic and not spaces.homeomorphic:
        unseparated = [n for n, ok in (('first', separated['first']), ('second', separated['second'])) if not ok]
        if unseparated:
            payload['note'] = ' and '.join(unseparated) + ' space not T-measurable'
    return payload


def render_payload_text(payload: Dict[str, Any], indent: int = 0) -> str:
    """Indented key: value listing; label families print as {a,b}, ∅."""
    pad = ' ' * indent
    lines = []
    for key, value in payload.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(render_payload_text(value, indent + 2).rstrip('\n'))
        elif isinstance(value, list) and value and all(isinstance(v, list) for v in value):
            if key == 'map':
                lines.append(f"{pad}{key}: " + ', '.join(f"{a}→{b}" for a, b in value))
            else:
                lines.append(f"{pad}{key}: {_family(value)}")
        elif isinstance(value, list) and value and all(isinstance(v, int) for v in value):
            lines.append(f"{pad}{key}: [" + ', '.join(map(str, value)) + ']')
        elif isinstance(value, list):
            lines.append(f"{pad}{key}: " + ('{' + ','.join(map(str, value)) + '}' if value else '∅'))
        else:
            lines.append(f"{pad}{key}: {value}")
    return '\n'.join(lines) + '\n'
