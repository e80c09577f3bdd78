"""
Space Routes for Measurable Function Ring Auditor
Handles sigma-algebra generation, the T-quotient, the spectrum and the
isomorphism deciders.
"""

import logging
from flask import Blueprint, current_app, jsonify, request

from measurable.fn_ring import FunctionSample
from measurable.quotient_duality import (
    is_t_measurable, rings_isomorphic, spaces_homeomorphic, spectrum, t_quotient
)
from utils.doc_utils import doc_functions, parse_space_doc, space_from_doc
from utils.report_utils import generate_payload, iso_payload, quotient_payload, spectrum_payload

# Configure logging
logger = logging.getLogger(__name__)

space_bp = Blueprint('space', __name__)


def load_request_space(data):
    """Parse a space description from decoded JSON; errors surface as 400 through the app handlers."""
    doc = parse_space_doc(data)
    space = space_from_doc(doc)
    return doc, space, doc_functions(doc, space)


def request_json():
    data = request.get_json(silent=True)
    if data is None:
        return None, (jsonify({'error': 'Request body must be JSON'}), 400)
    return data, None


def request_sample(space, functions):
    settings = current_app.config['AUDIT_SETTINGS']
    seed = request.args.get('seed', settings.seed, type=int)
    return FunctionSample(space, seed, settings.random_samples, list(functions.values()))


@space_bp.route('/generate', methods=['POST'])
def generate():
    """Return the generated algebra, atoms and prime elements."""
    data, error = request_json()
    if error:
        return error
    doc, space, functions = load_request_space(data)
    logger.info(f"Generated {len(space.algebra)}-member algebra for {doc.name}")
    return jsonify(generate_payload(doc.name, space, functions))


@space_bp.route('/quotient', methods=['POST'])
def quotient():
    """Return X/∼ and the θ table."""
    data, error = request_json()
    if error:
        return error
    doc, space, functions = load_request_space(data)
    settings = current_app.config['AUDIT_SETTINGS']
    result = t_quotient(space, request_sample(space, functions), settings.cover_cap)
    return jsonify(quotient_payload(doc.name, result))


@space_bp.route('/spectrum', methods=['POST'])
def spectrum_route():
    """Return max(M(X)) and the φ table when X is T-measurable."""
    data, error = request_json()
    if error:
        return error
    doc, space, functions = load_request_space(data)
    settings = current_app.config['AUDIT_SETTINGS']
    result = spectrum(space, request_sample(space, functions), settings.cover_cap)
    return jsonify(spectrum_payload(doc.name, result))


@space_bp.route('/iso', methods=['POST'])
def iso():
    """Decide ring isomorphism and homeomorphism for {"first": doc, "second": doc}."""
    data, error = request_json()
    if error:
        return error
    if not isinstance(data, dict) or 'first' not in data or 'second' not in data:
        return jsonify({'error': 'Body needs "first" and "second" space descriptions'}), 400
    first_doc, first, _ = load_request_space(data['first'])
    second_doc, second, _ = load_request_space(data['second'])
    separated = {'first': is_t_measurable(first).verdict, 'second': is_t_measurable(second).verdict}
    payload = iso_payload(first_doc.name, second_doc.name, rings_isomorphic(first, second),
                          spaces_homeomorphic(first, second), separated)
    return jsonify(payload)
