"""
Audit Routes for Measurable Function Ring Auditor
Handles proposition audits on a single space and the exhaustive sweep.
"""

import logging
from flask import Blueprint, current_app, jsonify, request

from measurable.audits import audit_report
from measurable.sweep import run_sweep
from routes.space_routes import load_request_space, request_json

# Configure logging
logger = logging.getLogger(__name__)

audit_bp = Blueprint('audit', __name__)


@audit_bp.route('/audit', methods=['POST'])
def audit():
    """
    Audit {"space": doc, "props": [...], "seed": n}. Failing audits still
    answer 200 with "status": "fail".
    """
    data, error = request_json()
    if error:
        return error
    if not isinstance(data, dict) or 'space' not in data:
        return jsonify({'error': 'Body needs a "space" description'}), 400
    settings = current_app.config['AUDIT_SETTINGS']
    seed = data.get('seed', settings.seed)
    if not isinstance(seed, int) or seed < 0:
        return jsonify({'error': 'seed must be a non-negative integer'}), 400
    props = data.get('props') or None
    if props is not None and not isinstance(props, list):
        return jsonify({'error': 'props must be a list of proposition ids'}), 400

    doc, space, functions = load_request_space(data['space'])
    report = audit_report(space, doc.name, seed, doc.to_dict(), props,
                          extra=list(functions.values()), **settings.caps())
    logger.info(f"Audit of {doc.name}: {report.counts()}")
    return jsonify(report.to_dict())


@audit_bp.route('/sweep', methods=['GET'])
def sweep():
    """Sweep every sigma-algebra up to ?max_points= points (default 3)."""
    settings = current_app.config['AUDIT_SETTINGS']
    max_points = request.args.get('max_points', 3, type=int)
    seed = request.args.get('seed', settings.seed, type=int)
    report = run_sweep(max_points, seed, limit=settings.max_sweep_points, **settings.caps())
    return jsonify(report.to_dict())
