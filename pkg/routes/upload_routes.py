"""
Upload Routes for Measurable Function Ring Auditor
Handles space description uploads: audits the uploaded document and keeps
the structured report on disk.
"""

import os
import json
import logging
from datetime import datetime
from flask import Blueprint, current_app, jsonify, request
from werkzeug.utils import secure_filename

from measurable.audits import audit_report
from utils.doc_utils import doc_functions, read_space_doc, space_from_doc
from utils.report_utils import render_structured

# Configure logging
logger = logging.getLogger(__name__)

upload_bp = Blueprint('upload', __name__)

# Allowed file extensions
ALLOWED_EXTENSIONS = {'json'}


def allowed_file(filename):
    if '.' not in filename:
        return False
    ext = filename.rsplit('.', 1)[1].lower()
    return ext in ALLOWED_EXTENSIONS


def save_report_to_disk(report_text, filename, report_dir):
    """Save a structured report and return its path."""
    try:
        os.makedirs(report_dir, exist_ok=True)
        stem = os.path.splitext(filename)[0]
        stamp = datetime.now().strftime('%Y%m%d%H%M%S%f')
        file_path = os.path.join(report_dir, f"{stem}-{stamp}.report.json")
        with open(file_path, 'w', encoding='utf-8') as f:
            f.write(report_text)
        logger.info(f"Saved report to disk: {file_path}")
        return file_path
    except OSError as e:
        logger.error(f"Error saving report to disk: {str(e)}")
        return None


@upload_bp.route('/upload', methods=['POST'])
def upload_file():
    """
    Audit an uploaded .json space description and persist the report.
    """
    if 'file' not in request.files:
        return jsonify({'error': 'No file provided'}), 400

    file = request.files['file']
    if file.filename == '':
        return jsonify({'error': 'No file selected'}), 400

    filename = secure_filename(file.filename)
    if not allowed_file(filename):
        return jsonify({'error': 'Only .json space descriptions are accepted'}), 400

    # Check file size
    file.seek(0, 2)
    file_size = file.tell()
    file.seek(0)
    max_size = current_app.config['MAX_CONTENT_LENGTH']
    if file_size > max_size:
        return jsonify({'error': f'File too large. Max size is {max_size // 1024}KB'}), 413

    settings = current_app.config['AUDIT_SETTINGS']
    seed = request.form.get('seed', settings.seed, type=int)

    doc = read_space_doc(file.stream)
    space = space_from_doc(doc)
    functions = doc_functions(doc, space)
    report = audit_report(space, doc.name, seed, doc.to_dict(),
                          extra=list(functions.values()), **settings.caps())
    data = report.to_dict()

    path = save_report_to_disk(render_structured(data), filename, settings.report_dir)
    data['saved_as'] = os.path.basename(path) if path else None
    logger.info(f"Audited upload {filename}: {json.dumps(report.counts())}")
    return jsonify(data)
