"""
Measurable Function Ring Auditor - Main Flask Application
HTTP front-end for constructing measurable spaces and auditing their
function rings, ideals, quotients and spectra.
"""

import os
from datetime import datetime
import logging

from flask import Flask, jsonify
from flask_cors import CORS

from audit_config import configure_logging, get_settings
from measurable import __version__
from measurable.errors import InputError, MeasurabilityError, MeasurableError, ResourceCapError

# Import route modules
from routes.space_routes import space_bp
from routes.audit_routes import audit_bp
from routes.upload_routes import upload_bp

# Configure logging
logger = logging.getLogger(__name__)


def create_app(config=None):
    """Application factory pattern for Flask app creation."""
    settings = get_settings()
    configure_logging(settings.log_level)
    app = Flask(__name__)

    # Configuration
    app.config['SECRET_KEY'] = os.environ.get('SECRET_KEY', 'dev-secret-key-change-in-production')
    app.config['MAX_CONTENT_LENGTH'] = int(os.environ.get('MAX_CONTENT_LENGTH', 1024 * 1024))  # 1MB max upload
    app.config['AUDIT_SETTINGS'] = settings
    if config:
        app.config.update(config)

    # Enable CORS for frontend integration
    CORS(app, resources={r"/*": {"origins": "*"}})

    # Register blueprints
    app.register_blueprint(space_bp, url_prefix='/api')
    app.register_blueprint(audit_bp, url_prefix='/api')
    app.register_blueprint(upload_bp, url_prefix='/api')

    # Health check endpoint
    @app.route('/health')
    def health_check():
        """Health check endpoint for monitoring."""
        return jsonify({
            'status': 'healthy',
            'timestamp': datetime.now().isoformat(),
            'service': 'Measurable Function Ring Auditor',
            'version': __version__
        })

    # Error handlers
    @app.errorhandler(InputError)
    @app.errorhandler(MeasurabilityError)
    def input_error(error):
        return jsonify({'error': str(error), 'kind': type(error).__name__}), 400

    @app.errorhandler(ResourceCapError)
    def resource_cap(error):
        return jsonify({'error': str(error), 'kind': 'ResourceCapError'}), 413

    @app.errorhandler(MeasurableError)
    def library_error(error):
        logger.error(f"Library error: {error}")
        return jsonify({'error': str(error), 'kind': type(error).__name__}), 500

    @app.errorhandler(404)
    def not_found(error):
        return jsonify({'error': 'Endpoint not found'}), 404

    @app.errorhandler(500)
    def internal_error(error):
        logger.error(f"Internal server error: {error}")
        return jsonify({'error': 'Internal server error'}), 500

    @app.errorhandler(413)
    def file_too_large(error):
        limit = app.config['MAX_CONTENT_LENGTH'] // 1024
        return jsonify({'error': f'File too large. Maximum size is {limit}KB.'}), 413

    return app


if __name__ == '__main__':
    app = create_app()

    # Get configuration from environment variables
    debug_mode = os.environ.get('FLASK_DEBUG', 'False').lower() == 'true'
    host = os.environ.get('FLASK_HOST', '0.0.0.0')
    port = int(os.environ.get('PORT', os.environ.get('FLASK_PORT', 5000)))

    logger.info(f"Starting Measurable Function Ring Auditor on {host}:{port}")
    logger.info(f"Debug mode: {debug_mode}")

    app.run(
        host=host,
        port=port,
        debug=debug_mode
    )
