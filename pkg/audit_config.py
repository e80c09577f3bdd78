"""
Audit Configuration for the Measurable Function Ring Auditor
Reads settings from the environment (after merging a local .env file) and
bootstraps logging for the entry points.
"""

import logging
import os
import sys
from dataclasses import dataclass

from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

# Configure logging
logger = logging.getLogger(__name__)

MIN_RANDOM_SAMPLES = 100
LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')


@dataclass(frozen=True)
class AuditSettings:
    seed: int = 7
    random_samples: int = MIN_RANDOM_SAMPLES
    cover_cap: int = 1 << 20
    fip_cap: int = 1 << 16
    max_sweep_points: int = 5
    report_dir: str = 'reports'
    log_level: str = 'INFO'

    def caps(self) -> dict:
        """Keyword arguments shared by the audit runners."""
        return {'random_samples': self.random_samples, 'cover_cap': self.cover_cap, 'fip_cap': self.fip_cap}


def _int_setting(name: str, default: int, minimum: int = 0) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == '':
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning(f"Ignoring {name}={raw!r}: not an integer, using {default}")
        return default
    if value < minimum:
        logger.warning(f"{name}={value} is below {minimum}, using {minimum}")
        return minimum
    return value


def get_settings() -> AuditSettings:
    """Current settings; invalid numeric values fall back with a warning."""
    level = os.environ.get('AUDIT_LOG_LEVEL', 'INFO').upper()
    if level not in LOG_LEVELS:
        logger.warning(f"Unknown AUDIT_LOG_LEVEL {level!r}, using INFO")
        level = 'INFO'
    return AuditSettings(
        seed=_int_setting('AUDIT_SEED', 7),
        random_samples=_int_setting('AUDIT_RANDOM_SAMPLES', MIN_RANDOM_SAMPLES, MIN_RANDOM_SAMPLES),
        cover_cap=_int_setting('AUDIT_COVER_CAP', 1 << 20, 1),
        fip_cap=_int_setting('AUDIT_FIP_CAP', 1 << 16, 1),
        max_sweep_points=_int_setting('AUDIT_MAX_SWEEP_POINTS', 5, 1),
        report_dir=os.environ.get('AUDIT_REPORT_DIR', 'reports'),
        log_level=level,
    )


def configure_logging(level: str = 'INFO'):
    """Send log records to stderr so report output on stdout stays clean."""
    logging.basicConfig(level=getattr(logging, level, logging.INFO), stream=sys.stderr,
                        format='%(asctime)s %(levelname)s %(name)s: %(message)s')
