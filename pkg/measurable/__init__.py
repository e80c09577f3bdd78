"""
Measurable Function Ring Auditor
Rings of measurable functions on finite measurable spaces, their ideals,
filters, quotients and spectra, with exhaustive proposition audits.
"""

__version__ = '1.0.0'
