# Routes package for the Measurable Function Ring Auditor
