"""
Audit Reports for the Measurable Function Ring Auditor
Holds per-proposition entries and the space documents needed to replay them.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

# Configure logging
logger = logging.getLogger(__name__)


class Status(str, Enum):
    PASS = 'pass'
    FAIL = 'fail'
    SKIPPED = 'skipped'


@dataclass
class AuditEntry:
    """One proposition checked on one space (or on a family of spaces for pairwise checks)."""

    prop_id: str
    statement: str
    space: str
    status: Status
    witness: Optional[str] = None
    elapsed: float = 0.0
    involves: Tuple[str, ...] = ()

    @property
    def sort_key(self):
        return (self.prop_id, self.space)

    def to_dict(self, timings: bool = False) -> Dict[str, Any]:
        data = {
            'id': self.prop_id,
            'statement': self.statement,
            'space': self.space,
            'status': self.status.value,
            'witness': self.witness,
        }
        if self.involves:
            data['involves'] = list(self.involves)
        if timings:
            data['elapsed_ms'] = round(self.elapsed * 1000, 3)
        return data


@dataclass
class AuditReport:
    seed: int
    version: str
    entries: List[AuditEntry] = field(default_factory=list)
    spaces: Dict[str, Dict[str, Any]] = field(default_factory=dict)

    def add(self, entry: AuditEntry):
        if entry.status is Status.FAIL:
            logger.warning(f"{entry.prop_id} failed on {entry.space}: {entry.witness}")
        self.entries.append(entry)

    def extend(self, entries):
        for entry in entries:
            self.add(entry)

    def sorted_entries(self) -> List[AuditEntry]:
        return sorted(self.entries, key=lambda e: e.sort_key)

    @property
    def failures(self) -> List[AuditEntry]:
        return [e for e in self.sorted_entries() if e.status is Status.FAIL]

    @property
    def passed(self) -> bool:
        return not self.failures

    def counts(self) -> Dict[str, int]:
        counter = Counter(e.status.value for e in self.entries)
        return {status.value: counter.get(status.value, 0) for status in Status}

    def replay(self) -> Dict[str, Dict[str, Any]]:
        """Documents of every space a failure names, including the spaces behind pairwise failures."""
        failing = set()
        for entry in self.failures:
            failing.add(entry.space)
            failing.update(entry.involves)
        return {name: doc for name, doc in sorted(self.spaces.items()) if name in failing}

    def to_dict(self, timings: bool = False) -> Dict[str, Any]:
        """Structured form; failing spaces keep their documents so each failure can be replayed."""
        return {
            'seed': self.seed,
            'version': self.version,
            'status': 'pass' if self.passed else 'fail',
            'counts': self.counts(),
            'entries': [e.to_dict(timings) for e in self.sorted_entries()],
            'replay': self.replay(),
        }
