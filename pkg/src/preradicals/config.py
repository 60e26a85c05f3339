"""Work bounds threaded through every enumeration entry point."""

from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass, fields, replace
from pathlib import Path

ENV_VAR = "PRERADICAL_LIMITS"


@dataclass(frozen=True)
class Limits:
    """Upper bounds on brute-force work.

    ``subspace_work`` caps ``p ** (n * n)`` for subspace enumeration of F_p^n
    (default admits n <= 4 at p <= 5). ``subrep_tuples`` caps the cartesian
    product scanned by subrepresentation enumeration, ``endomorphism_search``
    the number of endomorphisms tried when hunting idempotents, and
    ``preradical_candidates`` the number of value tables filtered by
    naturality.
    """

    subspace_work: int = 5**16
    subrep_tuples: int = 1_000_000
    endomorphism_search: int = 100_000
    preradical_candidates: int = 2_000_000

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if not isinstance(value, int) or value <= 0:
                raise ValueError(f"limit {f.name} must be a positive integer, got {value!r}")

    @classmethod
    def from_mapping(cls, data: dict) -> "Limits":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown limit(s): {sorted(unknown)}")
        return replace(cls(), **data)

    @classmethod
    def from_file(cls, path) -> "Limits":
        return cls.from_mapping(json.loads(Path(path).read_text()))

    @classmethod
    def from_env(cls) -> "Limits":
        """Read ``PRERADICAL_LIMITS``: inline JSON or a path to a JSON file."""
        raw = os.environ.get(ENV_VAR)
        if not raw:
            return cls()
        raw = raw.strip()
        if raw.startswith("{"):
            return cls.from_mapping(json.loads(raw))
        return cls.from_file(raw)

    def to_dict(self) -> dict:
        return asdict(self)


DEFAULT_LIMITS = Limits()
