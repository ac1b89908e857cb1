"""Conformance sweep: run the factor construction on every factor of a level."""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import config
from .attractor import Attractor, factor_attractor
from .errors import CapExceeded
from .oracle import has_attractor_of_size
from .tower import DirectiveSpec, build_tower
from .words import distinct_factors


@dataclass(frozen=True)
class SweepRow:
    attractor: Attractor
    size_d_exists: bool | None  # None when the factor is past the oracle cap

    def as_dict(self) -> dict:
        row = self.attractor.as_dict()
        row["distinct_letters"] = len(set(self.attractor.word))
        row["size_d_exists"] = self.size_d_exists
        return row


@dataclass(frozen=True)
class ConformanceReport:
    directive: str
    level: int
    level_word: str
    max_factor_length: int
    rows: tuple[SweepRow, ...]

    @property
    def failures(self) -> list[SweepRow]:
        return [r for r in self.rows if not r.attractor.verified]

    def summary(self) -> dict:
        total = len(self.rows)
        verified = total - len(self.failures)
        checked = [r for r in self.rows if r.size_d_exists is not None]
        by_provenance: dict[str, dict[str, int]] = {}
        for r in self.rows:
            slot = by_provenance.setdefault(r.attractor.provenance, {"verified": 0, "failed": 0})
            slot["verified" if r.attractor.verified else "failed"] += 1
        return {
            "factors": total,
            "verified": verified,
            "failed": total - verified,
            "pass_rate": round(verified / total, 6) if total else None,
            "oracle_checked": len(checked),
            "oracle_size_d_exists": sum(1 for r in checked if r.size_d_exists),
            "by_provenance": dict(sorted(by_provenance.items())),
        }

    def as_dict(self) -> dict:
        return {
            "directive": self.directive,
            "level": self.level,
            "level_word": self.level_word,
            "max_factor_length": self.max_factor_length,
            "rows": [r.as_dict() for r in self.rows],
            "summary": self.summary(),
            "failing": [
                {"word": r.attractor.word, "positions": list(r.attractor.positions),
                 "witness": r.attractor.witness}
                for r in self.failures
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2)


def sweep(
    spec: DirectiveSpec,
    level: int,
    max_factor_len: int,
    *,
    oracle_max_length: int | None = None,
    max_level_word: int = config.VERIFY_WARN_LENGTH,
) -> ConformanceReport:
    """Construct, verify and oracle-check an attractor for each distinct factor
    of the level word up to ``max_factor_len`` letters.

    Rows are ordered by length, then lexicographically.
    """
    oracle_max_length = (
        config.ORACLE_MAX_LENGTH if oracle_max_length is None else oracle_max_length
    )
    tower = build_tower(spec, level)
    if tower.top < level:
        raise CapExceeded(f"directive {spec} has only {tower.top} levels")
    word = tower.word(level)
    if len(word) > max_level_word:
        raise CapExceeded(f"level word has length {len(word)}, sweep cap is {max_level_word}")
    rows = []
    for f in distinct_factors(word):
        if len(f) > max_factor_len:
            break
        att = factor_attractor(tower, f)
        exists = None
        if len(f) <= oracle_max_length:
            exists = has_attractor_of_size(f, len(set(f)), max_length=oracle_max_length)
        rows.append(SweepRow(att, exists))
    return ConformanceReport(str(spec), level, word, max_factor_len, tuple(rows))
