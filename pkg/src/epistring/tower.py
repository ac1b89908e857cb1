"""Palindromic-prefix towers of standard episturmian sequences.

A directive ``pre:period`` stands for the letter sequence
``pre + period + period + ...``; an empty period makes it finite. Level 0 is
the empty word and level ``n+1`` is the palindromic closure of level ``n``
followed by the directive letter at index ``n``.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping

from . import config
from .closure import palindromic_closure
from .errors import CapExceeded, DirectiveError, DirectiveExhausted, FactorNotFound

log = logging.getLogger(__name__)

APPEND = "append"
NEW_LETTER = "new-letter"
INTERIOR = "interior"

_DIRECTIVE_RE = re.compile(r"^([0-9A-Za-z]*):([0-9A-Za-z]*)$")


@dataclass(frozen=True)
class DirectiveSpec:
    preperiod: str = ""
    period: str = ""

    def __post_init__(self):
        if not self.preperiod and not self.period:
            raise DirectiveError("directive needs at least one letter")

    @property
    def is_finite(self) -> bool:
        return not self.period

    def letter(self, n: int) -> str | None:
        """Directive letter at index ``n``, or None past the end of a finite one."""
        if n < len(self.preperiod):
            return self.preperiod[n]
        if not self.period:
            return None
        return self.period[(n - len(self.preperiod)) % len(self.period)]

    def letters(self) -> list[str]:
        """Distinct directive letters in order of first appearance."""
        return list(dict.fromkeys(self.preperiod + self.period))

    def is_normalized(self) -> bool:
        """True when letters first appear as 0, 1, 2, ... in that order."""
        return self.letters() == [str(i) for i in range(len(self.letters()))]

    def __str__(self) -> str:
        return f"{self.preperiod}:{self.period}"


def parse_directive(text: str) -> DirectiveSpec:
    """Parse ``"<preperiod>:<period>"``, e.g. ``":01"`` for Fibonacci."""
    m = _DIRECTIVE_RE.match(text.strip())
    if m is None:
        raise DirectiveError(
            f"malformed directive {text!r}; expected '<preperiod>:<period>' "
            "with alphanumeric letters"
        )
    return DirectiveSpec(m.group(1), m.group(2))


FIBONACCI = DirectiveSpec("", "01")
TRIBONACCI = DirectiveSpec("", "012")


@dataclass(frozen=True)
class LevelRecord:
    length: int
    consumed: str | None  # letter used to reach this level; None at level 0
    case_tag: str | None
    m_map: Mapping[str, int] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "length": self.length,
            "consumed": self.consumed,
            "case": self.case_tag,
            "m_map": dict(sorted(self.m_map.items())),
        }


@dataclass(frozen=True)
class Tower:
    spec: DirectiveSpec
    prefix: str
    levels: tuple[LevelRecord, ...]
    exhausted: bool = False  # finite directive ran out before the stop condition

    @property
    def top(self) -> int:
        return len(self.levels) - 1

    def word(self, n: int) -> str:
        return self.prefix[: self.levels[n].length]

    def lengths(self) -> list[int]:
        return [rec.length for rec in self.levels]

    def level_of_length(self, length: int) -> int:
        for n, rec in enumerate(self.levels):
            if rec.length == length:
                return n
        raise KeyError(length)

    def minimal_level_with_length(self, at_least: int) -> int:
        for n, rec in enumerate(self.levels):
            if rec.length >= at_least:
                return n
        raise KeyError(at_least)


def _closure_step(w: str, a: str, m_map: Mapping[str, int]) -> str:
    # Palindromic suffixes of the palindrome w mirror its palindromic prefixes,
    # so the longest one preceded by `a` has length m_map[a].
    if a not in m_map:
        return w + a + w
    return w + w[m_map[a]:]


def build_tower(
    spec: DirectiveSpec,
    levels: int | None = None,
    min_length: int | None = None,
    *,
    max_length: int | None = None,
    max_levels: int | None = None,
    naive: bool = False,
    soft_length_cap: bool = False,
) -> Tower:
    """Build levels until ``levels`` levels exist or the prefix reaches ``min_length``.

    With both stops given, building ends as soon as either one is met. ``naive``
    computes every closure with the suffix scan instead of the m-map shortcut.
    A finite directive that runs out early yields a partial tower flagged
    ``exhausted``. With ``soft_length_cap`` the length cap ends the build
    instead of raising.
    """
    if levels is None and min_length is None:
        raise ValueError("give levels or min_length")
    max_length = config.MAX_PREFIX_LENGTH if max_length is None else max_length
    max_levels = config.MAX_LEVELS if max_levels is None else max_levels
    if levels is not None and levels > max_levels:
        raise CapExceeded(f"{levels} levels requested, cap is {max_levels}")
    if min_length is not None and min_length > max_length:
        raise CapExceeded(f"length {min_length} requested, cap is {max_length}")

    w = ""
    records = [LevelRecord(0, None, None, MappingProxyType({}))]
    m_map: dict[str, int] = {}
    exhausted = False
    while True:
        n = len(records) - 1
        if levels is not None and n >= levels:
            break
        if min_length is not None and len(w) >= min_length:
            break
        a = spec.letter(n)
        if a is None:
            exhausted = True
            log.warning("directive %s exhausted after %d levels", spec, n)
            break
        if n + 1 > max_levels:
            raise CapExceeded(f"level cap {max_levels} reached before stop condition")
        nxt = palindromic_closure(w, a) if naive else _closure_step(w, a, m_map)
        if len(nxt) > max_length:
            if soft_length_cap:
                break
            raise CapExceeded(
                f"level {n + 1} would have length {len(nxt)}, cap is {max_length}"
            )
        if a not in m_map:
            tag = NEW_LETTER
        elif len(nxt) == len(w) + 1:
            tag = APPEND
        else:
            tag = INTERIOR
        m_map = dict(m_map)
        m_map[a] = len(w)
        records.append(LevelRecord(len(nxt), a, tag, MappingProxyType(m_map)))
        w = nxt
    return Tower(spec, w, tuple(records), exhausted)


def sequence_prefix(spec: DirectiveSpec, n: int, **caps) -> str:
    """First ``n`` letters of the sequence generated by ``spec``."""
    if n <= 0:
        return ""
    tower = build_tower(spec, min_length=n, **caps)
    if len(tower.prefix) < n:
        raise DirectiveExhausted(
            f"directive {spec} yields only {len(tower.prefix)} letters, {n} requested"
        )
    return tower.prefix[:n]


def palindromic_prefixes(w: str) -> list[int]:
    """Lengths L (including 0) for which ``w[:L]`` is a palindrome."""
    return [n for n in range(len(w) + 1) if w[:n] == w[:n][::-1]]


@dataclass(frozen=True)
class FactorLocation:
    level: int
    start: int


def find_factor(
    source: DirectiveSpec | Tower,
    w: str,
    level_cap: int | None = None,
    *,
    max_length: int | None = None,
) -> FactorLocation | None:
    """Minimal tower level containing ``w`` and the leftmost start there.

    Returns None when ``w`` is not found within ``level_cap`` levels (or the
    length cap). Absence beyond the cap cannot be decided, so the two are
    reported the same way.
    """
    try:
        return locate_factor(source, w, level_cap, max_length=max_length)[1]
    except FactorNotFound:
        return None


def locate_factor(
    source: DirectiveSpec | Tower,
    w: str,
    level_cap: int | None = None,
    *,
    max_length: int | None = None,
) -> tuple[Tower, FactorLocation]:
    """Like ``find_factor`` but raises ``FactorNotFound``; also returns the tower searched."""
    if not w:
        raise ValueError("factor must be non-empty")
    level_cap = config.MAX_LEVELS if level_cap is None else level_cap
    if isinstance(source, Tower):
        tower = source
        if len(tower.prefix) < len(w) or tower.prefix.find(w) == -1:
            if tower.top < level_cap and not tower.exhausted:
                tower = _search_tower(tower.spec, level_cap, max_length)
    else:
        tower = _search_tower(source, level_cap, max_length)
    start = tower.prefix.find(w)
    if start == -1:
        raise FactorNotFound(w, tower.top, len(tower.prefix))
    # the leftmost occurrence is also the one that ends first
    return tower, FactorLocation(tower.minimal_level_with_length(start + len(w)), start)


def _search_tower(spec: DirectiveSpec, level_cap: int, max_length: int | None) -> Tower:
    return build_tower(
        spec,
        levels=level_cap,
        max_length=max_length,
        max_levels=max(level_cap, config.MAX_LEVELS),
        soft_length_cap=True,
    )
