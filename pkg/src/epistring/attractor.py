"""String attractors of palindromic prefixes and factors of episturmian sequences.

For a tower level w_n the attractor is the set of m-values: for each letter a
of w_n, the length of the longest palindromic prefix of w_n followed by a.

A factor is handled at the least level n whose word contains it. If the
letter consumed at level n is new, w_n = w_{n-1} d w_{n-1} and the attractor
is the centre plus the shifted level attractor of the shortest level covering
the part right of the centre. Otherwise w_n = u d w_k d reverse(u) and the
attractor is the shifted level attractor of the shortest level covering the
part from just after the first d. When the left side needs a taller level
than the right side the mirrored occurrence is used and the result reflected.

The literal recipe is not guaranteed to produce an attractor of the factor
as a standalone word, so every factor result carries the verifier's verdict.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Mapping

from .errors import EpistringError
from .tower import DirectiveSpec, Tower, build_tower, locate_factor
from .verifier import is_attractor
from .words import is_palindrome

THEOREM_1 = "theorem-1"
MIRROR = "mirror"
CASE_1 = "theorem-2-case-1"
CASE_2 = "theorem-2-case-2"
MIRRORED_CASE = "mirrored-theorem-2"
ORACLE = "oracle"

VERIFIED = "verified"
FAILED = "failed"


@dataclass(frozen=True)
class FactorContext:
    level: int
    start: int
    case: int | None  # None when the factor is a whole level
    i: int
    j: int
    reversed: bool = False
    u_len: int | None = None  # case 2 only
    k: int | None = None  # case 2 only


@dataclass(frozen=True)
class Attractor:
    word: str
    positions: tuple[int, ...]
    provenance: str
    status: str | None = None
    witness: str | None = None
    context: FactorContext | None = None

    @property
    def word_length(self) -> int:
        return len(self.word)

    @property
    def verified(self) -> bool:
        return self.status == VERIFIED

    def with_verdict(self) -> Attractor:
        outcome = is_attractor(self.word, self.positions)
        return Attractor(
            self.word,
            self.positions,
            self.provenance,
            VERIFIED if outcome.passed else FAILED,
            outcome.witness,
            self.context,
        )

    def as_dict(self) -> dict:
        ctx = self.context
        return {
            "word": self.word,
            "positions": list(self.positions),
            "provenance": self.provenance,
            "status": self.status,
            "witness": self.witness,
            "case": ctx.case if ctx else None,
            "level": ctx.level if ctx else None,
            "occurrence_start": ctx.start if ctx else None,
            "context": asdict(ctx) if ctx else None,
        }


def prefix_attractor(tower: Tower, n: int, *, verify: bool = False) -> Attractor:
    """Attractor {m_a} of the level-n word; one position per letter."""
    if not 1 <= n <= tower.top:
        raise IndexError(f"level {n} outside 1..{tower.top}")
    rec = tower.levels[n]
    att = Attractor(tower.word(n), tuple(sorted(rec.m_map.values())), THEOREM_1)
    return att.with_verdict() if verify else att


def mirror_attractor(att: Attractor, *, verify: bool = False) -> Attractor:
    """Reflect an attractor of a palindrome: p -> L - 1 - p."""
    if not is_palindrome(att.word):
        raise ValueError(f"{att.word!r} is not a palindrome")
    size = len(att.word)
    out = Attractor(att.word, tuple(sorted(size - 1 - p for p in att.positions)), MIRROR)
    return out.with_verdict() if verify else out


def next_attractor(
    current: set[int] | frozenset[int],
    consumed: str,
    m_map: Mapping[str, int],
    prev_length: int,
) -> frozenset[int]:
    """Level-n attractor to level n+1 given the m-map of level n.

    The consumed letter's old position (if any) is replaced by the previous
    length; every other position is kept.
    """
    out = set(current)
    if consumed in m_map:
        out.discard(m_map[consumed])
    out.add(prev_length)
    return frozenset(out)


def _level_positions(tower: Tower, j: int, shift: int) -> list[int]:
    return [shift + m for m in tower.levels[j].m_map.values()]


def _construct(tower: Tower, n: int, s: int, size: int, allow_mirror: bool = True):
    """Candidate positions (in w_n coordinates) for the occurrence [s, s+size)."""
    levels = tower.levels
    prev_len = levels[n - 1].length
    delta = levels[n].consumed
    end = s + size
    if delta not in levels[n - 1].m_map:
        # w_n = w_{n-1} delta w_{n-1}; every occurrence crosses the centre
        centre = prev_len
        i = tower.minimal_level_with_length(centre - s)
        j = tower.minimal_level_with_length(end - centre - 1)
        ctx = FactorContext(n, s, 1, i, j)
        if j >= i:
            return [centre] + _level_positions(tower, j, centre + 1), ctx, CASE_1
    else:
        # w_n = u delta w_k delta reverse(u)
        k_len = levels[n - 1].m_map[delta]
        k = tower.level_of_length(k_len)
        u_len = prev_len - k_len - 1
        i = tower.minimal_level_with_length(max(prev_len - s, k_len + 1))
        j = tower.minimal_level_with_length(max(end - u_len - 1, k_len + 1))
        ctx = FactorContext(n, s, 2, i, j, u_len=u_len, k=k)
        if j >= i:
            # m of delta inside w_j must be |w_k|, i.e. the second delta
            assert levels[j].m_map[delta] == k_len, "m-map mismatch in interior case"
            return _level_positions(tower, j, u_len + 1), ctx, CASE_2
    if not allow_mirror:
        raise EpistringError(f"mirrored occurrence still needs mirroring (level {n}, start {s})")
    total = levels[n].length
    mirrored_start = total - end
    positions, inner, _ = _construct(tower, n, mirrored_start, size, allow_mirror=False)
    ctx = FactorContext(
        n, s, ctx.case, inner.j, inner.i, reversed=True, u_len=ctx.u_len, k=ctx.k
    )
    return [total - 1 - p for p in positions], ctx, MIRRORED_CASE


def factor_attractor(
    source: DirectiveSpec | Tower,
    target: str | tuple[int, int],
    level_cap: int | None = None,
    *,
    max_length: int | None = None,
) -> Attractor:
    """Attractor of a factor, built from the tower and then verified.

    ``target`` is either the factor itself or a ``(start, length)`` slice of
    the generated sequence. The factor is placed at its leftmost occurrence in
    the least level containing it. The returned status is whatever the
    verifier says about the candidate.
    """
    if isinstance(target, tuple):
        start, size = target
        if size <= 0 or start < 0:
            raise ValueError("factor reference needs start >= 0 and length >= 1")
        spec = source.spec if isinstance(source, Tower) else source
        if not isinstance(source, Tower) or len(source.prefix) < start + size:
            source = build_tower(spec, min_length=start + size, max_length=max_length)
        target = source.prefix[start : start + size]
        if len(target) < size:
            raise ValueError(f"sequence too short for slice ({start}, {size})")
    if not target:
        raise ValueError("target must be non-empty")
    tower, loc = locate_factor(source, target, level_cap, max_length=max_length)
    n, s = loc.level, loc.start
    if s == 0 and len(target) == tower.levels[n].length:
        att = prefix_attractor(tower, n)
        ctx = FactorContext(n, 0, None, n, n)
        return Attractor(target, att.positions, THEOREM_1, context=ctx).with_verdict()
    positions, ctx, provenance = _construct(tower, n, s, len(target))
    local = tuple(sorted(p - s for p in positions))
    return Attractor(target, local, provenance, context=ctx).with_verdict()
