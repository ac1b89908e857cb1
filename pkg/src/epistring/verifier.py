"""Deciding whether a set of positions is a string attractor of a word.

Two independent strategies are provided:

* ``is_attractor_naive`` enumerates distinct factors and their occurrences.
* ``is_attractor`` (the default) uses a suffix automaton. Every state groups
  the factors sharing one set of end positions; a factor of length L ending
  at e has an occurrence touching the position set iff the nearest marked
  position at or before e is within L - 1 of it. So a state is fully covered
  iff the minimum such distance over its end positions is below the length of
  its shortest factor.

Both also come in a vectorized form that checks many position subsets of one
word at once (``CoverageIndex.passes_masks`` and ``naive_passing_masks``).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from . import config
from .words import Occurrence, distinct_factors, factor_order, occurrences

log = logging.getLogger(__name__)

_FAR = 1 << 30


@dataclass(frozen=True)
class VerifyOutcome:
    passed: bool
    witness: str | None = None
    witness_occurrences: tuple[Occurrence, ...] = field(default=())

    def __bool__(self) -> bool:
        return self.passed

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "witness": self.witness,
            "witness_occurrences": [list(o.positions) for o in self.witness_occurrences],
        }


def _check_positions(w: str, positions: Iterable[int]) -> list[int]:
    if not w:
        raise ValueError("cannot verify an attractor of the empty word")
    ps = sorted(set(positions))
    for p in ps:
        if not 0 <= p < len(w):
            raise ValueError(f"position {p} out of range for word of length {len(w)}")
    return ps


def _fail(w: str, witness: str) -> VerifyOutcome:
    return VerifyOutcome(False, witness, tuple(occurrences(w, witness)))


class SuffixAutomaton:
    """Suffix automaton of a word, with end-position bookkeeping.

    ``first_end[v]`` is the smallest end index (inclusive) of the factors of
    state ``v``; ``own_end[v]`` is the index whose prefix created ``v``, or -1
    for clones. The end-position set of ``v`` is the union of ``own_end`` over
    the suffix-link subtree rooted at ``v``.
    """

    def __init__(self, w: str):
        self.word = w
        length = [0]
        link = [-1]
        trans: list[dict[str, int]] = [{}]
        first_end = [-1]
        own_end = [-1]
        last = 0
        for i, c in enumerate(w):
            cur = len(length)
            length.append(length[last] + 1)
            link.append(-1)
            trans.append({})
            first_end.append(i)
            own_end.append(i)
            p = last
            while p != -1 and c not in trans[p]:
                trans[p][c] = cur
                p = link[p]
            if p == -1:
                link[cur] = 0
            else:
                q = trans[p][c]
                if length[p] + 1 == length[q]:
                    link[cur] = q
                else:
                    clone = len(length)
                    length.append(length[p] + 1)
                    link.append(link[q])
                    trans.append(dict(trans[q]))
                    first_end.append(first_end[q])
                    own_end.append(-1)
                    while p != -1 and trans[p].get(c) == q:
                        trans[p][c] = clone
                        p = link[p]
                    link[q] = clone
                    link[cur] = clone
            last = cur
        self.length = length
        self.link = link
        self.trans = trans
        self.first_end = first_end
        self.own_end = own_end
        # children before parents: decreasing length
        self.order = sorted(range(1, len(length)), key=length.__getitem__, reverse=True)

    def __len__(self) -> int:
        return len(self.length)

    def factors_of(self, v: int) -> list[str]:
        """Factors of state ``v`` from shortest to longest."""
        e = self.first_end[v]
        lo = self.length[self.link[v]] + 1
        return [self.word[e - k + 1 : e + 1] for k in range(lo, self.length[v] + 1)]

    def distinct_factor_count(self) -> int:
        return sum(self.length[v] - self.length[self.link[v]] for v in range(1, len(self)))


class CoverageIndex:
    """Suffix-automaton based attractor checks for one fixed word."""

    def __init__(self, w: str):
        if not w:
            raise ValueError("cannot verify an attractor of the empty word")
        if len(w) > config.VERIFY_WARN_LENGTH:
            log.warning("verifying a word of length %d; this may be slow", len(w))
        self.word = w
        self.sam = SuffixAutomaton(w)

    def _min_gaps(self, back_gap: list[int]) -> list[int]:
        sam = self.sam
        best = [_FAR] * len(sam)
        for v in sam.order:
            e = sam.own_end[v]
            if e >= 0 and back_gap[e] < best[v]:
                best[v] = back_gap[e]
            parent = sam.link[v]
            if best[v] < best[parent]:
                best[parent] = best[v]
        return best

    def _back_gaps(self, positions: list[int]) -> list[int]:
        marked = set(positions)
        gaps = []
        prev = -_FAR
        for i in range(len(self.word)):
            if i in marked:
                prev = i
            gaps.append(i - prev)
        return gaps

    def uncovered_states(self, positions: Iterable[int]) -> list[int]:
        ps = _check_positions(self.word, positions)
        best = self._min_gaps(self._back_gaps(ps))
        sam = self.sam
        return [v for v in range(1, len(sam)) if best[v] >= sam.length[sam.link[v]] + 1]

    def check(self, positions: Iterable[int]) -> VerifyOutcome:
        ps = _check_positions(self.word, positions)
        sam = self.sam
        best = self._min_gaps(self._back_gaps(ps))
        shortest: str | None = None
        for v in range(1, len(sam)):
            lo = sam.length[sam.link[v]] + 1
            if best[v] < lo:
                continue
            # every factor of v with length <= best[v] is uncovered; lo is the shortest
            e = sam.first_end[v]
            cand = self.word[e - lo + 1 : e + 1]
            if shortest is None or factor_order(cand) < factor_order(shortest):
                shortest = cand
        if shortest is None:
            return VerifyOutcome(True)
        return _fail(self.word, shortest)

    def passes(self, positions: Iterable[int]) -> bool:
        return not self.uncovered_states(positions)

    def passes_masks(self, masks: np.ndarray) -> np.ndarray:
        """Vectorized check; bit i of each mask marks position i."""
        masks = np.asarray(masks, dtype=np.int64)
        n = len(self.word)
        prev = np.full(masks.shape, -_FAR, dtype=np.int64)
        gaps = []
        for i in range(n):
            prev = np.where((masks >> i) & 1 == 1, i, prev)
            gaps.append(i - prev)
        sam = self.sam
        best = [None] * len(sam)
        for v in sam.order:
            e = sam.own_end[v]
            cur = best[v]
            if e >= 0:
                cur = gaps[e] if cur is None else np.minimum(cur, gaps[e])
                best[v] = cur
            parent = sam.link[v]
            if parent > 0:
                best[parent] = cur if best[parent] is None else np.minimum(best[parent], cur)
        ok = np.ones(masks.shape, dtype=bool)
        for v in range(1, len(sam)):
            ok &= best[v] < sam.length[sam.link[v]] + 1
        return ok


def is_attractor(w: str, positions: Iterable[int]) -> VerifyOutcome:
    """Check ``positions`` against every non-empty factor of ``w``.

    On failure the witness is the shortest, then lexicographically least,
    factor with no occurrence touching ``positions``; all its occurrences are
    attached.
    """
    return CoverageIndex(w).check(positions)


def is_attractor_naive(w: str, positions: Iterable[int]) -> VerifyOutcome:
    ps = _check_positions(w, positions)
    for f in distinct_factors(w):
        if not any(o.contains_any(ps) for o in occurrences(w, f)):
            return _fail(w, f)
    return VerifyOutcome(True)


def crossing_occurrence(w: str, f: str, positions: Iterable[int]) -> Occurrence | None:
    """Leftmost occurrence of ``f`` in ``w`` touching one of ``positions``."""
    ps = sorted(set(positions))
    for occ in occurrences(w, f):
        if occ.contains_any(ps):
            return occ
    return None


def naive_passing_masks(w: str, masks: np.ndarray) -> np.ndarray:
    """Vectorized reference check: a mask passes iff it meets, for every
    factor, the union of that factor's occurrence intervals."""
    masks = np.asarray(masks, dtype=np.int64)
    ok = np.ones(masks.shape, dtype=bool)
    for f in distinct_factors(w):
        union = 0
        for occ in occurrences(w, f):
            union |= ((1 << occ.length) - 1) << occ.start
        ok &= (masks & union) != 0
    return ok
