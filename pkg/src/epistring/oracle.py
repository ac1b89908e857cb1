"""Exhaustive search for minimum string attractors of short words."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import config
from .errors import CapExceeded
from .verifier import CoverageIndex


@dataclass(frozen=True)
class MinimalAttractor:
    size: int
    positions: tuple[int, ...]
    checked: int  # number of subsets handed to the verifier


def letter_lower_bound(w: str) -> int:
    """Every attractor holds each distinct letter at least once."""
    if not w:
        raise ValueError("w must be non-empty")
    return len(set(w))


def _candidates(w: str, k: int):
    """k-subsets in lexicographic order, skipping those missing a letter."""
    need = set(w)
    for subset in combinations(range(len(w)), k):
        if len({w[p] for p in subset}) == len(need):
            yield subset


def minimal_attractor(
    w: str,
    max_size: int | None = None,
    *,
    max_length: int | None = None,
    budget: int | None = None,
) -> MinimalAttractor | None:
    """Smallest attractor of ``w`` with the lexicographically least witness.

    Returns None if no attractor of size <= ``max_size`` exists. Raises
    ``CapExceeded`` when ``w`` is longer than ``max_length`` or the verifier
    would be called more than ``budget`` times.
    """
    max_length = config.ORACLE_MAX_LENGTH if max_length is None else max_length
    budget = config.ORACLE_BUDGET if budget is None else budget
    if len(w) > max_length:
        raise CapExceeded(f"word length {len(w)} exceeds oracle cap {max_length}")
    lower = letter_lower_bound(w)
    max_size = len(w) if max_size is None else min(max_size, len(w))
    index = CoverageIndex(w)
    checked = 0
    for k in range(lower, max_size + 1):
        for subset in _candidates(w, k):
            if checked >= budget:
                raise CapExceeded(f"oracle budget of {budget} verifier calls exhausted")
            checked += 1
            if index.passes(subset):
                return MinimalAttractor(k, subset, checked)
    return None


def all_minimum_attractors(w: str, **caps) -> list[tuple[int, ...]]:
    """Every minimum-size attractor of ``w``, lexicographically ordered."""
    best = minimal_attractor(w, **caps)
    index = CoverageIndex(w)
    return [s for s in _candidates(w, best.size) if index.passes(s)]


def has_attractor_of_size(w: str, k: int, **caps) -> bool:
    """Whether some attractor of ``w`` has at most ``k`` positions."""
    return minimal_attractor(w, max_size=k, **caps) is not None
