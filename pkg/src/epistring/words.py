"""Word primitives.

Words are plain ``str`` values; a letter is a one-character string. Positions
are 0-indexed. An occurrence of a factor is the whole interval of positions it
covers, not only its start.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Occurrence:
    start: int
    length: int

    @property
    def stop(self) -> int:
        return self.start + self.length

    @property
    def positions(self) -> range:
        return range(self.start, self.start + self.length)

    def contains_any(self, positions) -> bool:
        return any(self.start <= p < self.stop for p in positions)


def reverse(w: str) -> str:
    return w[::-1]


def is_palindrome(w: str) -> bool:
    return w == w[::-1]


def occurrences(w: str, f: str) -> list[Occurrence]:
    """All occurrences of ``f`` in ``w``, overlapping ones included, by start."""
    if not f:
        raise ValueError("the empty factor has no occurrences")
    out = []
    i = w.find(f)
    while i != -1:
        out.append(Occurrence(i, len(f)))
        i = w.find(f, i + 1)
    return out


def factor_order(f: str) -> tuple[int, str]:
    """Sort key: length first, then lexicographic."""
    return (len(f), f)


def distinct_factors(w: str) -> list[str]:
    """Every distinct non-empty factor of ``w``, length-then-lexicographic."""
    seen = {w[i:j] for i in range(len(w)) for j in range(i + 1, len(w) + 1)}
    return sorted(seen, key=factor_order)


def alphabet(w: str) -> list[str]:
    """Distinct letters of ``w`` in character order."""
    return sorted(set(w))


def parse_positions(text: str) -> list[int]:
    """Parse ``"1,3"`` style position lists. Empty text gives an empty list."""
    text = text.strip()
    if not text:
        return []
    return sorted({int(p) for p in text.split(",")})


def render_marked(w: str, positions) -> str:
    """Bracket the letters at ``positions``: ``0[1]0[0]10``."""
    marked = set(positions)
    return "".join(f"[{c}]" if i in marked else c for i, c in enumerate(w))
