"""Palindromic closure ``(wa)^(+)``: the shortest palindrome with prefix ``wa``."""

from __future__ import annotations

from .words import is_palindrome, reverse


def longest_pal_suffix_preceded_by(w: str, a: str) -> int | None:
    """Length of the longest palindromic suffix of ``w`` whose preceding letter is ``a``.

    A length of 0 is returned when ``w`` ends with ``a`` and nothing longer
    qualifies. ``None`` means no suffix qualifies.
    """
    if not w:
        raise ValueError("w must be non-empty")
    n = len(w)
    for length in range(n - 1, -1, -1):
        if w[n - length - 1] == a and is_palindrome(w[n - length:]):
            return length
    return None


def palindromic_closure(w: str, a: str) -> str:
    if len(a) != 1:
        raise ValueError(f"expected a single letter, got {a!r}")
    if not w:
        return a
    plen = longest_pal_suffix_preceded_by(w, a)
    if plen is None:
        # then the longest palindromic suffix of wa is "a" itself
        return w + a + reverse(w)
    v = w[: len(w) - plen]
    return w + reverse(v)


def closure_oracle(w: str, a: str) -> str:
    """Closure by scanning candidate lengths.

    For each length L the prefix ``wa`` plus the mirror constraint
    ``x[i] == x[L-1-i]`` forces every letter; the first L whose forced word
    is consistent wins.
    """
    head = w + a
    m = len(head)
    for total in range(m, 2 * len(w) + 2):
        forced = list(head)
        for i in range(m, total):
            forced.append(forced[total - 1 - i])
        if all(forced[i] == forced[total - 1 - i] for i in range(total)):
            return "".join(forced)
    raise AssertionError(f"no palindrome of length <= {2 * len(w) + 1} extends {head!r}")
