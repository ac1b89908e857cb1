"""Exception types shared by the package."""

from __future__ import annotations


class EpistringError(Exception):
    """Base class for all errors raised by epistring."""


class CapExceeded(EpistringError):
    """A configured size, level or budget cap would be exceeded."""


class DirectiveError(EpistringError, ValueError):
    """Malformed directive text."""


class DirectiveExhausted(EpistringError):
    """A finite directive ran out of letters before the request was met."""


class FactorNotFound(EpistringError):
    """The factor was not found in any tower level within the cap."""

    def __init__(self, word: str, levels_scanned: int, top_length: int):
        self.word = word
        self.levels_scanned = levels_scanned
        self.top_length = top_length
        super().__init__(
            f"{word!r} not found in levels 0..{levels_scanned} "
            f"(top prefix length {top_length})"
        )
