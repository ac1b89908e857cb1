"""String attractor profile of an episturmian sequence.

The minimum attractor size of the length-n prefix is the number of distinct
letters seen in that prefix; ``profile_oracle_check`` compares this formula
against exhaustive search.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import EpistringError
from .oracle import minimal_attractor
from .tower import DirectiveSpec, sequence_prefix


class ProfileMismatch(EpistringError):
    """The letter-count formula disagreed with exhaustive search."""


@dataclass(frozen=True)
class ProfileTable:
    prefix: str
    values: tuple[int, ...]  # values[n - 1] is s(n)

    def __getitem__(self, n: int) -> int:
        if n < 1:
            raise KeyError("the profile starts at n = 1")
        return self.values[n - 1]

    def rows(self) -> list[tuple[int, int]]:
        return [(n, v) for n, v in enumerate(self.values, start=1)]

    def stabilizes_at(self) -> int:
        """Least n from which the profile stays constant."""
        last = self.values[-1]
        n = len(self.values)
        while n > 1 and self.values[n - 2] == last:
            n -= 1
        return n


def profile(spec: DirectiveSpec, upto: int) -> ProfileTable:
    u = sequence_prefix(spec, upto)
    seen: set[str] = set()
    values = []
    for c in u:
        seen.add(c)
        values.append(len(seen))
    return ProfileTable(u, tuple(values))


@dataclass
class ProfileCheck:
    table: ProfileTable
    oracle: dict[int, int] = field(default_factory=dict)

    @property
    def disagreements(self) -> list[int]:
        return [n for n, size in self.oracle.items() if size != self.table[n]]

    @property
    def agrees(self) -> bool:
        return not self.disagreements

    def as_dict(self) -> dict:
        return {
            "rows": [
                {"n": n, "s": v, "oracle": self.oracle.get(n)} for n, v in self.table.rows()
            ],
            "disagreements": self.disagreements,
        }


def profile_oracle_check(
    spec: DirectiveSpec,
    upto: int,
    *,
    oracle_upto: int | None = None,
    strict: bool = True,
    **oracle_caps,
) -> ProfileCheck:
    """Run the exhaustive oracle on every prefix of length 1..oracle_upto.

    ``oracle_upto`` defaults to ``upto``. With ``strict`` any disagreement
    raises ``ProfileMismatch``.
    """
    check = ProfileCheck(profile(spec, upto))
    oracle_upto = upto if oracle_upto is None else min(oracle_upto, upto)
    for n in range(1, oracle_upto + 1):
        found = minimal_attractor(check.table.prefix[:n], **oracle_caps)
        check.oracle[n] = found.size
    if strict and not check.agrees:
        raise ProfileMismatch(f"formula and oracle disagree at n = {check.disagreements}")
    return check
