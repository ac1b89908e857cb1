"""String attractors of episturmian sequences built by iterated palindromic closure."""

from .attractor import (
    Attractor,
    FactorContext,
    factor_attractor,
    mirror_attractor,
    next_attractor,
    prefix_attractor,
)
from .closure import closure_oracle, longest_pal_suffix_preceded_by, palindromic_closure
from .errors import CapExceeded, DirectiveError, DirectiveExhausted, EpistringError, FactorNotFound
from .oracle import letter_lower_bound, minimal_attractor
from .profile import ProfileTable, profile, profile_oracle_check
from .report import ConformanceReport, sweep
from .tower import (
    FIBONACCI,
    TRIBONACCI,
    DirectiveSpec,
    LevelRecord,
    Tower,
    build_tower,
    find_factor,
    palindromic_prefixes,
    parse_directive,
    sequence_prefix,
)
from .verifier import VerifyOutcome, crossing_occurrence, is_attractor, is_attractor_naive
from .words import Occurrence, distinct_factors, is_palindrome, occurrences, reverse

__all__ = [
    "Attractor", "FactorContext", "factor_attractor", "mirror_attractor", "next_attractor",
    "prefix_attractor", "closure_oracle", "longest_pal_suffix_preceded_by",
    "palindromic_closure", "CapExceeded", "DirectiveError", "DirectiveExhausted",
    "EpistringError", "FactorNotFound", "letter_lower_bound", "minimal_attractor",
    "ProfileTable", "profile", "profile_oracle_check", "ConformanceReport", "sweep",
    "FIBONACCI", "TRIBONACCI", "DirectiveSpec", "LevelRecord", "Tower", "build_tower",
    "find_factor", "palindromic_prefixes", "parse_directive", "sequence_prefix",
    "VerifyOutcome", "crossing_occurrence", "is_attractor", "is_attractor_naive",
    "Occurrence", "distinct_factors", "is_palindrome", "occurrences", "reverse",
]
