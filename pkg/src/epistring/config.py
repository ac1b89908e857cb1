"""Default caps, overridable through environment variables."""

from __future__ import annotations

import os


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    return int(raw)


MAX_PREFIX_LENGTH = _env_int("EPISTRING_MAX_LENGTH", 10**7)
MAX_LEVELS = _env_int("EPISTRING_MAX_LEVELS", 64)
# beyond this the verifier still runs but logs a warning
VERIFY_WARN_LENGTH = _env_int("EPISTRING_VERIFY_WARN", 5000)
ORACLE_MAX_LENGTH = _env_int("EPISTRING_ORACLE_MAX_LENGTH", 25)
ORACLE_BUDGET = _env_int("EPISTRING_ORACLE_BUDGET", 10**7)
