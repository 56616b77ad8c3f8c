"""Size limits and guard handling shared across the package."""

from __future__ import annotations

import os

DEFAULT_MAX_Q = 1 << 20
MAX_Q_ENV_VAR = "FFSUBSUM_MAX_Q"


class GuardExceeded(RuntimeError):
    """An enumeration guard was exceeded; the exact computation was refused."""


def max_field_size() -> int:
    """Field size limit: FFSUBSUM_MAX_Q if set, else the built-in default."""
    raw = os.environ.get(MAX_Q_ENV_VAR)
    if raw is None:
        return DEFAULT_MAX_Q
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{MAX_Q_ENV_VAR} must be an integer, got {raw!r}") from exc
    if value < 2:
        raise ValueError(f"{MAX_Q_ENV_VAR} must be at least 2, got {value}")
    return value


def check_guard(work: int, limit: int, what: str) -> None:
    """Raise GuardExceeded when `work` exceeds `limit`."""
    if work > limit:
        raise GuardExceeded(f"{what} needs {work} steps, guard is {limit}")
