"""Size guards for the exponential routines, overridable from the
environment (``COVERCOUNT_<NAME>``)."""

import os

DEFAULTS = {
    "MAX_BRUTE_EDGES": 20,
    "MAX_CORE_VERTICES": 16,
    "MAX_ISO_VERTICES": 10,
    "MAX_ATOM_VERTICES": 10,
}


def guard(name: str) -> int:
    raw = os.environ.get("COVERCOUNT_" + name)
    if raw is None:
        return DEFAULTS[name]
    value = int(raw)
    if value <= 0:
        raise ValueError(f"COVERCOUNT_{name} must be positive, got {raw!r}")
    return value
