"""Brute-force size guards.

Every exhaustive routine checks its workload against a default limit.  The
``SELFORTH_LIMIT`` environment variable, when set to an integer, replaces
all defaults at once.
"""

from __future__ import annotations

import os

from .errors import TooLarge

MAX_CODEWORDS = 2**22
MAX_PAIRS = 2**24
MAX_BASES = 2**20


def limit(default: int) -> int:
    env = os.environ.get("SELFORTH_LIMIT")
    if env:
        try:
            return int(env)
        except ValueError:
            pass
    return default


def check(what: str, size: int, default: int) -> None:
    cap = limit(default)
    if size > cap:
        raise TooLarge(f"{what}: {size} exceeds guard {cap} (set SELFORTH_LIMIT to override)")
