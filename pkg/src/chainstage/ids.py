"""Sortable opaque identifiers (ULID layout: 48-bit ms timestamp + 80 random bits,
Crockford base32). Lexicographic order matches creation order."""

from __future__ import annotations

import secrets
import time

_ALPHABET = "0123456789ABCDEFGHJKMNPQRSTVWXYZ"


def _encode(value: int, length: int) -> str:
    chars = []
    for _ in range(length):
        chars.append(_ALPHABET[value & 0x1F])
        value >>= 5
    return "".join(reversed(chars))


def new_id(timestamp_ms: int | None = None) -> str:
    """Mint a 26-character sortable identifier."""
    if timestamp_ms is None:
        timestamp_ms = time.time_ns() // 1_000_000
    randomness = secrets.randbits(80)
    return _encode(timestamp_ms, 10) + _encode(randomness, 16)


class SeededIdFactory:
    """Deterministic id sequence for reproducible runs (rehearsals, tests)."""

    def __init__(self, prefix: str = "00000000"):
        self._prefix = prefix
        self._counter = 0

    def __call__(self) -> str:
        self._counter += 1
        return f"{self._prefix}{self._counter:018d}"
