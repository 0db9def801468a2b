"""Splittable deterministic randomness for order-independent column draws.

splitmix64 arithmetic only: derived substreams depend on (base, salt indices),
never on evaluation order, so column draws and sweep points can run in any
order or in parallel without changing results.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def _finalize(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def substream_seed(base: int, *salts: int) -> int:
    """Seed for the substream of ``base`` selected by one or more salt indices."""
    z = base & _MASK64
    for salt in salts:
        z = _finalize((z + (salt + 1) * _GAMMA) & _MASK64)
    return z


def uniform_index(seed: int, count: int) -> int:
    """Exactly uniform draw from range(count), by masked rejection on a splitmix64 stream."""
    if count < 1:
        raise ValueError(f"count must be positive, got {count}")
    if count == 1:
        return 0
    mask = (1 << (count - 1).bit_length()) - 1
    state = seed & _MASK64
    while True:
        state = (state + _GAMMA) & _MASK64
        candidate = _finalize(state) & mask
        if candidate < count:
            return candidate
