"""Deterministic 64-bit seed derivation.

All RNG streams in the engine are derived from a master seed with
``mix64``, a splitmix64 chain.  The function is part of the reproducibility
contract: mix64(parts...) folds each part into the state and finalizes it
with the splitmix64 output permutation, so distinct part tuples yield
independent-looking 64-bit seeds.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def splitmix64(x: int) -> int:
    """One splitmix64 output step on a 64-bit state."""
    x = (x + _GAMMA) & _MASK
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK
    return (x ^ (x >> 31)) & _MASK


def mix64(*parts: int) -> int:
    """Mix any number of integer parts into one 64-bit seed."""
    state = 0
    for p in parts:
        state = splitmix64((state ^ (p & _MASK)) & _MASK)
    return state
