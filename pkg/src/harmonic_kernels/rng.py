"""Deterministic 64-bit PRNG (splitmix64) for reproducible test vectors.

The generator is a documented, stable algorithm so that seeds recorded in
verification reports reproduce identical polynomials on any platform and
Python version.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1


class Rng:
    """splitmix64 stream; uniform integers via modulo reduction."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi] (modulo reduction; bias is
        negligible for the tiny ranges used here and determinism is what
        matters)."""
        return lo + self.next_u64() % (hi - lo + 1)


def stable_hash64(text: str) -> int:
    """FNV-1a over UTF-8; stable across runs (unlike builtin hash)."""
    h = 0xCBF29CE484222325
    for b in text.encode("utf-8"):
        h ^= b
        h = (h * 0x100000001B3) & _MASK
    return h


def derive_seed(master: int, tag: str) -> int:
    """Stable per-task seed from a master seed and a task tag."""
    return Rng((master & _MASK) ^ stable_hash64(tag)).next_u64()
