"""Deterministic randomness for simulation runs.

A run owns exactly one :class:`RngStream`; every stochastic operation of
that run draws from it in execution order, so a seed fully determines the
run.  The stream builds all of its primitives on top of
``random.Random.random()`` alone: the stdlib's higher-level helpers
(``sample``, ``choice``, ``shuffle``) are not guaranteed to keep their
draw patterns across Python versions, while ``random()`` itself is.
"""

from __future__ import annotations

import random

_MASK64 = (1 << 64) - 1


def splitmix64(value: int) -> int:
    """One step of the splitmix64 finalizer (a 64-bit avalanche mix)."""
    z = (value + 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def derive_run_seed(base_seed: int, repeat_index: int) -> int:
    """Mix a base seed and a repeat index into an independent run seed.

    Computes ``splitmix64(base_seed XOR repeat_index)``.  The mix is
    bijective on 64-bit values, so for a fixed base the mapping is
    injective over repeat indices.  The formula is part of the output
    contract and must not change between versions.
    """
    if repeat_index < 0:
        raise ValueError("repeat_index must be non-negative")
    return splitmix64((base_seed & _MASK64) ^ (repeat_index & _MASK64))


class RngStream:
    """Seeded pseudo-random stream with a documented draw vocabulary.

    Primitives, each consuming exactly the stated number of underlying
    ``random()`` draws:

    * :meth:`random` - one draw, uniform in [0, 1).
    * :meth:`uniform` - one draw, ``lo + (hi - lo) * random()``.
    * :meth:`chance` - one draw, true iff ``random() < p``.
    * :meth:`sign` - one draw, +1 iff ``random() < 0.5`` else -1.
    * :meth:`index` / :meth:`choice` - one draw, ``floor(random() * n)``.
    * :meth:`sample` - ``k`` draws, partial Fisher-Yates without
      replacement, preserving pick order.
    """

    def __init__(self, seed: int):
        self._gen = random.Random(seed & _MASK64)

    def random(self) -> float:
        return self._gen.random()

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self._gen.random()

    def chance(self, probability: float) -> bool:
        return self._gen.random() < probability

    def sign(self) -> int:
        return 1 if self._gen.random() < 0.5 else -1

    def index(self, n: int) -> int:
        if n <= 0:
            raise ValueError("index() needs a positive range")
        return min(int(self._gen.random() * n), n - 1)

    def choice(self, items):
        return items[self.index(len(items))]

    def sample(self, items, k: int) -> list:
        if k < 0 or k > len(items):
            raise ValueError("sample size out of range")
        pool = list(items)
        picked = []
        for i in range(k):
            j = i + self.index(len(pool) - i)
            pool[i], pool[j] = pool[j], pool[i]
            picked.append(pool[i])
        return picked
