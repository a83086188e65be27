"""Random sources.

Everything that needs randomness takes a :class:`random.Random`-compatible
object. Tests and ``--seed`` runs use :func:`seeded`; everything else uses the
OS entropy pool through :class:`random.SystemRandom`.
"""

import random

RandomSource = random.Random


def seeded(seed) -> random.Random:
    """Deterministic source. ``seed`` may be an int, str or bytes."""
    if isinstance(seed, bytearray):
        seed = bytes(seed)
    return random.Random(seed)


def system() -> random.Random:
    return random.SystemRandom()


def make_rng(seed=None) -> random.Random:
    return system() if seed is None else seeded(seed)
