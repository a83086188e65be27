"""Modular integer arithmetic and prime generation."""

import math
import random

from ..errors import InvalidModulus, NotInvertible

MILLER_RABIN_ROUNDS = 40

# Witness set that makes Miller-Rabin exact below 2**64.
_DETERMINISTIC_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _small_primes(limit):
    sieve = bytearray([1]) * limit
    sieve[0:2] = b"\0\0"
    for i in range(2, int(limit ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(range(i * i, limit, i)))
    return [i for i in range(limit) if sieve[i]]


SMALL_PRIMES = _small_primes(2000)
_PRIMORIAL = math.prod(SMALL_PRIMES)


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """``base ** exp % modulus`` for non-negative ``exp``."""
    if modulus < 1:
        raise InvalidModulus(f"modulus must be >= 1, got {modulus}")
    if exp < 0:
        raise ValueError("negative exponent; use mod_inv")
    # CPython's three-argument pow is left-to-right square-and-multiply
    # (sliding window for large exponents).
    return pow(base, exp, modulus)


def egcd(a: int, b: int):
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b)``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return a, s0, t0


def mod_inv(a: int, modulus: int) -> int:
    if modulus < 2:
        raise InvalidModulus(f"modulus must be >= 2, got {modulus}")
    g, s, _ = egcd(a % modulus, modulus)
    if g != 1:
        raise NotInvertible(f"{a} has no inverse mod {modulus} (gcd {g})")
    return s % modulus


def _miller_rabin_round(n, d, s, a):
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_probable_prime(n: int, rng: random.Random | None = None,
                      rounds: int = MILLER_RABIN_ROUNDS) -> bool:
    """Miller-Rabin; exact for ``n < 2**64``, error < 4**-rounds above."""
    if n < 2:
        return False
    if n <= SMALL_PRIMES[-1]:
        return n in SMALL_PRIMES
    if math.gcd(n, _PRIMORIAL) != 1:
        return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < 1 << 64:
        return all(_miller_rabin_round(n, d, s, a) for a in _DETERMINISTIC_WITNESSES)
    rng = rng or random.SystemRandom()
    for _ in range(rounds):
        if not _miller_rabin_round(n, d, s, rng.randrange(2, n - 1)):
            return False
    return True


def gen_prime(bits: int, rng: random.Random) -> int:
    """Random probable prime with exactly ``bits`` bits."""
    if bits < 2:
        raise ValueError("bits must be >= 2")
    if bits == 2:
        return rng.choice((2, 3))
    while True:
        candidate = rng.getrandbits(bits) | (1 << (bits - 1)) | 1
        if is_probable_prime(candidate, rng):
            return candidate
