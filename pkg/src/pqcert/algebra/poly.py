"""Truncated polynomial ring Z_q[x]/(x^N - 1)."""

from dataclasses import dataclass

import numpy as np

from ..errors import NotInvertible, ParameterMismatch
from .modular import mod_inv


@dataclass(frozen=True, eq=False)
class RingPoly:
    """Element of Z_q[x]/(x^N - 1); coefficient i multiplies x^i.

    Coefficients are stored reduced into ``[0, q)`` as an int64 vector.
    """

    coeffs: np.ndarray
    q: int

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=np.int64) % self.q
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def n(self) -> int:
        return len(self.coeffs)

    @classmethod
    def zero(cls, n, q):
        return cls(np.zeros(n, dtype=np.int64), q)

    @classmethod
    def one(cls, n, q):
        c = np.zeros(n, dtype=np.int64)
        c[0] = 1
        return cls(c, q)

    def __eq__(self, other):
        return (isinstance(other, RingPoly) and self.q == other.q
                and np.array_equal(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((self.q, self.coeffs.tobytes()))

    def __repr__(self):
        return f"RingPoly({self.coeffs.tolist()}, q={self.q})"

    def _check(self, other):
        if self.n != other.n or self.q != other.q:
            raise ParameterMismatch(
                f"ring mismatch: (N={self.n}, q={self.q}) vs (N={other.n}, q={other.q})")

    def __add__(self, other):
        self._check(other)
        return RingPoly(self.coeffs + other.coeffs, self.q)

    def __sub__(self, other):
        self._check(other)
        return RingPoly(self.coeffs - other.coeffs, self.q)

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return RingPoly(self.coeffs * int(other), self.q)
        return poly_mul(self, other)

    __rmul__ = __mul__

    def is_zero(self):
        return not self.coeffs.any()

    def with_modulus(self, q):
        """Carry the centered integer representative into Z_q."""
        return RingPoly(center_lift(self), q)


def cyclic_convolve(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Integer cyclic convolution of two length-N vectors (no reduction)."""
    n = len(a)
    full = np.convolve(a, b)
    out = full[:n].copy()
    out[: len(full) - n] += full[n:]
    return out


def poly_mul(a: RingPoly, b: RingPoly) -> RingPoly:
    a._check(b)
    return RingPoly(cyclic_convolve(a.coeffs, b.coeffs), a.q)


def center_lift(f: RingPoly) -> np.ndarray:
    """Representatives in (-q/2, q/2]."""
    c = f.coeffs.copy()
    c[c > f.q // 2] -= f.q
    return c


# Plain-list helpers over Z_p[x], lowest degree first, used by the inverse.

def _trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _polydivmod(num, den, p):
    num = list(num)
    inv_lead = mod_inv(den[-1], p)
    quot = [0] * max(len(num) - len(den) + 1, 1)
    while len(_trim(num)) >= len(den):
        shift = len(num) - len(den)
        factor = num[-1] * inv_lead % p
        quot[shift] = factor
        for i, d in enumerate(den):
            num[shift + i] = (num[shift + i] - factor * d) % p
    return _trim(quot), num


def _polymul_list(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _polysub_list(a, b, p):
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] = x
    for i, y in enumerate(b):
        out[i] = (out[i] - y) % p
    return _trim(out)


def _prime_power(m):
    """Return ``(p, e)`` with ``m == p**e`` and p prime, else None."""
    for p in range(2, int(m ** 0.5) + 2):
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            return (p, e) if m == 1 else None
    return (m, 1) if m > 1 else None


def _inverse_mod_prime(f: np.ndarray, n: int, p: int) -> np.ndarray:
    """Extended Euclid for f^-1 in Z_p[x]/(x^n - 1)."""
    modpoly = [p - 1] + [0] * (n - 1) + [1]
    r0, r1 = modpoly, _trim([int(c) % p for c in f])
    t0, t1 = [], [1]
    if not r1:
        raise NotInvertible("zero polynomial")
    while r1:
        q, r = _polydivmod(r0, r1, p)
        r0, r1 = r1, r
        t0, t1 = t1, _polysub_list(t0, _polymul_list(q, t1, p), p)
    if len(r0) != 1:
        raise NotInvertible(f"polynomial shares a factor with x^{n}-1 mod {p}")
    scale = mod_inv(r0[0], p)
    out = np.zeros(n, dtype=np.int64)
    for i, c in enumerate(t0):
        out[i % n] = (out[i % n] + c * scale) % p
    return out


def poly_inverse(f: RingPoly, modulus: int) -> RingPoly:
    """Inverse of ``f`` in Z_modulus[x]/(x^N - 1).

    ``modulus`` must be a prime or a prime power; prime powers are reached by
    Newton/Hensel lifting ``g <- g * (2 - f*g)`` from the inverse mod p.
    """
    pe = _prime_power(modulus)
    if pe is None:
        raise ValueError(f"modulus {modulus} is not a prime power")
    p, e = pe
    n = f.n
    lifted = center_lift(f)
    g = _inverse_mod_prime(lifted, n, p)
    ff = lifted % modulus
    reached = p
    while reached < modulus:
        reached = min(reached * reached, modulus)
        fg = cyclic_convolve(ff, g) % reached
        two_minus = (-fg) % reached
        two_minus[0] = (two_minus[0] + 2) % reached
        g = cyclic_convolve(g, two_minus) % reached
    return RingPoly(g, modulus)
