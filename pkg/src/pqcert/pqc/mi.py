"""Matsumoto-Imai signatures over GF(2^k).

The central map is ``u -> u^(2^t1 + 1)`` in GF(2^k); it is invertible by the
power ``t2`` with ``(2^t1 + 1) * t2 == 1 mod (2^k - 1)``. It is hidden between
two invertible affine maps F3 (inner) and F1 (outer) on GF(2)^k:

    sign:    q_y = F1(F3(q_x) ** e)
    verify:  F3^-1(F1^-1(q_y) ** t2) == q_x

The public part is kept as the functional triple (F1^-1, F3^-1, t2) rather
than expanded into multivariate quadratics. That reveals the private
structure; it is faithful to the construction, not a secure deployment.
"""

from dataclasses import dataclass
import hashlib
import math
import random

import numpy as np

from ..algebra.gf2 import (Gf2kElement, Gf2Matrix, gf2k_pow, random_invertible,
                           random_irreducible)
from ..algebra.modular import mod_inv
from ..encoding import from_u32, pack_bits, pack_fields, u32, unpack_bits, unpack_fields
from ..errors import InvalidParameters, KeyEncodingError


@dataclass(frozen=True, eq=False)
class AffineMap:
    """v -> matrix @ v + offset over GF(2)^k; bit i of v is the x^i coefficient."""

    matrix: Gf2Matrix
    offset: np.ndarray

    def __post_init__(self):
        off = np.asarray(self.offset, dtype=np.uint8).ravel() & 1
        off.setflags(write=False)
        object.__setattr__(self, "offset", off)

    @classmethod
    def identity(cls, k):
        return cls(Gf2Matrix.identity(k), np.zeros(k, dtype=np.uint8))

    @classmethod
    def random(cls, k, rng):
        return cls(random_invertible(k, rng),
                   np.array([rng.getrandbits(1) for _ in range(k)], dtype=np.uint8))

    def __eq__(self, other):
        return (isinstance(other, AffineMap) and self.matrix == other.matrix
                and np.array_equal(self.offset, other.offset))

    def __call__(self, u: Gf2kElement) -> Gf2kElement:
        v = (self.matrix.bits.astype(np.int64) @ u.bits() + self.offset) & 1
        return Gf2kElement.from_bits(v, u.modulus)

    def inverse(self) -> "AffineMap":
        inv = self.matrix.inverse()
        return AffineMap(inv, (inv.bits.astype(np.int64) @ self.offset) & 1)


def central_exponent(t1: int) -> int:
    return (1 << t1) + 1


def check_parameters(k: int, t1: int) -> int:
    """Validate (k, t1) and return t2.

    t1 = 1 is admitted (exponent 3) alongside the usual 1 < t1 < k.
    """
    if k < 2 or not 1 <= t1 < k:
        raise InvalidParameters(f"need 1 <= t1 < k, got k={k}, t1={t1}")
    e, order = central_exponent(t1), (1 << k) - 1
    if math.gcd(e, order) != 1:
        raise InvalidParameters(
            f"gcd(2^{t1}+1, 2^{k}-1) = {math.gcd(e, order)}; central map not invertible")
    return mod_inv(e, order)


@dataclass(frozen=True)
class MiPublicKey:
    k: int
    t2: int
    modulus: int
    F1_inv: AffineMap
    F3_inv: AffineMap


@dataclass(frozen=True)
class MiKeyPair:
    k: int
    t1: int
    t2: int
    modulus: int
    F1: AffineMap
    F3: AffineMap

    def __post_init__(self):
        if central_exponent(self.t1) * self.t2 % ((1 << self.k) - 1) != 1:
            raise InvalidParameters("t2 is not the inverse of 2^t1 + 1")

    @property
    def public(self) -> MiPublicKey:
        return MiPublicKey(self.k, self.t2, self.modulus, self.F1.inverse(), self.F3.inverse())

    def element(self, value: int) -> Gf2kElement:
        return Gf2kElement(value, self.modulus)


def mi_keygen(k: int, t1: int, rng: random.Random = None, identity: bool = False,
              modulus: int = None) -> MiKeyPair:
    """``identity=True`` uses F1 = F3 = identity (test mode)."""
    t2 = check_parameters(k, t1)
    rng = rng or random.SystemRandom()
    modulus = modulus or random_irreducible(k, rng)
    if identity:
        F1 = F3 = AffineMap.identity(k)
    else:
        F1, F3 = AffineMap.random(k, rng), AffineMap.random(k, rng)
    return MiKeyPair(k, t1, t2, modulus, F1, F3)


def mi_sign(q_x: Gf2kElement, key: MiKeyPair) -> Gf2kElement:
    return key.F1(gf2k_pow(key.F3(q_x), central_exponent(key.t1)))


def mi_verify(q_x: Gf2kElement, q_y: Gf2kElement, pub: MiPublicKey) -> bool:
    if q_x.modulus != pub.modulus or q_y.modulus != pub.modulus:
        return False
    return pub.F3_inv(gf2k_pow(pub.F1_inv(q_y), pub.t2)) == q_x


def digest_element(message: bytes, k: int, modulus: int) -> Gf2kElement:
    """Leading k bits of SHA-256(message), big-endian, as the field element."""
    d = int.from_bytes(hashlib.sha256(message).digest(), "big")
    return Gf2kElement(d >> (256 - k), modulus)


# Byte encodings -----------------------------------------------------------

def elem_bytes(k: int) -> int:
    return (k + 7) // 8


def encode_element(u: Gf2kElement) -> bytes:
    return u.value.to_bytes(elem_bytes(u.k), "big")


def decode_element(data: bytes, modulus: int) -> Gf2kElement:
    k = modulus.bit_length() - 1
    if len(data) != elem_bytes(k):
        raise KeyEncodingError("field element has wrong length")
    try:
        return Gf2kElement(int.from_bytes(data, "big"), modulus)
    except ValueError as exc:
        raise KeyEncodingError(str(exc)) from exc


def _decode_map(matrix: bytes, offset: bytes) -> AffineMap:
    return AffineMap(Gf2Matrix(unpack_bits(matrix)), unpack_bits(offset).ravel())


def _modulus_bytes(m: int) -> bytes:
    return m.to_bytes((m.bit_length() + 7) // 8, "big")


def encode_public(pub: MiPublicKey) -> bytes:
    """Fields: k, t2, modulus, F1^-1 matrix, F1^-1 offset, F3^-1 matrix, F3^-1 offset."""
    return pack_fields(u32(pub.k), u32(pub.t2), _modulus_bytes(pub.modulus),
                       pack_bits(pub.F1_inv.matrix.bits), pack_bits(pub.F1_inv.offset.reshape(1, -1)),
                       pack_bits(pub.F3_inv.matrix.bits), pack_bits(pub.F3_inv.offset.reshape(1, -1)))


def decode_public(data: bytes) -> MiPublicKey:
    k, t2, mod, m1, o1, m3, o3 = unpack_fields(data, 7)
    return MiPublicKey(from_u32(k), from_u32(t2), int.from_bytes(mod, "big"),
                       _decode_map(m1, o1), _decode_map(m3, o3))


def encode_private(key: MiKeyPair) -> bytes:
    return pack_fields(u32(key.k), u32(key.t1), _modulus_bytes(key.modulus),
                       pack_bits(key.F1.matrix.bits), pack_bits(key.F1.offset.reshape(1, -1)),
                       pack_bits(key.F3.matrix.bits), pack_bits(key.F3.offset.reshape(1, -1)))


def decode_private(data: bytes) -> MiKeyPair:
    k, t1, mod, m1, o1, m3, o3 = unpack_fields(data, 7)
    k, t1 = from_u32(k), from_u32(t1)
    return MiKeyPair(k, t1, check_parameters(k, t1), int.from_bytes(mod, "big"),
                     _decode_map(m1, o1), _decode_map(m3, o3))
