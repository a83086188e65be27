"""Textbook RSA signatures: the raw digest integer is exponentiated, no padding."""

from dataclasses import dataclass
import math
import random

from .. import der
from ..algebra.modular import is_probable_prime, mod_inv, mod_pow
from ..errors import DigestOutOfRange, InvalidParameters, KeyEncodingError

DEFAULT_PUBLIC_EXPONENT = 65537


@dataclass(frozen=True)
class RsaKeyPair:
    a1: int
    a2: int
    n_r: int
    phi_r: int
    p_r: int  # private exponent
    P_r: int  # public exponent

    def __post_init__(self):
        if self.a1 == self.a2:
            raise InvalidParameters("RSA primes must be distinct")
        if self.n_r != self.a1 * self.a2:
            raise InvalidParameters("n_r != a1 * a2")
        if self.phi_r != (self.a1 - 1) * (self.a2 - 1):
            raise InvalidParameters("phi_r != (a1 - 1)(a2 - 1)")
        if self.p_r * self.P_r % self.phi_r != 1:
            raise InvalidParameters("p_r * P_r != 1 mod phi_r")

    @classmethod
    def from_primes(cls, a1: int, a2: int, P_r: int = DEFAULT_PUBLIC_EXPONENT):
        if a1 == a2:
            raise InvalidParameters("RSA primes must be distinct")
        phi = (a1 - 1) * (a2 - 1)
        return cls(a1, a2, a1 * a2, phi, mod_inv(P_r, phi), P_r)

    @property
    def bits(self):
        return self.n_r.bit_length()

    @property
    def byte_len(self):
        return (self.n_r.bit_length() + 7) // 8

    @property
    def public(self):
        return self.n_r, self.P_r


def _rsa_prime(bits, rng):
    # Top two bits set so the product of two such primes has exactly 2*bits bits.
    while True:
        candidate = rng.getrandbits(bits) | (3 << (bits - 2)) | 1
        if is_probable_prime(candidate, rng):
            return candidate


def rsa_keygen(bits: int, public_exponent: int = DEFAULT_PUBLIC_EXPONENT,
               rng: random.Random = None) -> RsaKeyPair:
    if bits < 16 or bits % 2:
        raise InvalidParameters("modulus size must be an even number of bits >= 16")
    if public_exponent < 3 or public_exponent % 2 == 0:
        raise InvalidParameters("public exponent must be odd and >= 3")
    rng = rng or random.SystemRandom()
    while True:
        a1 = _rsa_prime(bits // 2, rng)
        a2 = _rsa_prime(bits // 2, rng)
        if a1 == a2 or math.gcd(public_exponent, (a1 - 1) * (a2 - 1)) != 1:
            continue
        return RsaKeyPair.from_primes(a1, a2, public_exponent)


def rsa_sign(digest: int, key: RsaKeyPair) -> int:
    if not 0 <= digest < key.n_r:
        raise DigestOutOfRange("digest must lie in [0, n_r)")
    return mod_pow(digest, key.p_r, key.n_r)


def rsa_verify(digest: int, sig: int, n_r: int, P_r: int) -> bool:
    if not (0 <= digest < n_r and 0 <= sig < n_r):
        return False
    return mod_pow(sig, P_r, n_r) == digest


# Byte encodings -----------------------------------------------------------

def encode_signature(sig: int, n_r: int) -> bytes:
    return sig.to_bytes((n_r.bit_length() + 7) // 8, "big")


def decode_signature(data: bytes) -> int:
    return int.from_bytes(data, "big")


def encode_public(n_r: int, P_r: int) -> bytes:
    """PKCS#1 RSAPublicKey: SEQUENCE { modulus, publicExponent }."""
    return der.encode_value(der.Sequence([der.Integer(n_r), der.Integer(P_r)]))


def decode_public(data: bytes):
    try:
        seq = der.decode(data)
        n_r, P_r = (item.value for item in seq)
    except (der.DerError, ValueError, TypeError, AttributeError) as exc:
        raise KeyEncodingError("bad RSA public key") from exc
    return n_r, P_r


def encode_private(key: RsaKeyPair) -> bytes:
    return der.encode_value(der.Sequence([der.Integer(v) for v in (key.a1, key.a2, key.P_r)]))


def decode_private(data: bytes) -> RsaKeyPair:
    try:
        a1, a2, P_r = (item.value for item in der.decode(data))
        return RsaKeyPair.from_primes(a1, a2, P_r)
    except (der.DerError, ValueError, TypeError, AttributeError, ArithmeticError) as exc:
        raise KeyEncodingError("bad RSA private key") from exc
