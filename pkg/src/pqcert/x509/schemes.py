"""Uniform sign/verify/key-codec adapters over the individual schemes.

Certificate code only talks to :class:`Scheme` objects: they know which digest
a scheme is paired with, how its keys and signatures are laid out as bytes,
and which AlgorithmIdentifier its public keys carry in an SPKI.
"""

from dataclasses import dataclass
import hashlib
import random
from typing import Optional

from .. import der
from ..algebra.ec import P256, P384, P521, EcCurve
from ..der import Oid
from ..errors import InvalidSignature, KeyEncodingError, PkiError, UnsupportedSigner
from ..pqc import mceliece, mi, ntru, wots
from ..qvc import ecdsa, rsa

OID_RSA_ENCRYPTION = Oid.parse("1.2.840.113549.1.1.1")
OID_EC_PUBLIC_KEY = Oid.parse("1.2.840.10045.2.1")
OID_WOTSC = Oid.parse("1.3.9999.9.1")
OID_MI = Oid.parse("1.3.9999.9.2")
OID_NTRU = Oid.parse("1.3.9999.9.3")
OID_MCELIECE = Oid.parse("1.3.9999.9.4")


@dataclass(frozen=True)
class AlgorithmIdentifier:
    oid: Oid
    params: Optional[object] = None

    def to_der(self):
        items = [der.ObjectIdentifier(self.oid)]
        if self.params is not None:
            items.append(self.params)
        return der.Sequence(items)

    @classmethod
    def from_der(cls, value):
        if not isinstance(value, der.Sequence) or not 1 <= len(value) <= 2 \
                or not isinstance(value[0], der.ObjectIdentifier):
            raise KeyEncodingError("malformed AlgorithmIdentifier")
        return cls(value[0].oid, value[1] if len(value) == 2 else None)


@dataclass(frozen=True)
class KeyPair:
    """Scheme-specific key material tagged with the scheme that owns it."""

    scheme: "Scheme"
    key: object

    def public_bytes(self) -> bytes:
        return self.scheme.encode_public(self.key)

    def private_bytes(self) -> bytes:
        return self.scheme.encode_private(self.key)

    @property
    def key_algorithm(self) -> AlgorithmIdentifier:
        return self.scheme.key_algorithm


class Scheme:
    name: str
    key_algorithm: AlgorithmIdentifier
    hash_name: Optional[str] = None
    can_sign = True

    def keygen(self, rng: random.Random) -> KeyPair:
        raise NotImplementedError

    def sign(self, key, message: bytes, rng: random.Random) -> bytes:
        raise UnsupportedSigner(f"{self.name} is an encryption scheme and cannot sign")

    def verify(self, public: bytes, message: bytes, signature: bytes) -> bool:
        return False

    def encode_public(self, key) -> bytes:
        raise NotImplementedError

    def encode_private(self, key) -> bytes:
        raise NotImplementedError

    def decode_private(self, data: bytes) -> KeyPair:
        raise NotImplementedError

    def digest(self, message: bytes) -> bytes:
        return hashlib.new(self.hash_name, message).digest()

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"


class RsaScheme(Scheme):
    key_algorithm = AlgorithmIdentifier(OID_RSA_ENCRYPTION, der.Null())

    def __init__(self, name, bits, hash_name):
        self.name, self.bits, self.hash_name = name, bits, hash_name

    def keygen(self, rng):
        return KeyPair(self, rsa.rsa_keygen(self.bits, rng=rng))

    def sign(self, key, message, rng=None):
        x = int.from_bytes(self.digest(message), "big")
        return rsa.encode_signature(rsa.rsa_sign(x, key), key.n_r)

    def verify(self, public, message, signature):
        try:
            n_r, P_r = rsa.decode_public(public)
        except KeyEncodingError:
            return False
        if len(signature) != (n_r.bit_length() + 7) // 8:
            return False
        x = int.from_bytes(self.digest(message), "big")
        return rsa.rsa_verify(x, rsa.decode_signature(signature), n_r, P_r)

    def encode_public(self, key):
        return rsa.encode_public(key.n_r, key.P_r)

    def encode_private(self, key):
        return rsa.encode_private(key)

    def decode_private(self, data):
        return KeyPair(self, rsa.decode_private(data))


class EcdsaScheme(Scheme):
    def __init__(self, name, curve: EcCurve, hash_name):
        self.name, self.curve, self.hash_name = name, curve, hash_name
        self.key_algorithm = AlgorithmIdentifier(
            OID_EC_PUBLIC_KEY, der.ObjectIdentifier(Oid.parse(curve.oid)))

    def _x(self, message):
        return int.from_bytes(self.digest(message), "big") % self.curve.n

    def keygen(self, rng):
        return KeyPair(self, ecdsa.ecdsa_keygen(self.curve, rng))

    def sign(self, key, message, rng=None):
        return ecdsa.encode_signature(ecdsa.ecdsa_sign(self._x(message), key, rng))

    def verify(self, public, message, signature):
        try:
            P_e = ecdsa.decode_public(public, self.curve)
            sig = ecdsa.decode_signature(signature)
        except (KeyEncodingError, InvalidSignature):
            return False
        return ecdsa.ecdsa_verify(self._x(message), sig, P_e, self.curve)

    def encode_public(self, key):
        return ecdsa.encode_public(key.P_e, self.curve)

    def encode_private(self, key):
        return ecdsa.encode_private(key)

    def decode_private(self, data):
        return KeyPair(self, ecdsa.decode_private(data, self.curve))


class WotscScheme(Scheme):
    """One-time: every additional signature under the same key leaks chain values."""

    name = "wots-c"
    hash_name = "sha256"
    key_algorithm = AlgorithmIdentifier(OID_WOTSC)

    def keygen(self, rng):
        return KeyPair(self, wots.wotsc_keygen(rng))

    def sign(self, key, message, rng=None):
        return wots.wotsc_sign(self.digest(message), key)

    def verify(self, public, message, signature):
        if len(public) != wots.N_BYTES or len(signature) != wots.SIG_BYTES:
            return False
        return wots.wotsc_verify(self.digest(message), signature, public)

    def encode_public(self, key):
        return key.P_w

    def encode_private(self, key):
        return key.seed

    def decode_private(self, data):
        return KeyPair(self, wots.wotsc_keygen(None, seed=bytes(data)))


class MiScheme(Scheme):
    hash_name = "sha256"
    key_algorithm = AlgorithmIdentifier(OID_MI)

    def __init__(self, name, k, t1):
        self.name, self.k, self.t1 = name, k, t1

    def keygen(self, rng):
        return KeyPair(self, mi.mi_keygen(self.k, self.t1, rng))

    def sign(self, key, message, rng=None):
        q_x = mi.digest_element(message, key.k, key.modulus)
        return mi.encode_element(mi.mi_sign(q_x, key))

    def verify(self, public, message, signature):
        try:
            pub = mi.decode_public(public)
            q_y = mi.decode_element(signature, pub.modulus)
        except (PkiError, ValueError):
            return False
        return mi.mi_verify(mi.digest_element(message, pub.k, pub.modulus), q_y, pub)

    def encode_public(self, key):
        return mi.encode_public(key.public)

    def encode_private(self, key):
        return mi.encode_private(key)

    def decode_private(self, data):
        return KeyPair(self, mi.decode_private(data))


class NtruScheme(Scheme):
    can_sign = False
    key_algorithm = AlgorithmIdentifier(OID_NTRU)

    def __init__(self, name, params: ntru.NtruParams):
        self.name, self.params = name, params

    def keygen(self, rng):
        return KeyPair(self, ntru.ntru_keygen(self.params, rng))

    def encode_public(self, key):
        return ntru.encode_public(key.P_n, key.params)

    def encode_private(self, key):
        return ntru.encode_private(key)

    def decode_private(self, data):
        return KeyPair(self, ntru.decode_private(data))


class McElieceScheme(Scheme):
    name = "mceliece-hamming74"
    can_sign = False
    key_algorithm = AlgorithmIdentifier(OID_MCELIECE)

    def keygen(self, rng):
        return KeyPair(self, mceliece.mceliece_keygen(rng))

    def encode_public(self, key):
        return mceliece.encode_public(key.P_m)

    def encode_private(self, key):
        return mceliece.encode_private(key)

    def decode_private(self, data):
        return KeyPair(self, mceliece.decode_private(data))


RSA_2048 = RsaScheme("rsa-2048", 2048, "sha256")
RSA_3072 = RsaScheme("rsa-3072", 3072, "sha384")
RSA_4096 = RsaScheme("rsa-4096", 4096, "sha512")
ECDSA_P256 = EcdsaScheme("ecdsa-p256", P256, "sha256")
ECDSA_P384 = EcdsaScheme("ecdsa-p384", P384, "sha384")
ECDSA_P521 = EcdsaScheme("ecdsa-p521", P521, "sha512")
WOTSC = WotscScheme()
MI_K13 = MiScheme("mi-k13", 13, 5)
NTRU_11 = NtruScheme("ntru-11-3-32", ntru.DEFAULT_PARAMS)
MCELIECE = McElieceScheme()
