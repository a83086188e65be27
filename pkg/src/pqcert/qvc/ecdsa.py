"""ECDSA in the form where the whole nonce point R_e is kept.

Signing produces ``(R_e, y_e)`` with ``y_e = (x + p_e*x_r) / r_e mod n_e``;
verification recomputes ``S_e = (x/y_e) G + (x_r/y_e) P_e`` and accepts only
when ``S_e == R_e`` as points. Keeping R_e (not just its x-coordinate) is what
lets verification compare points; it makes signatures one coordinate longer
than FIPS 186 ones.
"""

from dataclasses import dataclass
import random

from .. import der
from ..algebra.ec import (CURVES, EcCurve, EcPoint, decode_point, ec_add,
                          ec_scalar_mul, encode_point)
from ..algebra.modular import mod_inv
from ..errors import InvalidParameters, InvalidPoint, InvalidSignature, KeyEncodingError


@dataclass(frozen=True)
class EcdsaKeyPair:
    curve: EcCurve
    p_e: int
    P_e: EcPoint

    def __post_init__(self):
        if not 1 <= self.p_e < self.curve.n:
            raise InvalidParameters("private scalar out of range")
        if not self.curve.contains(self.P_e) or self.P_e.is_infinity:
            raise InvalidPoint("public point not on curve")


@dataclass(frozen=True)
class EcdsaSignature:
    R_e: EcPoint
    y_e: int


def ecdsa_keygen(curve: EcCurve, rng: random.Random = None, p_e: int = None) -> EcdsaKeyPair:
    """``p_e`` may be fixed for tests; otherwise uniform in [1, n_e - 1]."""
    if p_e is None:
        rng = rng or random.SystemRandom()
        p_e = rng.randrange(1, curve.n)
    return EcdsaKeyPair(curve, p_e, ec_scalar_mul(p_e, curve.G, curve))


def ecdsa_sign(x: int, key: EcdsaKeyPair, rng: random.Random = None,
               r_e: int = None) -> EcdsaSignature:
    """Sign digest integer ``x`` (reduced mod n_e).

    A fixed ``r_e`` is a test hook; it must not give x_r == 0 or y_e == 0.
    """
    curve = key.curve
    n = curve.n
    x %= n
    rng = rng or random.SystemRandom()
    fixed = r_e is not None
    while True:
        r = r_e if fixed else rng.randrange(1, n)
        R = ec_scalar_mul(r, curve.G, curve)
        x_r = R.x % n if not R.is_infinity else 0
        y = (x + key.p_e * x_r) * mod_inv(r, n) % n if x_r else 0
        if x_r and y:
            return EcdsaSignature(R, y)
        if fixed:
            raise InvalidParameters("fixed nonce yields a degenerate signature")


def ecdsa_verify(x: int, sig: EcdsaSignature, P_e: EcPoint, curve: EcCurve) -> bool:
    n = curve.n
    R = sig.R_e
    if R.is_infinity or not curve.contains(R) or not 1 <= sig.y_e < n:
        return False
    x %= n
    try:
        w = mod_inv(sig.y_e, n)
        S = ec_scalar_mul(x * w % n, curve.G, curve)
        T = ec_scalar_mul(R.x % n * w % n, P_e, curve)
    except (ArithmeticError, InvalidPoint):
        return False
    return ec_add(S, T, curve) == R


# Byte encodings -----------------------------------------------------------

def encode_signature(sig: EcdsaSignature) -> bytes:
    """DER SEQUENCE { INTEGER x_R, INTEGER y_R, INTEGER y_e }."""
    return der.encode_value(der.Sequence(
        [der.Integer(sig.R_e.x), der.Integer(sig.R_e.y), der.Integer(sig.y_e)]))


def decode_signature(data: bytes) -> EcdsaSignature:
    try:
        xr, yr, ye = (item.value for item in der.decode(data))
    except (der.DerError, ValueError, TypeError, AttributeError) as exc:
        raise InvalidSignature("bad ECDSA signature encoding") from exc
    return EcdsaSignature(EcPoint(xr, yr), ye)


def encode_public(P_e: EcPoint, curve: EcCurve) -> bytes:
    return encode_point(P_e, curve)


def decode_public(data: bytes, curve: EcCurve) -> EcPoint:
    try:
        return decode_point(data, curve)
    except InvalidPoint as exc:
        raise KeyEncodingError(str(exc)) from exc


def encode_private(key: EcdsaKeyPair) -> bytes:
    return key.p_e.to_bytes(key.curve.byte_len + 1, "big")


def decode_private(data: bytes, curve: EcCurve) -> EcdsaKeyPair:
    try:
        return ecdsa_keygen(curve, p_e=int.from_bytes(data, "big"))
    except (InvalidParameters, InvalidPoint) as exc:
        raise KeyEncodingError("bad ECDSA private key") from exc


def curve_by_name(name: str) -> EcCurve:
    return CURVES[name]
