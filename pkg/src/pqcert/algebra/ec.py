"""Short-Weierstrass curves y^2 = x^3 + ax + b over prime fields."""

from dataclasses import dataclass
from typing import Optional

from ..errors import InvalidPoint


@dataclass(frozen=True)
class EcPoint:
    """Affine point; ``x is None`` encodes the point at infinity."""

    x: Optional[int]
    y: Optional[int]

    @property
    def is_infinity(self):
        return self.x is None

    def __repr__(self):
        return "EcPoint(infinity)" if self.is_infinity else f"EcPoint({self.x:#x}, {self.y:#x})"


INFINITY = EcPoint(None, None)


@dataclass(frozen=True)
class EcCurve:
    name: str
    p: int
    a: int
    b: int
    gx: int
    gy: int
    n: int
    oid: Optional[str] = None

    @property
    def G(self) -> EcPoint:
        return EcPoint(self.gx, self.gy)

    @property
    def byte_len(self) -> int:
        return (self.p.bit_length() + 7) // 8

    def contains(self, P: EcPoint) -> bool:
        if P.is_infinity:
            return True
        if not (0 <= P.x < self.p and 0 <= P.y < self.p):
            return False
        return (P.y * P.y - (P.x * P.x * P.x + self.a * P.x + self.b)) % self.p == 0

    def negate(self, P: EcPoint) -> EcPoint:
        if P.is_infinity:
            return P
        return EcPoint(P.x, (-P.y) % self.p)


def _add(P, Q, curve):
    if P.x is None:
        return Q
    if Q.x is None:
        return P
    p = curve.p
    if P.x == Q.x:
        if (P.y + Q.y) % p == 0:
            return INFINITY
        lam = (3 * P.x * P.x + curve.a) * pow(2 * P.y, -1, p) % p
    else:
        lam = (Q.y - P.y) * pow(Q.x - P.x, -1, p) % p
    x3 = (lam * lam - P.x - Q.x) % p
    return EcPoint(x3, (lam * (P.x - x3) - P.y) % p)


def _check(P, curve):
    if not curve.contains(P):
        raise InvalidPoint(f"{P!r} is not on {curve.name}")


def ec_add(P: EcPoint, Q: EcPoint, curve: EcCurve) -> EcPoint:
    _check(P, curve)
    _check(Q, curve)
    return _add(P, Q, curve)


def ec_scalar_mul(s: int, P: EcPoint, curve: EcCurve) -> EcPoint:
    """Left-to-right double-and-add."""
    _check(P, curve)
    if s < 0:
        return ec_scalar_mul(-s, curve.negate(P), curve)
    result = INFINITY
    for bit in bin(s)[2:] if s else "":
        result = _add(result, result, curve)
        if bit == "1":
            result = _add(result, P, curve)
    return result


def encode_point(P: EcPoint, curve: EcCurve) -> bytes:
    """SEC1 uncompressed form ``04 || X || Y``; infinity is ``00``."""
    if P.is_infinity:
        return b"\x00"
    L = curve.byte_len
    return b"\x04" + P.x.to_bytes(L, "big") + P.y.to_bytes(L, "big")


def decode_point(data: bytes, curve: EcCurve) -> EcPoint:
    if data == b"\x00":
        return INFINITY
    L = curve.byte_len
    if len(data) != 1 + 2 * L or data[0] != 4:
        raise InvalidPoint("expected uncompressed SEC1 point")
    P = EcPoint(int.from_bytes(data[1:1 + L], "big"), int.from_bytes(data[1 + L:], "big"))
    _check(P, curve)
    return P


P256 = EcCurve(
    "P-256",
    p=0xFFFFFFFF00000001000000000000000000000000FFFFFFFFFFFFFFFFFFFFFFFF,
    a=-3 % 0xFFFFFFFF00000001000000000000000000000000FFFFFFFFFFFFFFFFFFFFFFFF,
    b=0x5AC635D8AA3A93E7B3EBBD55769886BC651D06B0CC53B0F63BCE3C3E27D2604B,
    gx=0x6B17D1F2E12C4247F8BCE6E563A440F277037D812DEB33A0F4A13945D898C296,
    gy=0x4FE342E2FE1A7F9B8EE7EB4A7C0F9E162BCE33576B315ECECBB6406837BF51F5,
    n=0xFFFFFFFF00000000FFFFFFFFFFFFFFFFBCE6FAADA7179E84F3B9CAC2FC632551,
    oid="1.2.840.10045.3.1.7",
)

_P384_P = int(
    "FFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFE"
    "FFFFFFFF0000000000000000FFFFFFFF", 16)
P384 = EcCurve(
    "P-384",
    p=_P384_P,
    a=_P384_P - 3,
    b=int("B3312FA7E23EE7E4988E056BE3F82D19181D9C6EFE8141120314088F5013875A"
          "C656398D8A2ED19D2A85C8EDD3EC2AEF", 16),
    gx=int("AA87CA22BE8B05378EB1C71EF320AD746E1D3B628BA79B9859F741E082542A38"
           "5502F25DBF55296C3A545E3872760AB7", 16),
    gy=int("3617DE4A96262C6F5D9E98BF9292DC29F8F41DBD289A147CE9DA3113B5F0B8C0"
           "0A60B1CE1D7E819D7A431D7C90EA0E5F", 16),
    n=int("FFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFC7634D81F4372DDF"
          "581A0DB248B0A77AECEC196ACCC52973", 16),
    oid="1.3.132.0.34",
)

_P521_P = (1 << 521) - 1
P521 = EcCurve(
    "P-521",
    p=_P521_P,
    a=_P521_P - 3,
    b=int("0051953EB9618E1C9A1F929A21A0B68540EEA2DA725B99B315F3B8B489918EF1"
          "09E156193951EC7E937B1652C0BD3BB1BF073573DF883D2C34F1EF451FD46B50"
          "3F00", 16),
    gx=int("00C6858E06B70404E9CD9E3ECB662395B4429C648139053FB521F828AF606B4D"
           "3DBAA14B5E77EFE75928FE1DC127A2FFA8DE3348B3C1856A429BF97E7E31C2E5"
           "BD66", 16),
    gy=int("011839296A789A3BC0045C8A5FB42C7D1BD998F54449579B446817AFBD17273E"
           "662C97EE72995EF42640C550B9013FAD0761353C7086A272C24088BE94769FD1"
           "6650", 16),
    n=int("01FFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFF"
          "FFFA51868783BF2F966B7FCC0148F709A5D03BB5C9B8899C47AEBB6FB71E9138"
          "6409", 16),
    oid="1.3.132.0.35",
)

# Small curve for exhaustive checks: G = (5, 1) generates a group of order 19.
TOY17 = EcCurve("toy-GF17", p=17, a=2, b=2, gx=5, gy=1, n=19)

CURVES = {c.name: c for c in (P256, P384, P521, TOY17)}
