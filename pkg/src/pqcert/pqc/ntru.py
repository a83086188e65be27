"""NTRU-style encryption in Z[x]/(x^N - 1) with moduli b1 (small) and b2 (large).

keygen:   F_b1 = f1^-1 mod b1,  F_b2 = f1^-1 mod b2,  P_n = F_b2 * f2 mod b2
encrypt:  f_y = b1 * f_r * P_n + f_x  mod b2
decrypt:  a = centered(f1 * f_y mod b2);  f_x = centered(F_b1 * a mod b1)

Decryption is exact while every coefficient of ``b1*f_r*f2 + f1*f_x`` stays in
(-b2/2, b2/2]. The default weights at (11, 3, 32) bound it by 3*3 + 5 = 14.
"""

from dataclasses import dataclass
import math
import random

import numpy as np

from ..algebra.poly import RingPoly, center_lift, poly_inverse, poly_mul
from ..encoding import from_u32, pack_fields, u32, unpack_fields
from ..errors import InvalidMessage, InvalidParameters, KeyEncodingError, NotInvertible


@dataclass(frozen=True)
class NtruParams:
    N: int = 11
    b1: int = 3
    b2: int = 32
    d_f: int = 2   # f1 has d_f + 1 ones and d_f minus-ones
    d_g: int = 3   # f2 has d_g ones and d_g minus-ones
    d_r: int = 3   # f_r has d_r non-zero coefficients

    def __post_init__(self):
        if self.N < 3:
            raise InvalidParameters("N must be >= 3")
        if math.gcd(self.b1, self.b2) != 1:
            raise InvalidParameters(f"gcd(b1, b2) = {math.gcd(self.b1, self.b2)} != 1")
        if 2 * self.d_f + 1 > self.N or 2 * self.d_g > self.N or self.d_r > self.N:
            raise InvalidParameters("weights exceed ring degree")


DEFAULT_PARAMS = NtruParams()


def ternary(N, ones, minus_ones, rng):
    idx = list(range(N))
    rng.shuffle(idx)
    c = np.zeros(N, dtype=np.int64)
    c[idx[:ones]] = 1
    c[idx[ones:ones + minus_ones]] = -1
    return c


def random_blinding(params: NtruParams, rng, weight: int = None):
    """Weight-``d_r`` ternary vector with random signs."""
    weight = params.d_r if weight is None else weight
    idx = list(range(params.N))
    rng.shuffle(idx)
    c = np.zeros(params.N, dtype=np.int64)
    for i in idx[:weight]:
        c[i] = rng.choice((-1, 1))
    return c


@dataclass(frozen=True)
class NtruKeyPair:
    params: NtruParams
    f1: RingPoly
    F_b1: RingPoly
    F_b2: RingPoly
    P_n: RingPoly


def _key_from(params, f1_vec, f2_vec):
    f1 = RingPoly(f1_vec, params.b2)
    F_b1 = poly_inverse(f1, params.b1)
    F_b2 = poly_inverse(f1, params.b2)
    P_n = poly_mul(F_b2, RingPoly(f2_vec, params.b2))
    return NtruKeyPair(params, f1, F_b1, F_b2, P_n)


def ntru_keygen(params: NtruParams = DEFAULT_PARAMS, rng: random.Random = None,
                f1=None, f2=None) -> NtruKeyPair:
    """Sample ternary f1, f2; retry until f1 is invertible mod b1 and b2.

    Fixed ``f1``/``f2`` vectors are test hooks.
    """
    rng = rng or random.SystemRandom()
    if f1 is not None:
        f2 = ternary(params.N, params.d_g, params.d_g, rng) if f2 is None else f2
        return _key_from(params, np.asarray(f1, dtype=np.int64), np.asarray(f2, dtype=np.int64))
    while True:
        f1v = ternary(params.N, params.d_f + 1, params.d_f, rng)
        f2v = ternary(params.N, params.d_g, params.d_g, rng) if f2 is None else f2
        try:
            return _key_from(params, f1v, np.asarray(f2v, dtype=np.int64))
        except NotInvertible:
            continue


def _check_ternary(v, N):
    v = np.asarray(v if not isinstance(v, RingPoly) else center_lift(v), dtype=np.int64)
    if v.shape != (N,):
        raise InvalidMessage(f"message must have {N} coefficients")
    if not np.isin(v, (-1, 0, 1)).all():
        raise InvalidMessage("message coefficients must be in {-1, 0, 1}")
    return v


def ntru_encrypt(f_x, P_n: RingPoly, params: NtruParams = DEFAULT_PARAMS,
                 rng: random.Random = None, f_r=None) -> RingPoly:
    f_x = _check_ternary(f_x, params.N)
    if f_r is None:
        f_r = random_blinding(params, rng or random.SystemRandom())
    blinded = poly_mul(RingPoly(f_r, params.b2), P_n) * params.b1
    return blinded + RingPoly(f_x, params.b2)


def ntru_decrypt(f_y: RingPoly, key: NtruKeyPair) -> np.ndarray:
    p = key.params
    a = center_lift(poly_mul(key.f1, f_y))
    m = poly_mul(key.F_b1, RingPoly(a, p.b1))
    return center_lift(m)


# Byte encodings -----------------------------------------------------------

def _coeff_width(q):
    return max(1, ((q - 1).bit_length() + 7) // 8)


def _pack_poly(f: RingPoly) -> bytes:
    w = _coeff_width(f.q)
    return b"".join(int(c).to_bytes(w, "big") for c in f.coeffs)


def _unpack_poly(data: bytes, N: int, q: int) -> RingPoly:
    w = _coeff_width(q)
    if len(data) != N * w:
        raise KeyEncodingError("polynomial length mismatch")
    coeffs = [int.from_bytes(data[i * w:(i + 1) * w], "big") for i in range(N)]
    if any(c >= q for c in coeffs):
        raise KeyEncodingError("coefficient out of range")
    return RingPoly(coeffs, q)


def _header(p: NtruParams) -> list:
    return [u32(p.N), u32(p.b1), u32(p.b2), u32(p.d_f), u32(p.d_g), u32(p.d_r)]


def _params(fields) -> NtruParams:
    return NtruParams(*(from_u32(f) for f in fields))


def encode_public(P_n: RingPoly, params: NtruParams) -> bytes:
    """Fields: N, b1, b2, d_f, d_g, d_r, packed coefficients of P_n."""
    return pack_fields(*_header(params), _pack_poly(P_n))


def decode_public(data: bytes):
    fields = unpack_fields(data, 7)
    params = _params(fields[:6])
    return _unpack_poly(fields[6], params.N, params.b2), params


def encode_private(key: NtruKeyPair) -> bytes:
    return pack_fields(*_header(key.params), _pack_poly(key.P_n), _pack_poly(key.f1))


def decode_private(data: bytes) -> NtruKeyPair:
    fields = unpack_fields(data, 8)
    params = _params(fields[:6])
    P_n = _unpack_poly(fields[6], params.N, params.b2)
    f1 = _unpack_poly(fields[7], params.N, params.b2)
    try:
        F_b1 = poly_inverse(f1, params.b1)
        F_b2 = poly_inverse(f1, params.b2)
    except NotInvertible as exc:
        raise KeyEncodingError("stored f1 is not invertible") from exc
    return NtruKeyPair(params, f1, F_b1, F_b2, P_n)


def encode_ciphertext(f_y: RingPoly) -> bytes:
    return pack_fields(u32(f_y.n), u32(f_y.q), _pack_poly(f_y))


def decode_ciphertext(data: bytes) -> RingPoly:
    n, q, body = unpack_fields(data, 3)
    return _unpack_poly(body, from_u32(n), from_u32(q))
