"""McEliece encryption with the systematic Hamming(7,4) code (t = 1).

    P_m = M1 @ M2 @ M3                          (scrambler, generator, permutation)
    M_y = M_x @ P_m + M_r                       (wt(M_r) <= 1)
    M_x = decode(M_y @ M3^-1) @ M4 @ M1^-1

``decode`` is syndrome decoding against H = [P^T | I3]; M4 picks the four
systematic message positions out of the corrected codeword.
"""

from dataclasses import dataclass
import random

import numpy as np

from ..algebra.gf2 import Gf2Matrix, random_invertible, random_permutation
from ..encoding import from_u32, pack_bits, pack_fields, u32, unpack_bits, unpack_fields
from ..errors import DecodeFailure, InvalidMessage, KeyEncodingError

N, K, T = 7, 4, 1

_PARITY = np.array([[1, 1, 0],
                    [1, 0, 1],
                    [0, 1, 1],
                    [1, 1, 1]], dtype=np.uint8)
GENERATOR = Gf2Matrix(np.concatenate([np.eye(K, dtype=np.uint8), _PARITY], axis=1))
PARITY_CHECK = Gf2Matrix(np.concatenate([_PARITY.T, np.eye(N - K, dtype=np.uint8)], axis=1))
# Codeword -> message: the systematic code carries the message in positions 0..3.
DECODING_MAP = Gf2Matrix(np.eye(N, K, dtype=np.uint8))


def syndrome_decode(word: np.ndarray) -> np.ndarray:
    """Correct up to one bit error in a length-7 word."""
    word = np.asarray(word, dtype=np.uint8).ravel() & 1
    syndrome = (PARITY_CHECK.bits.astype(np.int64) @ word) & 1
    if not syndrome.any():
        return word
    matches = np.nonzero((PARITY_CHECK.bits.T == syndrome).all(axis=1))[0]
    if len(matches) != 1:
        raise DecodeFailure(f"syndrome {syndrome.tolist()} matches no single-bit error")
    fixed = word.copy()
    fixed[matches[0]] ^= 1
    return fixed


@dataclass(frozen=True)
class McElieceKeyPair:
    M1: Gf2Matrix
    M2: Gf2Matrix
    M3: Gf2Matrix
    P_m: Gf2Matrix
    n: int = N
    k: int = K
    t: int = T

    @property
    def M4(self) -> Gf2Matrix:
        return DECODING_MAP

    def f_c(self, word):
        return syndrome_decode(word)


def mceliece_keygen(rng: random.Random = None, identity: bool = False) -> McElieceKeyPair:
    """``identity=True`` sets M1 = M3 = I (test mode)."""
    if identity:
        M1, M3 = Gf2Matrix.identity(K), Gf2Matrix.identity(N)
    else:
        rng = rng or random.SystemRandom()
        M1, M3 = random_invertible(K, rng), random_permutation(N, rng)
    return McElieceKeyPair(M1, GENERATOR, M3, M1 @ GENERATOR @ M3)


def _as_row(bits, length, what):
    v = np.asarray(bits).ravel()
    if v.shape != (length,) or not np.isin(v, (0, 1)).all():
        raise InvalidMessage(f"{what} must be {length} bits")
    return v.astype(np.uint8)


def random_error(rng: random.Random, weight: int = T) -> np.ndarray:
    e = np.zeros(N, dtype=np.uint8)
    e[rng.sample(range(N), weight)] = 1
    return e


def mceliece_encrypt(M_x, P_m: Gf2Matrix, rng: random.Random = None,
                     error=None) -> np.ndarray:
    """``error`` fixes M_r (test hook); by default one random bit is flipped."""
    m = _as_row(M_x, P_m.rows, "message")
    if error is None:
        error = random_error(rng or random.SystemRandom())
    e = _as_row(error, P_m.cols, "error vector")
    return (Gf2Matrix.row_vector(m) @ P_m).bits.ravel() ^ e


def mceliece_decrypt(M_y, key: McElieceKeyPair) -> np.ndarray:
    y = _as_row(M_y, key.n, "ciphertext")
    unpermuted = (Gf2Matrix.row_vector(y) @ key.M3.inverse()).bits.ravel()
    codeword = key.f_c(unpermuted)
    scrambled = Gf2Matrix.row_vector(codeword) @ key.M4
    return (scrambled @ key.M1.inverse()).bits.ravel()


# Byte encodings -----------------------------------------------------------

def encode_public(P_m: Gf2Matrix) -> bytes:
    """Fields: n, k, t, packed k x n public matrix."""
    return pack_fields(u32(N), u32(K), u32(T), pack_bits(P_m.bits))


def decode_public(data: bytes) -> Gf2Matrix:
    n, k, t, body = unpack_fields(data, 4)
    if (from_u32(n), from_u32(k), from_u32(t)) != (N, K, T):
        raise KeyEncodingError("only Hamming(7,4) keys are supported")
    P_m = Gf2Matrix(unpack_bits(body))
    if P_m.shape != (K, N):
        raise KeyEncodingError("public matrix shape mismatch")
    return P_m


def encode_private(key: McElieceKeyPair) -> bytes:
    return pack_fields(u32(N), u32(K), u32(T), pack_bits(key.M1.bits), pack_bits(key.M3.bits))


def decode_private(data: bytes) -> McElieceKeyPair:
    n, k, t, m1, m3 = unpack_fields(data, 5)
    if (from_u32(n), from_u32(k), from_u32(t)) != (N, K, T):
        raise KeyEncodingError("only Hamming(7,4) keys are supported")
    M1, M3 = Gf2Matrix(unpack_bits(m1)), Gf2Matrix(unpack_bits(m3))
    if M1.shape != (K, K) or not M3.is_permutation() or M3.shape != (N, N):
        raise KeyEncodingError("bad McEliece private factors")
    return McElieceKeyPair(M1, GENERATOR, M3, M1 @ GENERATOR @ M3)


def encode_bits(bits) -> bytes:
    return pack_bits(np.asarray(bits, dtype=np.uint8).reshape(1, -1))


def decode_bits(data: bytes) -> np.ndarray:
    return unpack_bits(data).ravel()
