"""Linear algebra over GF(2) and arithmetic in GF(2^k)."""

from dataclasses import dataclass
import random

import numpy as np

from ..errors import ParameterMismatch, SingularMatrix


@dataclass(frozen=True, eq=False)
class Gf2Matrix:
    """rows x cols bit matrix, row-major, stored as a read-only uint8 array."""

    bits: np.ndarray

    def __post_init__(self):
        b = np.atleast_2d(np.asarray(self.bits, dtype=np.uint8) & 1)
        b.setflags(write=False)
        object.__setattr__(self, "bits", b)

    @property
    def rows(self):
        return self.bits.shape[0]

    @property
    def cols(self):
        return self.bits.shape[1]

    @property
    def shape(self):
        return self.bits.shape

    @classmethod
    def identity(cls, n):
        return cls(np.eye(n, dtype=np.uint8))

    @classmethod
    def zeros(cls, rows, cols):
        return cls(np.zeros((rows, cols), dtype=np.uint8))

    @classmethod
    def row_vector(cls, bits):
        return cls(np.asarray(bits, dtype=np.uint8).reshape(1, -1))

    def __eq__(self, other):
        return isinstance(other, Gf2Matrix) and np.array_equal(self.bits, other.bits)

    def __hash__(self):
        return hash((self.shape, self.bits.tobytes()))

    def __repr__(self):
        return f"Gf2Matrix({self.bits.tolist()})"

    def __matmul__(self, other):
        return gf2_mat_mul(self, other)

    def __add__(self, other):
        if self.shape != other.shape:
            raise ParameterMismatch(f"shape {self.shape} vs {other.shape}")
        return Gf2Matrix(self.bits ^ other.bits)

    def inverse(self):
        return gf2_mat_inverse(self)

    def is_permutation(self):
        b = self.bits
        return (self.rows == self.cols and (b.sum(axis=0) == 1).all()
                and (b.sum(axis=1) == 1).all())


def gf2_mat_mul(a: Gf2Matrix, b: Gf2Matrix) -> Gf2Matrix:
    if a.cols != b.rows:
        raise ParameterMismatch(f"cannot multiply {a.shape} by {b.shape}")
    return Gf2Matrix((a.bits.astype(np.int64) @ b.bits.astype(np.int64)) & 1)


def gf2_mat_inverse(m: Gf2Matrix) -> Gf2Matrix:
    """Gauss-Jordan elimination on [M | I]."""
    n = m.rows
    if m.cols != n:
        raise ParameterMismatch(f"inverse requires a square matrix, got {m.shape}")
    aug = np.concatenate([m.bits, np.eye(n, dtype=np.uint8)], axis=1)
    for col in range(n):
        pivots = np.nonzero(aug[col:, col])[0]
        if len(pivots) == 0:
            raise SingularMatrix("matrix is singular over GF(2)")
        p = col + pivots[0]
        if p != col:
            aug[[col, p]] = aug[[p, col]]
        mask = aug[:, col].astype(bool)
        mask[col] = False
        aug[mask] ^= aug[col]
    return Gf2Matrix(aug[:, n:])


def random_invertible(n: int, rng: random.Random) -> Gf2Matrix:
    while True:
        m = Gf2Matrix(np.array([[rng.getrandbits(1) for _ in range(n)]
                                for _ in range(n)], dtype=np.uint8))
        try:
            gf2_mat_inverse(m)
        except SingularMatrix:
            continue
        return m


def random_permutation(n: int, rng: random.Random) -> Gf2Matrix:
    order = list(range(n))
    rng.shuffle(order)
    m = np.zeros((n, n), dtype=np.uint8)
    m[np.arange(n), order] = 1
    return Gf2Matrix(m)


# --- GF(2)[x] on Python ints: bit i is the coefficient of x^i ------------

def clmul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def poly_mod(a: int, m: int) -> int:
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, poly_mod(a, b)
    return a


def is_irreducible(m: int) -> bool:
    """Ben-Or: gcd(m, x^(2^i) - x) == 1 for i <= k/2."""
    k = m.bit_length() - 1
    if k < 1:
        return False
    if k == 1:
        return True
    x = 0b10
    power = x
    for _ in range(k // 2):
        power = poly_mod(clmul(power, power), m)
        if poly_gcd(m, power ^ x) != 1:
            return False
    return True


def random_irreducible(k: int, rng: random.Random) -> int:
    while True:
        m = (1 << k) | rng.getrandbits(k) | 1
        if is_irreducible(m):
            return m


@dataclass(frozen=True)
class Gf2kElement:
    """Element of GF(2)[x]/(modulus); ``value`` bit i = coefficient of x^i."""

    value: int
    modulus: int

    def __post_init__(self):
        if self.value < 0 or self.value.bit_length() >= self.modulus.bit_length():
            raise ValueError(f"value {self.value:#x} not reduced modulo {self.modulus:#x}")

    @property
    def k(self):
        return self.modulus.bit_length() - 1

    def _check(self, other):
        if self.modulus != other.modulus:
            raise ParameterMismatch("elements belong to different fields")

    def __add__(self, other):
        self._check(other)
        return Gf2kElement(self.value ^ other.value, self.modulus)

    __sub__ = __add__

    def __mul__(self, other):
        self._check(other)
        return Gf2kElement(poly_mod(clmul(self.value, other.value), self.modulus),
                           self.modulus)

    def __pow__(self, e):
        return gf2k_pow(self, e)

    def __bool__(self):
        return self.value != 0

    def bits(self) -> np.ndarray:
        return np.array([(self.value >> i) & 1 for i in range(self.k)], dtype=np.uint8)

    @classmethod
    def from_bits(cls, bits, modulus):
        return cls(sum(int(b) << i for i, b in enumerate(bits)), modulus)


def gf2k_pow(x: Gf2kElement, e: int) -> Gf2kElement:
    if e < 0:
        raise ValueError("negative exponent")
    result = 1
    base = x.value
    m = x.modulus
    while e:
        if e & 1:
            result = poly_mod(clmul(result, base), m)
        base = poly_mod(clmul(base, base), m)
        e >>= 1
    return Gf2kElement(result, m)
