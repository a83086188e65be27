"""Length-prefixed binary framing for the toolkit's own key formats.

A blob is a sequence of fields, each written as a 4-byte big-endian length
followed by that many bytes.
"""

import struct

import numpy as np

from .errors import KeyEncodingError


def pack_fields(*fields: bytes) -> bytes:
    return b"".join(struct.pack(">I", len(f)) + bytes(f) for f in fields)


def unpack_fields(data: bytes, count: int) -> list:
    out, pos = [], 0
    for _ in range(count):
        if pos + 4 > len(data):
            raise KeyEncodingError("truncated field header")
        (n,) = struct.unpack_from(">I", data, pos)
        pos += 4
        if pos + n > len(data):
            raise KeyEncodingError("truncated field body")
        out.append(data[pos:pos + n])
        pos += n
    if pos != len(data):
        raise KeyEncodingError("trailing bytes after fields")
    return out


def u32(n: int) -> bytes:
    return struct.pack(">I", n)


def from_u32(b: bytes) -> int:
    if len(b) != 4:
        raise KeyEncodingError("expected a 4-byte integer")
    return struct.unpack(">I", b)[0]


def pack_bits(bits: np.ndarray) -> bytes:
    """Row-major bit grid packed MSB-first, prefixed with its (rows, cols)."""
    bits = np.atleast_2d(bits)
    rows, cols = bits.shape
    return u32(rows) + u32(cols) + np.packbits(bits.astype(np.uint8).ravel()).tobytes()


def unpack_bits(data: bytes) -> np.ndarray:
    if len(data) < 8:
        raise KeyEncodingError("truncated bit grid")
    rows, cols = from_u32(data[:4]), from_u32(data[4:8])
    body = np.frombuffer(data[8:], dtype=np.uint8)
    if len(body) != (rows * cols + 7) // 8:
        raise KeyEncodingError("bit grid size mismatch")
    return np.unpackbits(body)[: rows * cols].reshape(rows, cols)
