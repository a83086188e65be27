"""Winternitz one-time signatures over SHA-256 hash chains.

Two variants share the chain primitive ``h^i``:

* the single-chain scheme: public key ``h^c(p_w)``, signature of a small
  integer ``x <= c`` is ``h^x(p_w)``, and verification checks
  ``h^(c-x)(y_w) == P_w``;
* the checksummed multi-chain scheme (w = 16) that signs 32-byte digests: 64
  message digits plus 3 checksum digits, one chain each.

The single-chain scheme is kept to show why the checksum exists: anyone
holding a signature for ``x`` can hash forward and sign any ``x' > x``.
"""

from dataclasses import dataclass
import hashlib
import random
from typing import Tuple

from ..errors import InvalidSignature, KeyEncodingError, MessageOutOfRange

HASH_NAME = "sha256"
N_BYTES = 32


def h(data: bytes) -> bytes:
    return hashlib.sha256(data).digest()


def chain(data: bytes, times: int) -> bytes:
    for _ in range(times):
        data = hashlib.sha256(data).digest()
    return data


# --- single chain --------------------------------------------------------

@dataclass(frozen=True)
class WotsKeyPair:
    p_w: bytes
    P_w: bytes
    c: int
    hash_name: str = HASH_NAME


def wots_keygen(c: int, rng: random.Random) -> WotsKeyPair:
    if c < 1:
        raise ValueError("chain bound c must be >= 1")
    p_w = rng.randbytes(N_BYTES)
    return WotsKeyPair(p_w, chain(p_w, c), c)


def wots_sign(x: int, key: WotsKeyPair) -> bytes:
    if not 0 <= x <= key.c:
        raise MessageOutOfRange(f"message {x} outside [0, {key.c}]")
    return chain(key.p_w, x)


def wots_verify(x: int, y_w: bytes, P_w: bytes, c: int) -> bool:
    if not 0 <= x <= c:
        raise MessageOutOfRange(f"message {x} outside [0, {c}]")
    return chain(y_w, c - x) == P_w


# --- checksummed multi-chain ---------------------------------------------

W = 16
LEN_MSG = 64      # 256-bit digest in base-16 digits
LEN_CSUM = 3      # checksum <= 64 * 15 = 960 < 16**3
LEN = LEN_MSG + LEN_CSUM
SIG_BYTES = LEN * N_BYTES


def base_w_digits(digest: bytes) -> list:
    """64 message digits (high nibble first) followed by 3 checksum digits."""
    if len(digest) != N_BYTES:
        raise ValueError("digest must be 32 bytes")
    msg = []
    for byte in digest:
        msg += [byte >> 4, byte & 0xF]
    csum = sum(W - 1 - d for d in msg)
    return msg + [(csum >> 8) & 0xF, (csum >> 4) & 0xF, csum & 0xF]


def chain_secrets(seed: bytes) -> list:
    return [h(seed + i.to_bytes(2, "big")) for i in range(LEN)]


@dataclass(frozen=True)
class WotscKeyPair:
    seed: bytes
    chain_tops: Tuple[bytes, ...]
    P_w: bytes

    @property
    def c(self):
        return W - 1


def wotsc_keygen(rng: random.Random, seed: bytes = None) -> WotscKeyPair:
    seed = rng.randbytes(N_BYTES) if seed is None else seed
    if len(seed) != N_BYTES:
        raise KeyEncodingError("WOTS seed must be 32 bytes")
    tops = tuple(chain(sk, W - 1) for sk in chain_secrets(seed))
    return WotscKeyPair(seed, tops, h(b"".join(tops)))


def wotsc_sign(digest: bytes, key: WotscKeyPair) -> bytes:
    digits = base_w_digits(digest)
    return b"".join(chain(sk, d) for sk, d in zip(chain_secrets(key.seed), digits))


def wotsc_chain_tops(digest: bytes, sig: bytes) -> list:
    if len(sig) != SIG_BYTES:
        raise InvalidSignature(f"WOTS signature must be {SIG_BYTES} bytes, got {len(sig)}")
    digits = base_w_digits(digest)
    return [chain(sig[i * N_BYTES:(i + 1) * N_BYTES], W - 1 - d)
            for i, d in enumerate(digits)]


def wotsc_verify(digest: bytes, sig: bytes, P_w: bytes) -> bool:
    return h(b"".join(wotsc_chain_tops(digest, sig))) == P_w
