import hashlib
import random

import pytest

from pqcert.algebra import INFINITY, P256, TOY17, EcPoint, ec_scalar_mul
from pqcert.errors import DigestOutOfRange, InvalidParameters, KeyEncodingError
from pqcert.qvc import (EcdsaSignature, RsaKeyPair, ecdsa_keygen, ecdsa_sign, ecdsa_verify,
                        rsa_keygen, rsa_sign, rsa_verify)
from pqcert.qvc import ecdsa as ecdsa_mod, rsa as rsa_mod


# --- independent toy-curve oracle -------------------------------------------

def oracle_add(P, Q, p=17, a=2):
    """Affine addition on y^2 = x^3 + 2x + 2 over GF(17), written from scratch."""
    if P is None:
        return Q
    if Q is None:
        return P
    (x1, y1), (x2, y2) = P, Q
    if x1 == x2 and (y1 + y2) % p == 0:
        return None
    if P == Q:
        lam = (3 * x1 * x1 + a) * pow(2 * y1, p - 2, p) % p
    else:
        lam = (y2 - y1) * pow(x2 - x1, p - 2, p) % p
    x3 = (lam * lam - x1 - x2) % p
    return x3, (lam * (x1 - x3) - y1) % p


def oracle_mul_table():
    table, acc = [None], None
    for _ in range(19):
        acc = oracle_add(acc, (5, 1))
        table.append(acc)
    return table  # table[i] = i*G


ORACLE = oracle_mul_table()


def as_pair(P):
    return None if P.is_infinity else (P.x, P.y)


def test_oracle_matches_library_multiples():
    assert ORACLE[19] is None
    for i in range(19):
        assert as_pair(ec_scalar_mul(i, TOY17.G, TOY17)) == ORACLE[i]


# --- RSA ----------------------------------------------------------------

def test_rsa_toy_key():
    key = RsaKeyPair.from_primes(3, 11, 7)
    assert (key.n_r, key.phi_r, key.p_r) == (33, 20, 3)
    assert rsa_sign(2, key) == 8
    assert rsa_sign(0, key) == 0 and rsa_sign(1, key) == 1
    assert rsa_verify(2, 8, 33, 7)
    assert not rsa_verify(2, 9, 33, 7)
    assert rsa_verify(0, 0, 33, 7)


def test_rsa_equal_primes_rejected():
    with pytest.raises(InvalidParameters):
        RsaKeyPair.from_primes(11, 11, 7)


def test_rsa_digest_out_of_range():
    key = RsaKeyPair.from_primes(3, 11, 7)
    with pytest.raises(DigestOutOfRange):
        rsa_sign(33, key)
    assert not rsa_verify(40, 8, 33, 7)


def test_rsa_2048_modulus_bits():
    key = rsa_keygen(2048, 65537, random.Random(7))
    assert key.bits == 2048
    assert key.P_r == 65537


def test_rsa_512_round_trip_and_tamper():
    r = random.Random(512)
    key = rsa_keygen(512, rng=r)
    assert key.bits == 512
    for _ in range(100):
        x = int.from_bytes(hashlib.sha256(r.randbytes(64)).digest(), "big")
        s = rsa_sign(x, key)
        assert rsa_verify(x, s, key.n_r, key.P_r)
        assert not rsa_verify(x ^ 1, s, key.n_r, key.P_r)


def test_rsa_keygen_deterministic():
    assert rsa_keygen(256, rng=random.Random(3)) == rsa_keygen(256, rng=random.Random(3))


def test_rsa_encodings_round_trip():
    key = rsa_keygen(256, rng=random.Random(4))
    assert rsa_mod.decode_public(rsa_mod.encode_public(*key.public)) == key.public
    assert rsa_mod.decode_private(rsa_mod.encode_private(key)) == key
    sig = rsa_sign(12345, key)
    enc = rsa_mod.encode_signature(sig, key.n_r)
    assert len(enc) == key.byte_len
    assert rsa_mod.decode_signature(enc) == sig
    with pytest.raises(KeyEncodingError):
        rsa_mod.decode_public(b"\x30\x00junk")


# --- ECDSA ----------------------------------------------------------------

def test_toy_keygen_examples():
    assert ecdsa_keygen(TOY17, p_e=1).P_e == TOY17.G
    assert ecdsa_keygen(TOY17, p_e=18).P_e == EcPoint(5, 16)


def test_toy_sign_matches_hand_computation():
    key = ecdsa_keygen(TOY17, p_e=7)
    sig = ecdsa_sign(5, key, r_e=10)
    # 10G = (7, 11); y_e = (5 + 7*7) / 10 mod 19 = 13
    assert sig.R_e == EcPoint(7, 11)
    assert sig.y_e == 13
    assert ecdsa_verify(5, sig, key.P_e, TOY17)


def test_degenerate_fixed_nonce_raises():
    # x=12, p_e=1, r_e=10: x_r = 7 and 12 + 7 = 19 = 0 mod 19
    with pytest.raises(InvalidParameters):
        ecdsa_sign(12, ecdsa_keygen(TOY17, p_e=1), r_e=10)


def test_signatures_randomized_and_zero_digest():
    r = random.Random(1)
    key = ecdsa_keygen(P256, r)
    a, b = ecdsa_sign(0, key, r), ecdsa_sign(0, key, r)
    assert a != b
    assert ecdsa_verify(0, a, key.P_e, P256) and ecdsa_verify(0, b, key.P_e, P256)


def test_infinity_signature_rejected():
    key = ecdsa_keygen(TOY17, p_e=3)
    assert not ecdsa_verify(1, EcdsaSignature(INFINITY, 5), key.P_e, TOY17)
    assert not ecdsa_verify(1, EcdsaSignature(EcPoint(1, 1), 5), key.P_e, TOY17)


TOY_DIGESTS = [0, 1, 2, 3, 4]


def test_toy_sweep_acceptance_matrix_is_diagonal():
    """Signer-key x verifier-key (per digest) and digest x digest (per key) are diagonal.

    Cross pairs that change both key and digest can collide in a group of order
    19, since x' + p'x_r = x + p x_r has solutions; those are not checked.
    """
    r = random.Random(17)
    keys = [ecdsa_keygen(TOY17, p_e=p) for p in range(1, 19)]
    for i, key in enumerate(keys):
        # the oracle confirms every public key independently
        assert as_pair(key.P_e) == ORACLE[key.p_e]
        for x in TOY_DIGESTS:
            sig = ecdsa_sign(x, key, r)
            assert as_pair(sig.R_e) is not None
            row = [ecdsa_verify(x, sig, other.P_e, TOY17) for other in keys]
            assert row == [j == i for j in range(len(keys))], (i, x)
            col = [ecdsa_verify(x2, sig, key.P_e, TOY17) for x2 in TOY_DIGESTS]
            assert col == [x2 == x for x2 in TOY_DIGESTS], (i, x)


def test_p256_round_trip_and_bit_flip():
    r = random.Random(256)
    key = ecdsa_keygen(P256, r)
    for _ in range(20):
        x = int.from_bytes(r.randbytes(32), "big")
        sig = ecdsa_sign(x, key, r)
        assert ecdsa_verify(x, sig, key.P_e, P256)
        assert not ecdsa_verify(x ^ (1 << r.randrange(256)), sig, key.P_e, P256)


def test_ecdsa_encodings_round_trip():
    r = random.Random(2)
    key = ecdsa_keygen(P256, r)
    sig = ecdsa_sign(99, key, r)
    assert ecdsa_mod.decode_signature(ecdsa_mod.encode_signature(sig)) == sig
    assert ecdsa_mod.decode_public(ecdsa_mod.encode_public(key.P_e, P256), P256) == key.P_e
    assert ecdsa_mod.decode_private(ecdsa_mod.encode_private(key), P256) == key
    with pytest.raises(KeyEncodingError):
        ecdsa_mod.decode_private(b"\x00", P256)
