import hashlib
import itertools
import random

import numpy as np
import pytest

from pqcert.algebra import Gf2kElement, Gf2Matrix, RingPoly, poly_mul
from pqcert.errors import (DecodeFailure, InvalidMessage, InvalidParameters,
                           InvalidSignature, MessageOutOfRange)
from pqcert.pqc import mceliece, mi, ntru, wots
from pqcert.pqc.mceliece import (GENERATOR, mceliece_decrypt, mceliece_encrypt,
                                 mceliece_keygen)
from pqcert.pqc.mi import mi_keygen, mi_sign, mi_verify
from pqcert.pqc.ntru import NtruParams, ntru_decrypt, ntru_encrypt, ntru_keygen
from pqcert.pqc.wots import (base_w_digits, chain, wots_keygen, wots_sign, wots_verify,
                             wotsc_keygen, wotsc_sign, wotsc_verify)


def sha_loop(data, times):
    for _ in range(times):
        data = hashlib.sha256(data).digest()
    return data


# --- naive WOTS ---------------------------------------------------------------

def test_wots_keygen_examples(rng):
    k1 = wots_keygen(1, rng)
    assert k1.P_w == hashlib.sha256(k1.p_w).digest()
    k16 = wots_keygen(16, rng)
    assert k16.P_w == sha_loop(k16.p_w, 16)


def test_wots_endpoints(rng):
    key = wots_keygen(16, rng)
    assert wots_sign(0, key) == key.p_w
    assert wots_sign(16, key) == key.P_w
    assert wots_verify(16, key.P_w, key.P_w, 16)


def test_wots_exhaustive_identity_matrix(rng):
    key = wots_keygen(16, rng)
    sigs = [wots_sign(x, key) for x in range(17)]
    matrix = [[wots_verify(x2, sigs[x], key.P_w, 16) for x2 in range(17)] for x in range(17)]
    assert matrix == [[x == x2 for x2 in range(17)] for x in range(17)]


def test_wots_out_of_range(rng):
    key = wots_keygen(16, rng)
    with pytest.raises(MessageOutOfRange):
        wots_sign(17, key)
    with pytest.raises(MessageOutOfRange):
        wots_verify(-1, key.p_w, key.P_w, 16)


def test_naive_chain_advance_forgery_succeeds(rng):
    key = wots_keygen(16, rng)
    y5 = wots_sign(5, key)
    for x_new in range(6, 17):
        assert wots_verify(x_new, chain(y5, x_new - 5), key.P_w, 16)


# --- checksummed WOTS ------------------------------------------------------

def test_checksum_digits_for_zero_digest():
    digits = base_w_digits(bytes(32))
    assert digits[:64] == [0] * 64
    assert digits[64:] == [3, 12, 0]
    assert digits[64] * 256 + digits[65] * 16 + digits[66] == 960


def test_wotsc_sizes_and_round_trip(rng):
    key = wotsc_keygen(rng)
    assert len(key.P_w) == 32
    for _ in range(100):
        d = rng.randbytes(32)
        sig = wotsc_sign(d, key)
        assert len(sig) == wots.SIG_BYTES == 67 * 32
        assert wotsc_verify(d, sig, key.P_w)


def test_wotsc_rejects_other_digest_and_bad_length(rng):
    key = wotsc_keygen(rng)
    d = rng.randbytes(32)
    sig = wotsc_sign(d, key)
    assert not wotsc_verify(bytes(a ^ 1 for a in d[:1]) + d[1:], sig, key.P_w)
    with pytest.raises(InvalidSignature):
        wotsc_verify(d, sig[:-1], key.P_w)


def forge_one_digit(digest, sig):
    """Chain-advance attack: bump one message digit and hash its chain forward."""
    digits = base_w_digits(digest)
    i = next(i for i, v in enumerate(digits[:64]) if v < 15)
    forged = bytearray(digest)
    forged[i // 2] += 0x10 if i % 2 == 0 else 0x01
    block = sig[i * 32:(i + 1) * 32]
    forged_sig = sig[:i * 32] + chain(block, 1) + sig[(i + 1) * 32:]
    return bytes(forged), forged_sig


def test_wotsc_forgery_rejected(rng):
    key = wotsc_keygen(rng)
    for _ in range(20):
        d = rng.randbytes(32)
        fd, fs = forge_one_digit(d, wotsc_sign(d, key))
        assert base_w_digits(fd)[:64] != base_w_digits(d)[:64]
        assert not wotsc_verify(fd, fs, key.P_w)


def test_wotsc_seed_determinism():
    seed = bytes(range(32))
    a = wotsc_keygen(random.Random(0), seed=seed)
    b = wotsc_keygen(random.Random(1), seed=seed)
    assert a == b


# --- Matsumoto-Imai -----------------------------------------------------------

def test_mi_parameter_examples():
    assert mi.central_exponent(1) == 3
    assert mi.check_parameters(7, 1) == 85
    with pytest.raises(InvalidParameters):
        mi.check_parameters(4, 2)
    with pytest.raises(InvalidParameters):
        mi.check_parameters(7, 7)


def test_mi_identity_maps(rng):
    key = mi_keygen(7, 1, rng, identity=True)
    zero = key.element(0)
    assert mi_sign(zero, key) == zero
    assert mi_verify(zero, zero, key.public)
    for v in range(1, 128):
        q = key.element(v)
        q_y = mi_sign(q, key)
        assert q_y == q ** 3
        assert (q_y ** 85) == q
        assert mi_verify(q, q_y, key.public)


@pytest.mark.parametrize("k,t1", [(7, 1), (7, 3), (13, 5)])
def test_mi_round_trip_and_perturbation(k, t1):
    r = random.Random(k * 10 + t1)
    for _ in range(30):
        key = mi_keygen(k, t1, r)
        assert mi.central_exponent(key.t1) * key.t2 % ((1 << k) - 1) == 1
        q_x = mi.digest_element(r.randbytes(16), k, key.modulus)
        q_y = mi_sign(q_x, key)
        assert mi_verify(q_x, q_y, key.public)
        for bit in range(k):
            bad = Gf2kElement(q_y.value ^ (1 << bit), key.modulus)
            assert not mi_verify(q_x, bad, key.public)


def test_mi_affine_inverse(rng):
    for _ in range(20):
        F = mi.AffineMap.random(9, rng)
        u = Gf2kElement(rng.randrange(512), 0b1000010001)  # x^9 + x^4 + 1
        assert F.inverse()(F(u)) == u


def test_mi_digest_element_leading_bits():
    d = int.from_bytes(hashlib.sha256(b"abc").digest(), "big")
    assert mi.digest_element(b"abc", 13, 0b10000000011011).value == d >> 243


def test_mi_encodings(rng):
    key = mi_keygen(13, 5, rng)
    assert mi.decode_private(mi.encode_private(key)) == key
    pub = mi.decode_public(mi.encode_public(key.public))
    assert pub == key.public
    q = key.element(4321)
    assert mi.decode_element(mi.encode_element(q), key.modulus) == q


# --- NTRU ---------------------------------------------------------------------

def assert_key_identities(key):
    p = key.params
    assert poly_mul(key.f1.with_modulus(p.b1), key.F_b1) == RingPoly.one(p.N, p.b1)
    assert poly_mul(key.f1, key.F_b2) == RingPoly.one(p.N, p.b2)


def test_ntru_parameter_check():
    with pytest.raises(InvalidParameters):
        NtruParams(11, 2, 32)


def test_ntru_trivial_hooks():
    p = ntru.DEFAULT_PARAMS
    one = [1] + [0] * 10
    key = ntru_keygen(p, random.Random(0), f1=one)
    assert key.F_b1 == RingPoly.one(11, 3) and key.F_b2 == RingPoly.one(11, 32)
    zero = [0] * 11
    assert ntru_encrypt(zero, key.P_n, p, f_r=zero).is_zero()
    assert ntru_decrypt(RingPoly.zero(11, 32), key).tolist() == zero


def test_ntru_hand_convolution_n3():
    p = NtruParams(N=3, b1=3, b2=32, d_f=1, d_g=1, d_r=1)
    P_n = RingPoly([5, 7, 11], 32)
    f_r, f_x = [1, -1, 0], [0, 1, -1]
    # f_r * P_n cyclic: [5-11, 7-5, 11-7] = [-6, 2, 4]; times 3 plus f_x
    expect = [(-18 + 0) % 32, (6 + 1) % 32, (12 - 1) % 32]
    assert ntru_encrypt(f_x, P_n, p, f_r=f_r).coeffs.tolist() == expect


def test_ntru_invalid_message(rng):
    key = ntru_keygen(rng=rng)
    with pytest.raises(InvalidMessage):
        ntru_encrypt([2] + [0] * 10, key.P_n, rng=rng)
    with pytest.raises(InvalidMessage):
        ntru_encrypt([0] * 10, key.P_n, rng=rng)


def test_ntru_round_trip_200(rng):
    for _ in range(200):
        key = ntru_keygen(rng=rng)
        assert_key_identities(key)
        m = [rng.choice((-1, 0, 1)) for _ in range(11)]
        assert ntru_decrypt(ntru_encrypt(m, key.P_n, rng=rng), key).tolist() == m


def test_ntru_oversized_blinding_failure_rate_recorded(rng):
    failures = 0
    trials = 300
    for _ in range(trials):
        key = ntru_keygen(rng=rng)
        m = [rng.choice((-1, 0, 1)) for _ in range(11)]
        f_r = ntru.random_blinding(key.params, rng, weight=11)
        if ntru_decrypt(ntru_encrypt(m, key.P_n, f_r=f_r), key).tolist() != m:
            failures += 1
    print(f"oversized f_r failure rate: {failures}/{trials}")
    assert 0 <= failures <= trials


def test_ntru_encodings(rng):
    key = ntru_keygen(rng=rng)
    P_n, params = ntru.decode_public(ntru.encode_public(key.P_n, key.params))
    assert P_n == key.P_n and params == key.params
    back = ntru.decode_private(ntru.encode_private(key))
    assert back.f1 == key.f1 and back.F_b1 == key.F_b1 and back.F_b2 == key.F_b2
    c = ntru_encrypt([1, 0, -1] + [0] * 8, key.P_n, rng=rng)
    assert ntru.decode_ciphertext(ntru.encode_ciphertext(c)) == c


# --- McEliece -----------------------------------------------------------------

def unit(i, n=7):
    e = np.zeros(n, dtype=np.uint8)
    e[i] = 1
    return e


def test_hamming_structure():
    H = mceliece.PARITY_CHECK
    assert not (GENERATOR @ Gf2Matrix(H.bits.T)).bits.any()
    # columns of H are the seven distinct non-zero syndromes
    assert len({tuple(c) for c in H.bits.T.tolist()}) == 7


def test_mceliece_identity_hooks():
    key = mceliece_keygen(identity=True)
    assert key.P_m == GENERATOR
    zero4, zero7 = np.zeros(4, dtype=np.uint8), np.zeros(7, dtype=np.uint8)
    assert not mceliece_encrypt(zero4, key.P_m, error=zero7).any()
    for i in range(7):
        assert mceliece_encrypt(zero4, key.P_m, error=unit(i)).tolist() == unit(i).tolist()
    assert mceliece_decrypt(zero7, key).tolist() == [0, 0, 0, 0]


def test_mceliece_public_matrix_product(rng):
    key = mceliece_keygen(rng)
    assert key.P_m == key.M1 @ key.M2 @ key.M3
    assert key.M3.is_permutation()
    assert mceliece_keygen(random.Random(5)) == mceliece_keygen(random.Random(5))


def test_mceliece_exhaustive_single_errors(rng):
    key = mceliece_keygen(rng)
    errors = [np.zeros(7, dtype=np.uint8)] + [unit(i) for i in range(7)]
    ok = 0
    for bits in itertools.product((0, 1), repeat=4):
        for e in errors:
            y = mceliece_encrypt(bits, key.P_m, error=e)
            ok += mceliece_decrypt(y, key).tolist() == list(bits)
    assert ok == 128


def test_mceliece_weight_two_sweep(rng):
    """Weight-2 errors exceed t=1: a perfect code always miscorrects, never fails."""
    key = mceliece_keygen(rng)
    wrong = failures = correct = 0
    for bits in itertools.product((0, 1), repeat=4):
        for i, j in itertools.combinations(range(7), 2):
            y = mceliece_encrypt(bits, key.P_m, error=unit(i) ^ unit(j))
            try:
                out = mceliece_decrypt(y, key).tolist()
            except DecodeFailure:
                failures += 1
                continue
            if out == list(bits):
                correct += 1
            else:
                wrong += 1
    assert failures == 0
    assert correct == 0
    assert wrong == 16 * 21


def test_mceliece_invalid_inputs(rng):
    key = mceliece_keygen(rng)
    with pytest.raises(InvalidMessage):
        mceliece_encrypt([1, 0, 1], key.P_m, rng)
    with pytest.raises(InvalidMessage):
        mceliece_decrypt([2] * 7, key)


def test_mceliece_encodings(rng):
    key = mceliece_keygen(rng)
    assert mceliece.decode_public(mceliece.encode_public(key.P_m)) == key.P_m
    assert mceliece.decode_private(mceliece.encode_private(key)) == key
    y = mceliece_encrypt([1, 1, 0, 1], key.P_m, rng)
    assert mceliece.decode_bits(mceliece.encode_bits(y)).tolist() == y.tolist()
