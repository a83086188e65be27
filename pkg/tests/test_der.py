import datetime as dt
import random

import pytest
from hypothesis import given, settings, strategies as st

from der_corpus import random_value
from pqcert import der
from pqcert.errors import DerError, MalformedOid, NonCanonical, UnsupportedTag


def test_length_examples():
    assert der.encode_length(5) == b"\x05"
    assert der.encode_length(200) == b"\x81\xc8"
    assert der.encode_length(500) == b"\x82\x01\xf4"
    assert der.decode_length(b"\x82\x01\xf4") == (500, 3)


@pytest.mark.parametrize("bad", [b"\x80", b"\x81\x05", b"\x82\x00\xff", b"\x81"])
def test_non_canonical_lengths(bad):
    with pytest.raises(DerError):
        der.decode_length(bad)


@given(st.integers(0, 1 << 40))
def test_length_round_trip(n):
    enc = der.encode_length(n)
    assert der.decode_length(enc) == (n, len(enc))


def test_oid_examples():
    sha256_rsa = der.Oid.parse("1.2.840.113549.1.1.11")
    assert der.encode_oid(sha256_rsa).hex() == "06092a864886f70d01010b"
    falcon = der.Oid.parse("1.3.9999.3.1")
    assert der.encode_oid(falcon).hex() == "06052bce0f0301"
    assert der.decode_oid(bytes.fromhex("06052bce0f0301")) == falcon
    assert str(falcon) == "1.3.9999.3.1"


@pytest.mark.parametrize("dotted", ["1", "3.1", "1.40", "1.2.-3", "1.x"])
def test_malformed_oids(dotted):
    with pytest.raises(MalformedOid):
        der.Oid.parse(dotted)


@pytest.mark.parametrize("content", ["2b80ce0f", "2bce"])
def test_malformed_oid_content(content):
    with pytest.raises(DerError):
        der.oid_from_content(bytes.fromhex(content))


def test_value_examples():
    assert der.encode_value(der.Integer(0)).hex() == "020100"
    assert der.encode_value(der.Integer(128)).hex() == "02020080"
    assert der.encode_value(der.Integer(-129)).hex() == "0202ff7f"
    assert der.encode_value(der.Sequence([der.Null()])).hex() == "30020500"
    assert der.encode_value(der.Boolean(True)).hex() == "0101ff"
    assert der.encode_value(der.Tagged(0, der.Integer(2))).hex() == "a003020102"


def test_time_selection():
    early = dt.datetime(2049, 12, 31, 23, 59, 59, tzinfo=dt.timezone.utc)
    late = dt.datetime(2050, 1, 1, tzinfo=dt.timezone.utc)
    assert der.encode_value(der.der_time(early)) == b"\x17\x0d491231235959Z"
    assert der.encode_value(der.der_time(late)) == b"\x18\x0f20500101000000Z"


def test_set_is_sorted_and_unsorted_rejected():
    s = der.Set([der.Integer(3), der.Integer(1)])
    assert der.encode_value(s).hex() == "3106020101020103"
    with pytest.raises(NonCanonical):
        der.decode(bytes.fromhex("3106020103020101"))


@pytest.mark.parametrize("hexdata", [
    "02020001",          # non-minimal positive integer
    "0202ff80",          # non-minimal negative integer
    "020100" + "00",     # trailing byte
    "010101",            # BOOLEAN true must be 0xff
    "030207ff",          # non-zero padding bits
    "0301ff",            # unused count missing
    "050100",            # NULL with content
    "3080020100" + "0000",  # indefinite length
    "1f2100",            # high-form tag
    "0400" [:2],         # truncated
    "0405aabb",          # content past end
    "1305" + "2a2a2a2a2a",  # '*' is not printable
    "170d3439313233313233353935395a"[:-2] + "58",  # UTCTime missing Z
])
def test_non_canonical_fixtures_rejected(hexdata):
    with pytest.raises(DerError):
        der.decode(bytes.fromhex(hexdata))


def test_unknown_tag():
    with pytest.raises(UnsupportedTag):
        der.decode(bytes.fromhex("0a0100"))


def test_random_corpus_round_trip():
    r = random.Random(99)
    for _ in range(2000):
        v = random_value(r)
        enc = der.encode_value(v)
        back = der.decode(enc)
        assert back == v
        assert der.encode_value(back) == enc


@settings(max_examples=200)
@given(st.integers(), st.binary(max_size=200), st.text(max_size=30))
def test_hypothesis_leaf_round_trip(n, b, s):
    for v in (der.Integer(n), der.OctetString(b), der.Utf8String(s),
              der.Sequence([der.Integer(n), der.OctetString(b)])):
        assert der.decode(der.encode_value(v)) == v
