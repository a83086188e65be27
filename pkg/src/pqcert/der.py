"""Minimal ASN.1 DER codec, enough for X.509.

Values are small frozen dataclasses; :func:`encode_value` and
:func:`decode_value` convert between them and canonical DER bytes. Only DER is
accepted: indefinite lengths, non-minimal lengths or integers, unsorted SET OF
contents and non-zero padding bits all raise :class:`NonCanonical`.
"""

from dataclasses import dataclass, field
import datetime as _dt
import re
from typing import Tuple, Union

from .errors import DerError, MalformedOid, NonCanonical, UnsupportedTag

TAG_BOOLEAN = 0x01
TAG_INTEGER = 0x02
TAG_BIT_STRING = 0x03
TAG_OCTET_STRING = 0x04
TAG_NULL = 0x05
TAG_OID = 0x06
TAG_UTF8_STRING = 0x0C
TAG_PRINTABLE_STRING = 0x13
TAG_UTC_TIME = 0x17
TAG_GENERALIZED_TIME = 0x18
TAG_SEQUENCE = 0x30
TAG_SET = 0x31
CONTEXT_CONSTRUCTED = 0xA0

_PRINTABLE = re.compile(r"[A-Za-z0-9 '()+,\-./:=?]*\Z")


# --- lengths -------------------------------------------------------------

def encode_length(n: int) -> bytes:
    if n < 0:
        raise ValueError("negative length")
    if n < 0x80:
        return bytes([n])
    body = n.to_bytes((n.bit_length() + 7) // 8, "big")
    return bytes([0x80 | len(body)]) + body


def decode_length(data: bytes, offset: int = 0) -> Tuple[int, int]:
    """Return ``(length, octets consumed)`` for the length field at ``offset``."""
    if offset >= len(data):
        raise DerError("truncated length")
    first = data[offset]
    if first < 0x80:
        return first, 1
    if first == 0x80:
        raise NonCanonical("indefinite length is not DER")
    count = first & 0x7F
    if count == 0x7F:
        raise DerError("reserved length octet")
    body = data[offset + 1: offset + 1 + count]
    if len(body) != count:
        raise DerError("truncated length")
    if body[0] == 0:
        raise NonCanonical("length has leading zero octet")
    n = int.from_bytes(body, "big")
    if n < 0x80:
        raise NonCanonical("long-form length used for a short length")
    return n, 1 + count


# --- object identifiers --------------------------------------------------

@dataclass(frozen=True, order=True)
class Oid:
    arcs: Tuple[int, ...]

    def __post_init__(self):
        arcs = tuple(int(a) for a in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        if len(arcs) < 2:
            raise MalformedOid("an OID needs at least two arcs")
        if any(a < 0 for a in arcs):
            raise MalformedOid("negative arc")
        if arcs[0] > 2:
            raise MalformedOid("first arc must be 0, 1 or 2")
        if arcs[0] < 2 and arcs[1] >= 40:
            raise MalformedOid("second arc must be < 40 under arcs 0 and 1")

    @classmethod
    def parse(cls, dotted: str) -> "Oid":
        try:
            return cls(tuple(int(part) for part in dotted.strip().split(".")))
        except ValueError as exc:
            raise MalformedOid(f"bad dotted OID {dotted!r}") from exc

    def __str__(self):
        return ".".join(map(str, self.arcs))

    def __repr__(self):
        return f"Oid('{self}')"


def _base128(n: int) -> bytes:
    out = [n & 0x7F]
    n >>= 7
    while n:
        out.append(0x80 | (n & 0x7F))
        n >>= 7
    return bytes(reversed(out))


def oid_content(oid: Oid) -> bytes:
    a = oid.arcs
    return _base128(40 * a[0] + a[1]) + b"".join(_base128(x) for x in a[2:])


def oid_from_content(content: bytes) -> Oid:
    if not content:
        raise MalformedOid("empty OID")
    if content[-1] & 0x80:
        raise MalformedOid("OID ends inside a subidentifier")
    subids, cur, fresh = [], 0, True
    for byte in content:
        if fresh and byte == 0x80:
            raise MalformedOid("non-minimal subidentifier")
        cur = (cur << 7) | (byte & 0x7F)
        fresh = not byte & 0x80
        if fresh:
            subids.append(cur)
            cur = 0
    first = subids[0]
    if first < 40:
        head = (0, first)
    elif first < 80:
        head = (1, first - 40)
    else:
        head = (2, first - 80)
    return Oid(head + tuple(subids[1:]))


def encode_oid(oid: Oid) -> bytes:
    content = oid_content(oid)
    return bytes([TAG_OID]) + encode_length(len(content)) + content


def decode_oid(data: bytes) -> Oid:
    value = decode(data)
    if not isinstance(value, ObjectIdentifier):
        raise MalformedOid("not an OBJECT IDENTIFIER")
    return value.oid


# --- values --------------------------------------------------------------

@dataclass(frozen=True)
class Boolean:
    value: bool
    tag = TAG_BOOLEAN

    def content(self):
        return b"\xff" if self.value else b"\x00"

    @classmethod
    def from_content(cls, c):
        if c not in (b"\x00", b"\xff"):
            raise NonCanonical("BOOLEAN must be 00 or FF")
        return cls(c == b"\xff")


@dataclass(frozen=True)
class Integer:
    value: int
    tag = TAG_INTEGER

    def content(self):
        v = self.value
        length = (v + (v < 0)).bit_length() // 8 + 1
        return v.to_bytes(length, "big", signed=True)

    @classmethod
    def from_content(cls, c):
        if not c:
            raise DerError("empty INTEGER")
        if len(c) > 1 and ((c[0] == 0 and c[1] < 0x80) or (c[0] == 0xFF and c[1] >= 0x80)):
            raise NonCanonical("INTEGER not minimally encoded")
        return cls(int.from_bytes(c, "big", signed=True))


@dataclass(frozen=True)
class BitString:
    data: bytes
    unused: int = 0
    tag = TAG_BIT_STRING

    def __post_init__(self):
        object.__setattr__(self, "data", bytes(self.data))
        if not 0 <= self.unused <= 7 or (not self.data and self.unused):
            raise DerError("bad unused-bit count")
        if self.data and self.data[-1] & ((1 << self.unused) - 1):
            raise NonCanonical("BIT STRING padding bits must be zero")

    def content(self):
        return bytes([self.unused]) + self.data

    @classmethod
    def from_content(cls, c):
        if not c:
            raise DerError("empty BIT STRING")
        return cls(c[1:], c[0])


@dataclass(frozen=True)
class OctetString:
    data: bytes
    tag = TAG_OCTET_STRING

    def __post_init__(self):
        object.__setattr__(self, "data", bytes(self.data))

    def content(self):
        return self.data

    @classmethod
    def from_content(cls, c):
        return cls(c)


@dataclass(frozen=True)
class Null:
    tag = TAG_NULL

    def content(self):
        return b""

    @classmethod
    def from_content(cls, c):
        if c:
            raise DerError("NULL with content")
        return cls()


@dataclass(frozen=True)
class ObjectIdentifier:
    oid: Oid
    tag = TAG_OID

    def __post_init__(self):
        if isinstance(self.oid, str):
            object.__setattr__(self, "oid", Oid.parse(self.oid))

    def content(self):
        return oid_content(self.oid)

    @classmethod
    def from_content(cls, c):
        return cls(oid_from_content(c))


@dataclass(frozen=True)
class Utf8String:
    text: str
    tag = TAG_UTF8_STRING

    def content(self):
        return self.text.encode("utf-8")

    @classmethod
    def from_content(cls, c):
        try:
            return cls(c.decode("utf-8"))
        except UnicodeDecodeError as exc:
            raise DerError("invalid UTF-8") from exc


@dataclass(frozen=True)
class PrintableString:
    text: str
    tag = TAG_PRINTABLE_STRING

    def __post_init__(self):
        if not _PRINTABLE.match(self.text):
            raise DerError(f"{self.text!r} is not a PrintableString")

    def content(self):
        return self.text.encode("ascii")

    @classmethod
    def from_content(cls, c):
        try:
            return cls(c.decode("ascii"))
        except UnicodeDecodeError as exc:
            raise DerError("non-ASCII PrintableString") from exc


def _utc(dt: _dt.datetime) -> _dt.datetime:
    if dt.tzinfo is None:
        dt = dt.replace(tzinfo=_dt.timezone.utc)
    return dt.astimezone(_dt.timezone.utc).replace(microsecond=0)


@dataclass(frozen=True)
class UtcTime:
    """YYMMDDHHMMSSZ; years 1950-2049."""

    when: _dt.datetime
    tag = TAG_UTC_TIME

    def __post_init__(self):
        object.__setattr__(self, "when", _utc(self.when))
        if not 1950 <= self.when.year <= 2049:
            raise DerError("UTCTime covers 1950-2049 only")

    def content(self):
        return self.when.strftime("%y%m%d%H%M%SZ").encode()

    @classmethod
    def from_content(cls, c):
        s = c.decode("ascii", "replace")
        if not re.fullmatch(r"\d{12}Z", s):
            raise NonCanonical(f"UTCTime must be YYMMDDHHMMSSZ, got {s!r}")
        yy = int(s[:2])
        year = 2000 + yy if yy < 50 else 1900 + yy
        try:
            return cls(_dt.datetime(year, int(s[2:4]), int(s[4:6]), int(s[6:8]),
                                    int(s[8:10]), int(s[10:12]), tzinfo=_dt.timezone.utc))
        except ValueError as exc:
            raise DerError(f"invalid UTCTime {s!r}") from exc


@dataclass(frozen=True)
class GeneralizedTime:
    """YYYYMMDDHHMMSSZ, no fractional seconds."""

    when: _dt.datetime
    tag = TAG_GENERALIZED_TIME

    def __post_init__(self):
        object.__setattr__(self, "when", _utc(self.when))

    def content(self):
        return f"{self.when.year:04d}".encode() + self.when.strftime("%m%d%H%M%SZ").encode()

    @classmethod
    def from_content(cls, c):
        s = c.decode("ascii", "replace")
        if not re.fullmatch(r"\d{14}Z", s):
            raise NonCanonical(f"GeneralizedTime must be YYYYMMDDHHMMSSZ, got {s!r}")
        try:
            return cls(_dt.datetime(int(s[:4]), int(s[4:6]), int(s[6:8]), int(s[8:10]),
                                    int(s[10:12]), int(s[12:14]), tzinfo=_dt.timezone.utc))
        except ValueError as exc:
            raise DerError(f"invalid GeneralizedTime {s!r}") from exc


@dataclass(frozen=True)
class Sequence:
    items: tuple = ()
    tag = TAG_SEQUENCE

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))

    def __iter__(self):
        return iter(self.items)

    def __len__(self):
        return len(self.items)

    def __getitem__(self, i):
        return self.items[i]

    def content(self):
        return b"".join(encode_value(v) for v in self.items)

    @classmethod
    def from_content(cls, c):
        return cls(_decode_all(c))


@dataclass(frozen=True)
class Set:
    """SET OF; elements are kept sorted by their encodings."""

    items: tuple = ()
    tag = TAG_SET

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(sorted(self.items, key=encode_value)))

    def __iter__(self):
        return iter(self.items)

    def __len__(self):
        return len(self.items)

    def content(self):
        return b"".join(encode_value(v) for v in self.items)

    @classmethod
    def from_content(cls, c):
        items = _decode_all(c)
        encoded = [encode_value(v) for v in items]
        if encoded != sorted(encoded):
            raise NonCanonical("SET OF elements not in DER order")
        return cls(items)


@dataclass(frozen=True)
class Tagged:
    """Context-specific EXPLICIT tag ``[number]`` wrapping one value."""

    number: int
    inner: object = field(default=None)

    def __post_init__(self):
        if not 0 <= self.number < 31:
            raise UnsupportedTag("only low-form context tags are supported")

    @property
    def tag(self):
        return CONTEXT_CONSTRUCTED | self.number

    def content(self):
        return encode_value(self.inner)

    @classmethod
    def from_content_number(cls, number, c):
        items = _decode_all(c)
        if len(items) != 1:
            raise DerError("EXPLICIT tag must wrap exactly one value")
        return cls(number, items[0])


DerValue = Union[Boolean, Integer, BitString, OctetString, Null, ObjectIdentifier,
                 Utf8String, PrintableString, UtcTime, GeneralizedTime, Sequence, Set,
                 Tagged]

_BY_TAG = {cls.tag: cls for cls in (
    Boolean, Integer, BitString, OctetString, Null, ObjectIdentifier, Utf8String,
    PrintableString, UtcTime, GeneralizedTime, Sequence, Set)}


def encode_value(v) -> bytes:
    content = v.content()
    return bytes([v.tag]) + encode_length(len(content)) + content


def decode_value(data: bytes, offset: int = 0):
    """Decode one TLV at ``offset``; return ``(value, octets consumed)``."""
    data = bytes(data) if not isinstance(data, bytes) else data
    if offset >= len(data):
        raise DerError("truncated: no tag")
    tag = data[offset]
    if tag & 0x1F == 0x1F:
        raise UnsupportedTag(f"high-form tag {tag:#04x}")
    length, n_len = decode_length(data, offset + 1)
    start = offset + 1 + n_len
    end = start + length
    if end > len(data):
        raise DerError("truncated: content runs past end of input")
    content = data[start:end]
    if tag & 0xE0 == CONTEXT_CONSTRUCTED:
        return Tagged.from_content_number(tag & 0x1F, content), end - offset
    cls = _BY_TAG.get(tag)
    if cls is None:
        raise UnsupportedTag(f"unsupported tag {tag:#04x}")
    return cls.from_content(content), end - offset


def _decode_all(content: bytes) -> tuple:
    items, pos = [], 0
    while pos < len(content):
        value, used = decode_value(content, pos)
        items.append(value)
        pos += used
    return tuple(items)


def decode(data: bytes):
    """Decode exactly one value occupying all of ``data``."""
    value, used = decode_value(data)
    if used != len(data):
        raise DerError(f"{len(data) - used} trailing bytes after DER value")
    return value


def der_time(when: _dt.datetime):
    """UTCTime before 2050, GeneralizedTime from 2050 on."""
    when = _utc(when)
    return UtcTime(when) if when.year < 2050 else GeneralizedTime(when)
