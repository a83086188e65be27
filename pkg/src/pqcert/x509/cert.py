"""X.509 v3 certificates: model, DER codec, signing, issuance and verification."""

from dataclasses import dataclass, field
import datetime as dt
import hashlib
import random
from typing import Optional

from .. import der
from ..errors import (DerError, InvalidCertificate, InvalidParameters, InvalidValidity,
                      PkiError, UnknownAlgorithm, UnsupportedSigner, ValidityViolation)
from .names import DistinguishedName
from .registry import entry_for_scheme, registry_lookup
from .schemes import AlgorithmIdentifier, KeyPair

UTC = dt.timezone.utc
MAX_SERIAL_OCTETS = 20


def _utc(when: dt.datetime) -> dt.datetime:
    if when.tzinfo is None:
        when = when.replace(tzinfo=UTC)
    return when.astimezone(UTC).replace(microsecond=0)


def utcnow() -> dt.datetime:
    return _utc(dt.datetime.now(UTC))


@dataclass(frozen=True)
class Validity:
    not_before: dt.datetime
    not_after: dt.datetime

    def __post_init__(self):
        object.__setattr__(self, "not_before", _utc(self.not_before))
        object.__setattr__(self, "not_after", _utc(self.not_after))
        if not self.not_before < self.not_after:
            raise InvalidValidity("not_before must precede not_after")

    @classmethod
    def days(cls, n: int, start: Optional[dt.datetime] = None) -> "Validity":
        start = _utc(start) if start is not None else utcnow()
        return cls(start, start + dt.timedelta(days=n))

    def contains(self, when: dt.datetime) -> bool:
        return self.not_before <= _utc(when) <= self.not_after

    def within(self, outer: "Validity") -> bool:
        return outer.not_before <= self.not_before and self.not_after <= outer.not_after


@dataclass(frozen=True)
class SubjectPublicKeyInfo:
    algorithm: AlgorithmIdentifier
    public_key: bytes

    def to_der(self):
        return der.Sequence([self.algorithm.to_der(), der.BitString(self.public_key)])

    @classmethod
    def from_der(cls, value):
        try:
            alg, bits = value
        except (TypeError, ValueError) as exc:
            raise InvalidCertificate("malformed SubjectPublicKeyInfo") from exc
        if not isinstance(bits, der.BitString) or bits.unused:
            raise InvalidCertificate("SPKI key must be a whole-octet BIT STRING")
        return cls(AlgorithmIdentifier.from_der(alg), bits.data)

    @classmethod
    def of(cls, keypair: KeyPair) -> "SubjectPublicKeyInfo":
        return cls(keypair.key_algorithm, keypair.public_bytes())


def check_serial(serial: int):
    if serial <= 0:
        raise InvalidParameters("serial number must be positive")
    if len(der.Integer(serial).content()) > MAX_SERIAL_OCTETS:
        raise InvalidParameters("serial number longer than 20 octets")


def random_serial(rng: random.Random) -> int:
    """16 random bytes with the top bit cleared (never zero)."""
    while True:
        serial = int.from_bytes(rng.randbytes(16), "big") & ~(1 << 127)
        if serial:
            return serial


@dataclass(frozen=True)
class TbsCertificate:
    serial: int
    signature_alg: AlgorithmIdentifier
    issuer: DistinguishedName
    validity: Validity
    subject: DistinguishedName
    spki: SubjectPublicKeyInfo
    version: int = 3

    def __post_init__(self):
        check_serial(self.serial)
        if self.version != 3:
            raise InvalidCertificate("only v3 certificates are supported")

    def to_der(self):
        return der.Sequence([
            der.Tagged(0, der.Integer(self.version - 1)),
            der.Integer(self.serial),
            self.signature_alg.to_der(),
            self.issuer.to_der(),
            der.Sequence([der.der_time(self.validity.not_before),
                          der.der_time(self.validity.not_after)]),
            self.subject.to_der(),
            self.spki.to_der(),
        ])

    def encode(self) -> bytes:
        return der.encode_value(self.to_der())

    @classmethod
    def from_der(cls, value):
        try:
            version, serial, alg, issuer, validity, subject, spki = value
            if not (isinstance(version, der.Tagged) and version.number == 0
                    and isinstance(version.inner, der.Integer)):
                raise InvalidCertificate("missing [0] version")
            if not isinstance(serial, der.Integer):
                raise InvalidCertificate("serial is not an INTEGER")
            nb, na = validity
            if not all(isinstance(t, (der.UtcTime, der.GeneralizedTime)) for t in (nb, na)):
                raise InvalidCertificate("validity times have the wrong type")
            for t in (nb, na):
                if type(t) is not type(der.der_time(t.when)):
                    raise InvalidCertificate("time encoded with the wrong ASN.1 type")
            return cls(
                serial=serial.value,
                signature_alg=AlgorithmIdentifier.from_der(alg),
                issuer=DistinguishedName.from_der(issuer),
                validity=Validity(nb.when, na.when),
                subject=DistinguishedName.from_der(subject),
                spki=SubjectPublicKeyInfo.from_der(spki),
                version=version.inner.value + 1,
            )
        except (TypeError, ValueError) as exc:
            if isinstance(exc, PkiError):
                raise InvalidCertificate(str(exc)) from exc
            raise InvalidCertificate("malformed TBSCertificate") from exc


@dataclass(frozen=True)
class Certificate:
    tbs: TbsCertificate
    signature_alg: AlgorithmIdentifier
    signature: bytes
    tbs_der: bytes = field(default=b"", repr=False)

    def __post_init__(self):
        if not self.tbs_der:
            object.__setattr__(self, "tbs_der", self.tbs.encode())

    def to_der(self):
        return der.Sequence([der.decode(self.tbs_der), self.signature_alg.to_der(),
                             der.BitString(self.signature)])

    def encode(self) -> bytes:
        return der.encode_value(self.to_der())

    @classmethod
    def decode(cls, data: bytes) -> "Certificate":
        value = der.decode(data)
        if not isinstance(value, der.Sequence) or len(value) != 3:
            raise InvalidCertificate("certificate must be a 3-element SEQUENCE")
        tbs_value, alg, sig = value
        if not isinstance(sig, der.BitString) or sig.unused:
            raise InvalidCertificate("signature must be a whole-octet BIT STRING")
        return cls(TbsCertificate.from_der(tbs_value), AlgorithmIdentifier.from_der(alg),
                   sig.data, der.encode_value(tbs_value))

    @property
    def subject(self):
        return self.tbs.subject

    @property
    def issuer(self):
        return self.tbs.issuer

    @property
    def validity(self):
        return self.tbs.validity

    @property
    def spki(self):
        return self.tbs.spki

    def __len__(self):
        return len(self.encode())


def signature_algorithm(keypair: KeyPair) -> AlgorithmIdentifier:
    entry = entry_for_scheme(keypair.scheme)
    if not entry.can_sign:
        raise UnsupportedSigner(f"{entry.label()} cannot sign certificates")
    # RSA signature AlgorithmIdentifiers carry NULL parameters; the others omit them.
    params = der.Null() if entry.algorithm == "RSA" else None
    return AlgorithmIdentifier(entry.oid, params)


def _check_alg(keypair: KeyPair, alg: Optional[AlgorithmIdentifier]) -> AlgorithmIdentifier:
    expected = signature_algorithm(keypair)
    if alg is None:
        return expected
    entry = registry_lookup(alg.oid)
    if not entry.can_sign:
        raise UnsupportedSigner(f"{entry.label()} has no native implementation")
    if alg.oid != expected.oid:
        raise InvalidParameters(f"key of {keypair.scheme.name} cannot sign as {entry.label()}")
    return expected


def _signed(tbs: TbsCertificate, keypair: KeyPair, rng) -> Certificate:
    tbs_der = tbs.encode()
    sig = keypair.scheme.sign(keypair.key, tbs_der, rng)
    return Certificate(tbs, tbs.signature_alg, sig, tbs_der)


def self_sign(subject: DistinguishedName, keypair: KeyPair,
              alg: Optional[AlgorithmIdentifier] = None, validity: Validity = None,
              serial: Optional[int] = None, rng: random.Random = None) -> Certificate:
    """Root CA certificate: issuer == subject, signed by its own key."""
    rng = rng or random.SystemRandom()
    alg = _check_alg(keypair, alg)
    validity = validity or Validity.days(365)
    serial = random_serial(rng) if serial is None else serial
    tbs = TbsCertificate(serial, alg, subject, validity, subject,
                         SubjectPublicKeyInfo.of(keypair))
    return _signed(tbs, keypair, rng)


def issue(ca_key: KeyPair, ca_cert: Certificate, subject: DistinguishedName,
          subject_spki, validity: Validity = None, serial: Optional[int] = None,
          rng: random.Random = None, enforce_validity: bool = True) -> Certificate:
    """End-entity certificate signed by the CA; any registered key type may be certified."""
    rng = rng or random.SystemRandom()
    if isinstance(subject_spki, KeyPair):
        subject_spki = SubjectPublicKeyInfo.of(subject_spki)
    if SubjectPublicKeyInfo.of(ca_key) != ca_cert.spki:
        raise InvalidParameters("CA key does not match the CA certificate's public key")
    alg = signature_algorithm(ca_key)
    validity = validity or Validity.days(365)
    if enforce_validity and not validity.within(ca_cert.validity):
        raise ValidityViolation("end-entity validity exceeds the CA certificate's window")
    serial = random_serial(rng) if serial is None else serial
    tbs = TbsCertificate(serial, alg, ca_cert.subject, validity, subject, subject_spki)
    return _signed(tbs, ca_key, rng)


@dataclass
class VerificationReport:
    checks: dict
    details: dict

    @property
    def valid(self) -> bool:
        return all(self.checks.values())

    def __bool__(self):
        return self.valid

    def __str__(self):
        lines = []
        for name, ok in self.checks.items():
            note = self.details.get(name)
            lines.append(f"{name}: {'pass' if ok else 'FAIL'}" + (f" ({note})" if note else ""))
        lines.append(f"overall: {'valid' if self.valid else 'INVALID'}")
        return "\n".join(lines)


def verify_cert(cert: Certificate, issuer_cert: Certificate,
                now: Optional[dt.datetime] = None) -> VerificationReport:
    """Independent checks; a failure is recorded in the report, never raised."""
    now = _utc(now) if now is not None else utcnow()
    checks, details = {}, {}

    try:
        entry = registry_lookup(cert.signature_alg.oid)
        checks["algorithm_recognized"] = True
        details["algorithm_recognized"] = entry.label()
    except UnknownAlgorithm:
        entry = None
        checks["algorithm_recognized"] = False
        details["algorithm_recognized"] = f"{cert.signature_alg.oid} not in registry"

    sig_ok = False
    if cert.tbs.signature_alg != cert.signature_alg:
        details["signature_valid"] = "inner and outer signature algorithms differ"
    elif entry is None:
        details["signature_valid"] = "unknown algorithm"
    elif not entry.can_sign:
        details["signature_valid"] = f"{entry.label()} has no native verifier"
    elif issuer_cert.spki.algorithm != entry.scheme_binding.key_algorithm:
        details["signature_valid"] = "issuer key type does not match the signature algorithm"
    else:
        try:
            sig_ok = entry.scheme_binding.verify(issuer_cert.spki.public_key, cert.tbs_der,
                                                 cert.signature)
        except (PkiError, ValueError, ArithmeticError) as exc:
            details["signature_valid"] = f"verifier error: {exc}"
    checks["signature_valid"] = bool(sig_ok)

    checks["within_validity"] = cert.validity.contains(now)
    if not checks["within_validity"]:
        details["within_validity"] = f"{now.isoformat()} outside validity window"

    checks["issuer_name_matches"] = cert.issuer == issuer_cert.subject
    if not checks["issuer_name_matches"]:
        details["issuer_name_matches"] = f"issuer {cert.issuer} != {issuer_cert.subject}"
    return VerificationReport(checks, details)


def fingerprint(cert: Certificate) -> str:
    """SHA-256 over the full DER, lowercase hex pairs joined by colons."""
    return hashlib.sha256(cert.encode()).digest().hex(":")


def load_der(data: bytes) -> Certificate:
    try:
        return Certificate.decode(data)
    except DerError as exc:
        raise InvalidCertificate(f"bad certificate DER: {exc}") from exc
