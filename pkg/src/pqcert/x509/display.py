"""Human-readable certificate rendering."""

from ..errors import UnknownAlgorithm
from .cert import Certificate, fingerprint
from .registry import key_algorithm_label, registry_lookup


def describe_algorithm(oid) -> str:
    try:
        entry = registry_lookup(oid)
    except UnknownAlgorithm:
        return f"{oid} (unrecognized)"
    return f"{oid} {entry.label()}, {entry.quantum_security_level.describe()}"


def _hex_excerpt(data: bytes, n: int = 16) -> str:
    head = data[:n].hex(":")
    return head + (f":... ({len(data)} bytes)" if len(data) > n else f" ({len(data)} bytes)")


def inspect(cert: Certificate) -> str:
    tbs = cert.tbs
    return "\n".join([
        "Certificate:",
        f"  Version: v{tbs.version}",
        f"  Serial Number: {tbs.serial:#x}",
        f"  Signature Algorithm: {describe_algorithm(cert.signature_alg.oid)}",
        f"  Issuer: {tbs.issuer}",
        f"  Subject: {tbs.subject}",
        "  Validity:",
        f"    Not Before: {tbs.validity.not_before:%Y-%m-%d %H:%M:%S} UTC",
        f"    Not After:  {tbs.validity.not_after:%Y-%m-%d %H:%M:%S} UTC",
        "  Subject Public Key Info:",
        f"    Algorithm: {key_algorithm_label(tbs.spki.algorithm)}",
        f"    Public Key: {_hex_excerpt(tbs.spki.public_key)}",
        f"  Signature: {_hex_excerpt(cert.signature)}",
        f"  Length: {len(cert.encode())} bytes",
        f"  Fingerprint (SHA-256): {fingerprint(cert)}",
    ])
