"""Private key file envelope.

A key file is the DER encoding of::

    KeyFile ::= SEQUENCE {
        version    INTEGER (1),
        algorithm  OBJECT IDENTIFIER,   -- registry OID of the scheme
        secret     OCTET STRING,        -- scheme private-key encoding
        public     OCTET STRING }       -- scheme public-key encoding

This is a toolkit format, not PKCS#8, and the secret is not encrypted.
"""

from . import der
from .errors import KeyEncodingError, UnsupportedSigner
from .x509.registry import entry_for_scheme, registry_lookup
from .x509.schemes import KeyPair

VERSION = 1


def encode_keyfile(kp: KeyPair) -> bytes:
    entry = entry_for_scheme(kp.scheme)
    return der.encode_value(der.Sequence([
        der.Integer(VERSION), der.ObjectIdentifier(entry.oid),
        der.OctetString(kp.private_bytes()), der.OctetString(kp.public_bytes())]))


def decode_keyfile(data: bytes) -> KeyPair:
    try:
        version, alg, secret, public = der.decode(data)
        if not (isinstance(version, der.Integer) and version.value == VERSION):
            raise KeyEncodingError("unsupported key file version")
        entry = registry_lookup(alg.oid)
        secret, public = secret.data, public.data
    except (der.DerError, TypeError, ValueError, AttributeError) as exc:
        if isinstance(exc, KeyEncodingError):
            raise
        raise KeyEncodingError(f"malformed key file: {exc}") from exc
    if not entry.bound:
        raise UnsupportedSigner(f"{entry.label()} keys are not supported")
    kp = entry.scheme_binding.decode_private(secret)
    if kp.public_bytes() != public:
        raise KeyEncodingError("public part does not match the private key")
    return kp
