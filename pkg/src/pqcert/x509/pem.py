"""PEM armor for certificates."""

import base64
import binascii
import re

from ..errors import MalformedPem
from .cert import Certificate, load_der

BEGIN = "-----BEGIN CERTIFICATE-----"
END = "-----END CERTIFICATE-----"


def der_to_pem(data: bytes, label: str = "CERTIFICATE") -> str:
    body = base64.b64encode(data).decode("ascii")
    lines = [body[i:i + 64] for i in range(0, len(body), 64)]
    return "\n".join([f"-----BEGIN {label}-----", *lines, f"-----END {label}-----"]) + "\n"


def pem_to_der(text: str, label: str = "CERTIFICATE") -> bytes:
    m = re.search(rf"-----BEGIN {label}-----(.*?)-----END {label}-----", text, re.S)
    if m is None:
        raise MalformedPem(f"missing BEGIN/END {label} armor")
    body = re.sub(r"\s+", "", m.group(1))
    try:
        return base64.b64decode(body, validate=True)
    except (binascii.Error, ValueError) as exc:
        raise MalformedPem("invalid base64 body") from exc


def encode_pem(cert: Certificate) -> str:
    return der_to_pem(cert.encode())


def decode_pem(text: str) -> Certificate:
    return load_der(pem_to_der(text))


def looks_like_pem(data: bytes) -> bool:
    return data.lstrip().startswith(b"-----BEGIN")
