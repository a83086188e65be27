"""Distinguished names: ordered (attribute, value) pairs, one attribute per RDN."""

from dataclasses import dataclass
import re
from typing import Tuple

from .. import der
from ..der import Oid
from ..errors import InvalidCertificate

ATTRIBUTES = {
    "CN": Oid.parse("2.5.4.3"),
    "C": Oid.parse("2.5.4.6"),
    "L": Oid.parse("2.5.4.7"),
    "O": Oid.parse("2.5.4.10"),
    "OU": Oid.parse("2.5.4.11"),
}
SHORT_NAMES = {oid: name for name, oid in ATTRIBUTES.items()}
_COUNTRY = ATTRIBUTES["C"]


@dataclass(frozen=True)
class DistinguishedName:
    attributes: Tuple[Tuple[Oid, str], ...]

    def __post_init__(self):
        attrs = tuple((oid, str(value)) for oid, value in self.attributes)
        if not attrs:
            raise ValueError("distinguished name must not be empty")
        object.__setattr__(self, "attributes", attrs)

    @classmethod
    def parse(cls, text: str) -> "DistinguishedName":
        """``"CN=Root CA,O=Example,C=TW"``; a backslash escapes a comma."""
        attrs = []
        for part in re.split(r"(?<!\\),", text):
            part = part.strip()
            if not part:
                continue
            key, sep, value = part.partition("=")
            key = key.strip().upper()
            if not sep or key not in ATTRIBUTES:
                raise ValueError(f"bad name component {part!r}; use CN, O, OU, C or L")
            attrs.append((ATTRIBUTES[key], value.strip().replace("\\,", ",")))
        return cls(tuple(attrs))

    @classmethod
    def of(cls, **kwargs) -> "DistinguishedName":
        return cls(tuple((ATTRIBUTES[k], v) for k, v in kwargs.items()))

    def get(self, short: str):
        oid = ATTRIBUTES[short]
        return next((v for o, v in self.attributes if o == oid), None)

    def __str__(self):
        return ", ".join(f"{SHORT_NAMES.get(o, str(o))}={v.replace(',', chr(92) + ',')}"
                         for o, v in self.attributes)

    def to_der(self) -> der.Sequence:
        rdns = []
        for oid, value in self.attributes:
            text = der.PrintableString(value) if oid == _COUNTRY else der.Utf8String(value)
            rdns.append(der.Set([der.Sequence([der.ObjectIdentifier(oid), text])]))
        return der.Sequence(rdns)

    @classmethod
    def from_der(cls, value) -> "DistinguishedName":
        try:
            attrs = []
            for rdn in value:
                for atv in rdn:
                    oid, text = atv
                    attrs.append((oid.oid, text.text))
            return cls(tuple(attrs))
        except (TypeError, ValueError, AttributeError) as exc:
            raise InvalidCertificate("malformed Name") from exc
