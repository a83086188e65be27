"""OID registry: signature algorithms, their parameter sets and quantum-security level.

The first fourteen rows are the standard algorithm/parameter OIDs. RSA and
ECDSA rows are bound to this toolkit's textbook implementations; Falcon,
Dilithium and SPHINCS+ are recognized (displayable) but cannot sign here.
Toolkit-native schemes live under the experimental arc 1.3.9999.9.
"""

from dataclasses import dataclass
import enum
from typing import Optional

from ..der import Oid
from ..errors import UnknownAlgorithm
from . import schemes as S


class SecurityLevel(enum.Enum):
    INSECURE = "insecure"
    LEVEL1 = "level1"
    LEVEL2 = "level2"
    LEVEL3 = "level3"
    LEVEL5 = "level5"
    UNRATED = "unrated"

    def describe(self) -> str:
        if self is SecurityLevel.INSECURE:
            return "insecure"
        if self is SecurityLevel.UNRATED:
            return "unrated (toy parameters)"
        return f"quantum security level {self.value[-1]}"


@dataclass(frozen=True)
class RegistryEntry:
    oid: Oid
    algorithm: str
    params: str
    quantum_security_level: SecurityLevel
    alias: str
    scheme_binding: Optional[S.Scheme] = None

    @property
    def bound(self) -> bool:
        return self.scheme_binding is not None

    @property
    def can_sign(self) -> bool:
        return self.bound and self.scheme_binding.can_sign

    def label(self) -> str:
        return f"{self.algorithm} ({self.params})"


L = SecurityLevel

_ROWS = [
    ("1.2.840.113549.1.1.11", "RSA", "2048 and SHA256", L.INSECURE, "rsa-2048", S.RSA_2048),
    ("1.2.840.113549.1.1.12", "RSA", "3072 and SHA384", L.INSECURE, "rsa-3072", S.RSA_3072),
    ("1.2.840.113549.1.1.13", "RSA", "4096 and SHA512", L.INSECURE, "rsa-4096", S.RSA_4096),
    ("1.2.840.10045.4.3.2", "ECDSA", "P-256 and SHA256", L.INSECURE, "ecdsa-p256", S.ECDSA_P256),
    ("1.2.840.10045.4.3.3", "ECDSA", "P-384 and SHA384", L.INSECURE, "ecdsa-p384", S.ECDSA_P384),
    ("1.2.840.10045.4.3.4", "ECDSA", "P-521 and SHA512", L.INSECURE, "ecdsa-p521", S.ECDSA_P521),
    ("1.3.9999.3.1", "Falcon", "512", L.LEVEL1, "falcon-512", None),
    ("1.3.9999.3.4", "Falcon", "1024", L.LEVEL5, "falcon-1024", None),
    ("1.3.6.1.4.1.2.267.7.4.4", "Dilithium", "2", L.LEVEL2, "dilithium2", None),
    ("1.3.6.1.4.1.2.267.7.6.5", "Dilithium", "3", L.LEVEL3, "dilithium3", None),
    ("1.3.6.1.4.1.2.267.7.8.7", "Dilithium", "5", L.LEVEL5, "dilithium5", None),
    ("1.3.9999.6.4.4", "SPHINCS+", "shake_128f", L.LEVEL1, "sphincs-shake-128f", None),
    ("1.3.9999.6.5.3", "SPHINCS+", "shake_192f", L.LEVEL3, "sphincs-shake-192f", None),
    ("1.3.9999.6.6.3", "SPHINCS+", "shake_256f", L.LEVEL5, "sphincs-shake-256f", None),
    # toolkit-native
    (str(S.OID_WOTSC), "WOTS-C", "w=16, SHA-256", L.UNRATED, "wots-c", S.WOTSC),
    (str(S.OID_MI), "Matsumoto-Imai", "k=13, t1=5", L.UNRATED, "mi-k13", S.MI_K13),
    (str(S.OID_NTRU), "NTRU", "N=11, b1=3, b2=32", L.UNRATED, "ntru-11-3-32", S.NTRU_11),
    (str(S.OID_MCELIECE), "McEliece", "Hamming(7,4), t=1", L.UNRATED, "mceliece-hamming74",
     S.MCELIECE),
]

STANDARD_COUNT = 14

REGISTRY = {}
ALIASES = {}
for _oid, _alg, _params, _level, _alias, _scheme in _ROWS:
    _entry = RegistryEntry(Oid.parse(_oid), _alg, _params, _level, _alias, _scheme)
    REGISTRY[_entry.oid] = _entry
    ALIASES[_alias] = _entry
ALIASES.update({"wotsc": ALIASES["wots-c"], "mi": ALIASES["mi-k13"],
                "ntru": ALIASES["ntru-11-3-32"], "mceliece": ALIASES["mceliece-hamming74"]})

# Public-key algorithm OIDs that appear in SPKIs but are not signature algorithms.
KEY_ALGORITHMS = {
    S.OID_RSA_ENCRYPTION: "rsaEncryption",
    S.OID_EC_PUBLIC_KEY: "id-ecPublicKey",
}
CURVE_NAMES = {
    Oid.parse("1.2.840.10045.3.1.7"): "P-256",
    Oid.parse("1.3.132.0.34"): "P-384",
    Oid.parse("1.3.132.0.35"): "P-521",
}


def standard_entries():
    return list(REGISTRY.values())[:STANDARD_COUNT]


def registry_lookup(oid) -> RegistryEntry:
    if isinstance(oid, str):
        oid = Oid.parse(oid)
    try:
        return REGISTRY[oid]
    except KeyError:
        raise UnknownAlgorithm(f"unknown algorithm OID {oid}") from None


def resolve(name_or_oid: str) -> RegistryEntry:
    """Alias (``ecdsa-p256``) or dotted OID to its registry entry."""
    key = name_or_oid.strip().lower()
    if key in ALIASES:
        return ALIASES[key]
    if key[:1].isdigit():
        return registry_lookup(key)
    raise UnknownAlgorithm(f"unknown algorithm {name_or_oid!r}")


def entry_for_scheme(scheme: S.Scheme) -> RegistryEntry:
    for entry in REGISTRY.values():
        if entry.scheme_binding is scheme:
            return entry
    raise UnknownAlgorithm(f"scheme {scheme.name} is not registered")


def key_algorithm_label(alg) -> str:
    """Human-readable name of an SPKI AlgorithmIdentifier."""
    if alg.oid in KEY_ALGORITHMS:
        label = KEY_ALGORITHMS[alg.oid]
        curve = getattr(alg.params, "oid", None)
        if curve in CURVE_NAMES:
            label += f" ({CURVE_NAMES[curve]})"
        return f"{label} [{alg.oid}]"
    if alg.oid in REGISTRY:
        return f"{REGISTRY[alg.oid].label()} [{alg.oid}]"
    return f"{alg.oid} (unrecognized)"

