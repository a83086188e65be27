"""Certificates, the algorithm registry and scheme bindings."""

from .schemes import AlgorithmIdentifier, KeyPair, Scheme
from .registry import (ALIASES, REGISTRY, RegistryEntry, SecurityLevel, registry_lookup,
                       resolve, standard_entries)
from .names import DistinguishedName
from .cert import (Certificate, SubjectPublicKeyInfo, TbsCertificate, Validity,
                   VerificationReport, fingerprint, issue, load_der, self_sign, verify_cert)
from .pem import decode_pem, encode_pem
from .display import inspect

__all__ = [
    "AlgorithmIdentifier", "KeyPair", "Scheme",
    "ALIASES", "REGISTRY", "RegistryEntry", "SecurityLevel", "registry_lookup", "resolve",
    "standard_entries", "DistinguishedName",
    "Certificate", "SubjectPublicKeyInfo", "TbsCertificate", "Validity", "VerificationReport",
    "fingerprint", "issue", "load_der", "self_sign", "verify_cert",
    "decode_pem", "encode_pem", "inspect",
]
