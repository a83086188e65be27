"""Quantum-vulnerable schemes: textbook RSA and point-comparing ECDSA."""

from .rsa import RsaKeyPair, rsa_keygen, rsa_sign, rsa_verify
from .ecdsa import (EcdsaKeyPair, EcdsaSignature, ecdsa_keygen, ecdsa_sign,
                    ecdsa_verify)

__all__ = ["RsaKeyPair", "rsa_keygen", "rsa_sign", "rsa_verify",
           "EcdsaKeyPair", "EcdsaSignature", "ecdsa_keygen", "ecdsa_sign", "ecdsa_verify"]
