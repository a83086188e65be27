"""Post-quantum families at desk scale: hash chains, MI, NTRU, McEliece."""

from .wots import (WotscKeyPair, WotsKeyPair, wots_keygen, wots_sign, wots_verify,
                   wotsc_keygen, wotsc_sign, wotsc_verify)
from .mi import MiKeyPair, MiPublicKey, mi_keygen, mi_sign, mi_verify
from .ntru import NtruKeyPair, NtruParams, ntru_decrypt, ntru_encrypt, ntru_keygen
from .mceliece import McElieceKeyPair, mceliece_decrypt, mceliece_encrypt, mceliece_keygen

__all__ = [
    "WotscKeyPair", "WotsKeyPair", "wots_keygen", "wots_sign", "wots_verify",
    "wotsc_keygen", "wotsc_sign", "wotsc_verify",
    "MiKeyPair", "MiPublicKey", "mi_keygen", "mi_sign", "mi_verify",
    "NtruKeyPair", "NtruParams", "ntru_decrypt", "ntru_encrypt", "ntru_keygen",
    "McElieceKeyPair", "mceliece_decrypt", "mceliece_encrypt", "mceliece_keygen",
]
