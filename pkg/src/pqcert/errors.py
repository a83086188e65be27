"""Exception hierarchy shared by every subsystem.

Each class carries a short ``code`` string so callers (and the CLI) can
report the failure kind without matching on class names.
"""


class PkiError(Exception):
    code = "error"


class InvalidModulus(PkiError, ValueError):
    code = "invalid-modulus"


class NotInvertible(PkiError, ArithmeticError):
    code = "not-invertible"


class ParameterMismatch(PkiError, ValueError):
    code = "parameter-mismatch"


class SingularMatrix(PkiError, ArithmeticError):
    code = "singular-matrix"


class InvalidPoint(PkiError, ValueError):
    code = "invalid-point"


class InvalidParameters(PkiError, ValueError):
    code = "invalid-parameters"


class DigestOutOfRange(PkiError, ValueError):
    code = "digest-out-of-range"


class MessageOutOfRange(PkiError, ValueError):
    code = "message-out-of-range"


class InvalidMessage(PkiError, ValueError):
    code = "invalid-message"


class InvalidSignature(PkiError, ValueError):
    code = "invalid-signature"


class DecodeFailure(PkiError):
    code = "decode-failure"


class DerError(PkiError, ValueError):
    code = "malformed"


class NonCanonical(DerError):
    code = "non-canonical"


class MalformedOid(DerError):
    code = "malformed-oid"


class UnsupportedTag(DerError):
    code = "unsupported-tag"


class KeyEncodingError(PkiError, ValueError):
    code = "malformed-key"


class UnknownAlgorithm(PkiError, KeyError):
    code = "unknown-algorithm"

    def __str__(self):
        return Exception.__str__(self)


class UnsupportedSigner(PkiError):
    code = "unsupported-signer"


class InvalidValidity(PkiError, ValueError):
    code = "invalid-validity"


class ValidityViolation(PkiError, ValueError):
    code = "validity-violation"


class InvalidCertificate(PkiError, ValueError):
    code = "invalid-certificate"


class MalformedPem(PkiError, ValueError):
    code = "malformed-pem"


class UnsupportedScheme(PkiError):
    code = "unsupported-scheme"


class EmptyReport(PkiError, ValueError):
    code = "empty-report"
