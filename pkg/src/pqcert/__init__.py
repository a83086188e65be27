"""PKI toolkit: six textbook cryptosystems, DER/X.509 certificates, benchmarks."""

__version__ = "0.1.0"
