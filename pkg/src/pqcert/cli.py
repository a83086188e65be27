"""Command-line front end.

Exit codes: 0 success, 1 verification failed, 2 usage error, 3 I/O or format error.
"""

import argparse
import datetime as dt
import sys

from . import __version__
from .bench import DEFAULT_SUBJECT, BenchConfig, report_emit, run_suite
from .errors import (InvalidParameters, InvalidValidity, PkiError, UnknownAlgorithm,
                     UnsupportedScheme, UnsupportedSigner, ValidityViolation)
from .keyfile import decode_keyfile, encode_keyfile
from .rng import make_rng
from .x509.cert import UTC, Validity, issue, load_der, self_sign, utcnow, verify_cert
from .x509.display import inspect
from .x509.names import DistinguishedName
from .x509.pem import decode_pem, encode_pem, looks_like_pem
from .x509.registry import ALIASES, resolve

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


class FormatError(Exception):
    pass


def _read(path) -> bytes:
    with open(path, "rb") as fh:
        return fh.read()


def _write(path, data):
    if isinstance(data, str):
        data = data.encode()
    if path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
        return
    with open(path, "wb") as fh:
        fh.write(data)


def _load_cert(path):
    data = _read(path)
    try:
        if looks_like_pem(data):
            return decode_pem(data.decode("ascii", "replace"))
        return load_der(data)
    except PkiError as exc:
        raise FormatError(f"{path}: {exc}") from exc


def _load_key(path):
    try:
        return decode_keyfile(_read(path))
    except (UnsupportedSigner, UnknownAlgorithm) as exc:
        raise UsageError(f"{path}: {exc}") from exc
    except PkiError as exc:
        raise FormatError(f"{path}: {exc}") from exc


def _rng(args):
    if args.seed is None:
        return make_rng(None)
    try:
        return make_rng(bytes.fromhex(args.seed))
    except ValueError:
        raise UsageError("--seed must be hexadecimal") from None


def _parse_time(text):
    try:
        when = dt.datetime.fromisoformat(text.replace("Z", "+00:00"))
    except ValueError:
        raise UsageError(f"bad timestamp {text!r}; use ISO 8601") from None
    return when if when.tzinfo else when.replace(tzinfo=UTC)


def _validity(args):
    if args.not_before:
        start = _parse_time(args.not_before)
    elif args.seed is not None:
        # Deterministic runs pin the start to midnight UTC so reruns are byte-identical.
        start = utcnow().replace(hour=0, minute=0, second=0)
    else:
        start = utcnow()
    if args.days < 1:
        raise UsageError("--days must be >= 1")
    return Validity.days(args.days, start)


def _subject(text):
    try:
        return DistinguishedName.parse(text)
    except ValueError as exc:
        raise UsageError(f"--subject: {exc}") from None


def _emit_cert(cert, args):
    _write(args.out, encode_pem(cert) if args.format == "pem" else cert.encode())


# --- subcommands -----------------------------------------------------------

def cmd_keygen(args):
    try:
        entry = resolve(args.alg)
    except UnknownAlgorithm as exc:
        raise UsageError(str(exc)) from None
    if not entry.bound:
        raise UsageError(f"{entry.label()} has no native implementation in this toolkit")
    kp = entry.scheme_binding.keygen(_rng(args))
    _write(args.out, encode_keyfile(kp))
    print(f"wrote {entry.alias} key ({entry.oid}) to {args.out}", file=sys.stderr)
    return EXIT_OK


def cmd_selfsign(args):
    kp = _load_key(args.key)
    rng = _rng(args)
    try:
        cert = self_sign(_subject(args.subject), kp, validity=_validity(args),
                         serial=args.serial, rng=rng)
    except (UnsupportedSigner, InvalidParameters, InvalidValidity) as exc:
        raise UsageError(str(exc)) from None
    _emit_cert(cert, args)
    return EXIT_OK


def cmd_issue(args):
    ca_key = _load_key(args.ca_key)
    ca_cert = _load_cert(args.ca_cert)
    subject_key = _load_key(args.key)
    rng = _rng(args)
    try:
        cert = issue(ca_key, ca_cert, _subject(args.subject), subject_key,
                     validity=_validity(args), serial=args.serial, rng=rng,
                     enforce_validity=not args.allow_outside_ca_validity)
    except (UnsupportedSigner, InvalidParameters, InvalidValidity, ValidityViolation) as exc:
        raise UsageError(str(exc)) from None
    _emit_cert(cert, args)
    return EXIT_OK


def cmd_verify_cert(args):
    cert = _load_cert(args.cert)
    ca = _load_cert(args.ca)
    now = _parse_time(args.at) if args.at else None
    report = verify_cert(cert, ca, now)
    print(report)
    return EXIT_OK if report.valid else EXIT_INVALID


def cmd_inspect(args):
    print(inspect(_load_cert(args.cert)))
    return EXIT_OK


def cmd_sign(args):
    kp = _load_key(args.key)
    if not kp.scheme.can_sign:
        raise UsageError(f"{kp.scheme.name} keys cannot sign")
    _write(args.out, kp.scheme.sign(kp.key, _read(args.infile), _rng(args)))
    return EXIT_OK


def cmd_verify(args):
    kp = _load_key(args.key)
    if not kp.scheme.can_sign:
        raise UsageError(f"{kp.scheme.name} keys cannot verify signatures")
    ok = kp.scheme.verify(kp.public_bytes(), _read(args.infile), _read(args.sig))
    print("signature valid" if ok else "signature INVALID")
    return EXIT_OK if ok else EXIT_INVALID


def cmd_bench(args):
    try:
        if args.config:
            config = BenchConfig.from_json(args.config)
        else:
            config = BenchConfig(schemes=args.schemes, iterations=args.iterations,
                                 warmup=args.warmup, message_size=args.message_size,
                                 subject_profile=args.subject, seed=args.seed)
        config.entries()
    except (ValueError, TypeError, UnsupportedScheme) as exc:
        raise UsageError(str(exc)) from None
    rows = run_suite(config, progress=lambda m: print(m, file=sys.stderr))
    _write(args.out, report_emit(rows, args.report))
    return EXIT_OK


# --- parser ----------------------------------------------------------------

def _add_seed(p):
    p.add_argument("--seed", metavar="HEX", help="deterministic mode: seed all randomness")


def _add_cert_out(p):
    p.add_argument("--subject", required=True, help='e.g. "CN=Root CA,O=Example,C=TW"')
    p.add_argument("--days", type=int, default=365, help="validity period (default 365)")
    p.add_argument("--not-before", help="ISO 8601 start of validity (default now)")
    p.add_argument("--serial", type=int, help="serial number (default 16 random bytes)")
    p.add_argument("--out", required=True, help="output path ('-' for stdout)")
    p.add_argument("--format", choices=("der", "pem"), default="der")
    _add_seed(p)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pqcert", description="X.509 toolkit for classical and post-quantum schemes.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("keygen", help="generate a key pair")
    p.add_argument("--alg", required=True,
                   help="registry OID or alias: " + ", ".join(sorted(ALIASES)))
    p.add_argument("--out", required=True, help="key file to write")
    _add_seed(p)
    p.set_defaults(func=cmd_keygen)

    p = sub.add_parser("cert-selfsign", help="create a self-signed root certificate")
    p.add_argument("--key", required=True, help="key file of the root")
    _add_cert_out(p)
    p.set_defaults(func=cmd_selfsign)

    p = sub.add_parser("cert-issue", help="issue an end-entity certificate")
    p.add_argument("--ca-key", required=True, help="CA key file")
    p.add_argument("--ca-cert", required=True, help="CA certificate")
    p.add_argument("--key", required=True, help="key file whose public key is certified")
    p.add_argument("--allow-outside-ca-validity", action="store_true",
                   help="do not require the validity to lie within the CA's")
    _add_cert_out(p)
    p.set_defaults(func=cmd_issue)

    p = sub.add_parser("cert-verify", help="verify a certificate against its issuer")
    p.add_argument("--cert", required=True, help="certificate to check")
    p.add_argument("--ca", "--ca-cert", dest="ca", required=True, help="issuer certificate")
    p.add_argument("--at", help="ISO 8601 verification time (default now)")
    p.set_defaults(func=cmd_verify_cert)

    p = sub.add_parser("cert-inspect", help="print certificate fields")
    p.add_argument("--cert", required=True, help="certificate (DER or PEM)")
    p.set_defaults(func=cmd_inspect)

    p = sub.add_parser("sign", help="sign a file")
    p.add_argument("--key", required=True, help="signing key file")
    p.add_argument("--in", dest="infile", required=True, help="message file")
    p.add_argument("--out", required=True, help="signature file")
    _add_seed(p)
    p.set_defaults(func=cmd_sign)

    p = sub.add_parser("verify", help="verify a file signature")
    p.add_argument("--key", required=True, help="key file (its public part is used)")
    p.add_argument("--in", dest="infile", required=True, help="message file")
    p.add_argument("--sig", required=True, help="signature file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="certificate length and timing benchmark")
    p.add_argument("--schemes", default="all", help="'all' or comma-separated names/OIDs")
    p.add_argument("--iterations", type=int, default=10)
    p.add_argument("--warmup", type=int, default=1)
    p.add_argument("--message-size", type=int, default=1024, help="bytes (default 1024)")
    p.add_argument("--subject", default=DEFAULT_SUBJECT, help="root certificate subject")
    p.add_argument("--report", choices=("csv", "md"), default="md")
    p.add_argument("--out", default="-", help="report path (default stdout)")
    p.add_argument("--config", help="JSON file with BenchConfig fields")
    _add_seed(p)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"pqcert: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, FormatError, PkiError) as exc:
        print(f"pqcert: error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
