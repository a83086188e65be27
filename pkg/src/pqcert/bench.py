"""Certificate length and keygen / cert-generation / sign / verify timing.

Each scheme gets ``warmup + iterations`` rounds. One round times a bare key
generation, a certificate generation (fresh keygen plus self-signing, the two
steps that make up producing a root certificate), and one sign and one verify
of a fixed random message. Warmup rounds run but are not recorded.
"""

from dataclasses import asdict, dataclass, field, fields
import csv
import io
import json
import statistics
import time
from typing import List, Optional

from .errors import EmptyReport, UnknownAlgorithm, UnsupportedScheme
from .rng import make_rng
from .x509.cert import Validity, self_sign, utcnow
from .x509.names import DistinguishedName
from .x509.registry import REGISTRY, resolve

DEFAULT_SUBJECT = ("C=TW,O=Example Telecom Co.,OU=Information Security Laboratory,"
                   "L=Taipei,CN=Example Root CA")


@dataclass
class BenchConfig:
    schemes: List[str] = field(default_factory=lambda: ["all"])
    iterations: int = 10
    warmup: int = 1
    message_size: int = 1024
    subject_profile: str = DEFAULT_SUBJECT
    seed: Optional[str] = None

    def __post_init__(self):
        if isinstance(self.schemes, str):
            self.schemes = [s for s in self.schemes.split(",") if s.strip()]
        if self.iterations < 1:
            raise ValueError("iterations must be >= 1")
        if self.warmup < 0:
            raise ValueError("warmup must be >= 0")

    @classmethod
    def from_dict(cls, data: dict) -> "BenchConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        return cls(**data)

    @classmethod
    def from_json(cls, path) -> "BenchConfig":
        with open(path, encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))

    def entries(self):
        if any(s.lower() == "all" for s in self.schemes):
            return [e for e in REGISTRY.values() if e.can_sign]
        out = []
        for name in self.schemes:
            try:
                entry = resolve(name)
            except UnknownAlgorithm as exc:
                raise UnsupportedScheme(str(exc)) from exc
            if not entry.can_sign:
                raise UnsupportedScheme(f"{entry.label()} cannot be benchmarked as a signer")
            out.append(entry)
        return out


@dataclass(frozen=True)
class Stats:
    median: float
    mean: float
    stddev: float
    samples: int = field(default=0, compare=False)

    @classmethod
    def of(cls, samples_ms):
        s = list(samples_ms)
        return cls(statistics.median(s), statistics.fmean(s),
                   statistics.stdev(s) if len(s) > 1 else 0.0, len(s))


@dataclass(frozen=True)
class BenchRow:
    oid: str
    scheme: str
    params: str
    cert_len_bytes: int
    keygen_ms: Stats
    certgen_ms: Stats
    sign_ms: Stats
    verify_ms: Stats
    quantum_security_level: str


def _ms(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return (time.perf_counter() - t0) * 1000.0, out


def bench_entry(entry, config: BenchConfig) -> BenchRow:
    scheme = entry.scheme_binding
    seed = None if config.seed is None else f"{config.seed}:{entry.alias}"
    rng = make_rng(seed)
    subject = DistinguishedName.parse(config.subject_profile)
    message = rng.randbytes(config.message_size)
    start = utcnow()
    if config.seed is not None:
        # Signed bytes include the validity; pin it so seeded lengths repeat exactly.
        start = start.replace(hour=0, minute=0, second=0)
    validity = Validity.days(365, start)

    def certgen():
        kp = scheme.keygen(rng)
        return self_sign(subject, kp, validity=validity, rng=rng)

    keygen_t, certgen_t, sign_t, verify_t = [], [], [], []
    cert_len = None
    for i in range(config.warmup + config.iterations):
        record = i >= config.warmup
        t_key, kp = _ms(scheme.keygen, rng)
        t_cert, cert = _ms(certgen)
        t_sign, sig = _ms(scheme.sign, kp.key, message, rng)
        t_verify, ok = _ms(scheme.verify, kp.public_bytes(), message, sig)
        if not ok:
            raise RuntimeError(f"{entry.alias}: benchmark signature failed to verify")
        if cert_len is None:
            cert_len = len(cert.encode())
        if record:
            keygen_t.append(t_key)
            certgen_t.append(t_cert)
            sign_t.append(t_sign)
            verify_t.append(t_verify)
    return BenchRow(str(entry.oid), entry.algorithm, entry.params, cert_len,
                    Stats.of(keygen_t), Stats.of(certgen_t), Stats.of(sign_t),
                    Stats.of(verify_t), entry.quantum_security_level.value)


def run_suite(config: BenchConfig, progress=None) -> List[BenchRow]:
    rows = []
    for entry in config.entries():
        if progress:
            progress(f"benchmarking {entry.alias} ...")
        rows.append(bench_entry(entry, config))
    return rows


# --- reports --------------------------------------------------------------

TIMINGS = ("keygen", "certgen", "sign", "verify")
CSV_HEADER = (["oid", "algorithm", "params", "cert_len_bytes"]
              + [f"{t}_{s}_ms" for t in TIMINGS for s in ("median", "mean", "stddev")]
              + ["quantum_security_level"])
MD_HEADER = ["OID", "Algorithm", "Parameters", "Cert length (B)", "Keygen (ms)",
             "Cert gen (ms)", "Sign (ms)", "Verify (ms)", "Quantum security"]


def _csv_record(row: BenchRow) -> list:
    rec = [row.oid, row.scheme, row.params, str(row.cert_len_bytes)]
    for t in TIMINGS:
        st = getattr(row, f"{t}_ms")
        rec += [f"{st.median:.3f}", f"{st.mean:.3f}", f"{st.stddev:.3f}"]
    return rec + [row.quantum_security_level]


def report_emit(rows, fmt: str = "csv") -> str:
    rows = list(rows)
    if not rows:
        raise EmptyReport("no benchmark rows to report")
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for row in rows:
            w.writerow(_csv_record(row))
        return buf.getvalue()
    if fmt in ("md", "markdown"):
        lines = ["| " + " | ".join(MD_HEADER) + " |",
                 "|" + "|".join(["---"] * 3 + ["---:"] * 5 + ["---"]) + "|"]
        for r in rows:
            cells = [r.oid, r.scheme, r.params, str(r.cert_len_bytes),
                     *(f"{getattr(r, f'{t}_ms').median:.3f}" for t in TIMINGS),
                     r.quantum_security_level]
            lines.append("| " + " | ".join(cells) + " |")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown report format {fmt!r}")


def parse_csv(text: str) -> List[BenchRow]:
    """Inverse of the CSV report (statistics come back at report precision)."""
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames != CSV_HEADER:
        raise ValueError("unexpected CSV header")
    rows = []
    for rec in reader:
        stats = {f"{t}_ms": Stats(float(rec[f"{t}_median_ms"]), float(rec[f"{t}_mean_ms"]),
                                  float(rec[f"{t}_stddev_ms"])) for t in TIMINGS}
        rows.append(BenchRow(rec["oid"], rec["algorithm"], rec["params"],
                             int(rec["cert_len_bytes"]), quantum_security_level=rec[
                                 "quantum_security_level"], **stats))
    return rows


def rows_to_json(rows) -> str:
    return json.dumps([asdict(r) for r in rows], indent=2)
