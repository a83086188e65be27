"""Root -> end-entity case study driven only through the command line."""

import subprocess
import sys

ROOT_SUBJECT = "C=TW,O=Example Telecom Co.,OU=Information Security Laboratory,L=Taipei,CN=Example Root CA"
EE_SUBJECT = "C=TW,O=Example Telecom Co.,OU=Information Security Laboratory,L=Taipei,CN=Device 0001"


def run(*args, cwd):
    proc = subprocess.run([sys.executable, "-m", "pqcert", *args], cwd=cwd,
                          capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def case_study(workdir, alg="wots-c", ee_alg="ntru"):
    """Run the script; return a list of (step, exit code, expected code) plus outputs."""
    steps = []

    def step(name, expected, *args):
        code, out, err = run(*args, cwd=workdir)
        steps.append((name, code, expected, out, err))
        return out

    step("root keygen", 0, "keygen", "--alg", alg, "--out", "root.key", "--seed", "01")
    step("root self-sign", 0, "cert-selfsign", "--key", "root.key", "--subject", ROOT_SUBJECT,
         "--days", "3650", "--not-before", "2030-01-01T00:00:00Z", "--serial", "1",
         "--out", "root.der", "--seed", "02")
    step("ee keygen", 0, "keygen", "--alg", ee_alg, "--out", "ee.key", "--seed", "03")
    step("ee issue", 0, "cert-issue", "--ca-key", "root.key", "--ca-cert", "root.der",
         "--key", "ee.key", "--subject", EE_SUBJECT, "--days", "365",
         "--not-before", "2030-02-01T00:00:00Z", "--serial", "2", "--out", "ee.pem",
         "--format", "pem", "--seed", "04")
    step("verify root", 0, "cert-verify", "--cert", "root.der", "--ca", "root.der",
         "--at", "2030-06-01T00:00:00Z")
    step("verify ee", 0, "cert-verify", "--cert", "ee.pem", "--ca-cert", "root.der",
         "--at", "2030-06-01T00:00:00Z")
    step("verify ee expired", 1, "cert-verify", "--cert", "ee.pem", "--ca", "root.der",
         "--at", "2032-06-01T00:00:00Z")
    root_text = step("inspect root", 0, "cert-inspect", "--cert", "root.der")
    ee_text = step("inspect ee", 0, "cert-inspect", "--cert", "ee.pem")

    data = bytearray((workdir / "root.der").read_bytes())
    pos = data.find(b"Root CA")
    data[pos + 6] = ord("B")  # Root CA -> Root CB inside the signed TBS
    (workdir / "tampered.der").write_bytes(bytes(data))
    step("verify tampered", 1, "cert-verify", "--cert", "tampered.der", "--ca", "root.der",
         "--at", "2030-06-01T00:00:00Z")
    step("falcon keygen", 2, "keygen", "--alg", "falcon-512", "--out", "f.key")
    step("unknown flag", 2, "cert-inspect", "--cert", "root.der", "--bogus")
    (workdir / "junk.der").write_bytes(b"\x30\x03junk")
    step("garbage cert", 3, "cert-inspect", "--cert", "junk.der")
    return steps, root_text, ee_text
