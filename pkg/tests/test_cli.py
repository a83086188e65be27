import pytest

from cli_case_study import case_study, run
from pqcert.cli import build_parser, main


def test_case_study_exit_codes(tmp_path):
    steps, root_text, ee_text = case_study(tmp_path)
    for name, code, expected, out, err in steps:
        assert code == expected, f"{name}: exit {code}, stderr: {err}"
    assert "1.3.9999.9.1 WOTS-C" in root_text
    # end-entity carries the root's signature algorithm and its own key type
    assert "Signature Algorithm: 1.3.9999.9.1" in ee_text
    assert "Issuer: " in ee_text and "Root CA" in ee_text
    assert "NTRU" in ee_text


def test_readme_example(tmp_path):
    assert main(["keygen", "--alg", "ecdsa-p256", "--out", str(tmp_path / "k")]) == 0
    assert main(["cert-selfsign", "--key", str(tmp_path / "k"), "--subject", "CN=Root CA",
                 "--days", "365", "--out", str(tmp_path / "root.der")]) == 0
    assert main(["cert-verify", "--cert", str(tmp_path / "root.der"),
                 "--ca", str(tmp_path / "root.der")]) == 0


def test_inspect_shows_level(tmp_path, capsys):
    main(["keygen", "--alg", "rsa-2048", "--out", str(tmp_path / "k"), "--seed", "aa"])
    main(["cert-selfsign", "--key", str(tmp_path / "k"), "--subject", "CN=Root CA",
          "--out", str(tmp_path / "c.pem"), "--format", "pem", "--seed", "aa"])
    capsys.readouterr()
    assert main(["cert-inspect", "--cert", str(tmp_path / "c.pem")]) == 0
    out = capsys.readouterr().out
    assert "1.2.840.113549.1.1.11 RSA (2048 and SHA256), insecure" in out
    assert "Fingerprint (SHA-256)" in out


def test_seeded_runs_byte_identical(tmp_path):
    outs = []
    for n in (1, 2):
        d = tmp_path / str(n)
        d.mkdir()
        assert main(["keygen", "--alg", "mi", "--out", str(d / "k"), "--seed", "beef"]) == 0
        assert main(["cert-selfsign", "--key", str(d / "k"), "--subject", "CN=Root CA",
                     "--out", str(d / "c.der"), "--seed", "beef"]) == 0
        outs.append(((d / "k").read_bytes(), (d / "c.der").read_bytes()))
    assert outs[0] == outs[1]


def test_sign_verify_files(tmp_path):
    msg = tmp_path / "msg.bin"
    msg.write_bytes(b"hello" * 100)
    key, sig = str(tmp_path / "k"), str(tmp_path / "s")
    assert main(["keygen", "--alg", "wots-c", "--out", key]) == 0
    assert main(["sign", "--key", key, "--in", str(msg), "--out", sig]) == 0
    assert main(["verify", "--key", key, "--in", str(msg), "--sig", sig]) == 0
    msg.write_bytes(b"hellO" * 100)
    assert main(["verify", "--key", key, "--in", str(msg), "--sig", sig]) == 1


def test_usage_and_io_errors(tmp_path):
    assert main([]) == 2
    assert main(["frobnicate"]) == 2
    assert main(["keygen", "--alg", "nope", "--out", str(tmp_path / "k")]) == 2
    assert main(["keygen", "--alg", "ntru", "--out", str(tmp_path / "k"), "--seed", "xyz"]) == 2
    assert main(["cert-inspect", "--cert", str(tmp_path / "missing.der")]) == 3
    main(["keygen", "--alg", "ntru", "--out", str(tmp_path / "ntru.key")])
    # encryption-only keys cannot sign certificates
    assert main(["cert-selfsign", "--key", str(tmp_path / "ntru.key"), "--subject", "CN=x",
                 "--out", str(tmp_path / "c")]) == 2
    assert main(["bench", "--schemes", "falcon-512"]) == 2


def test_bench_command(tmp_path):
    out = tmp_path / "r.csv"
    assert main(["bench", "--schemes", "ecdsa-p256", "--iterations", "1", "--warmup", "0",
                 "--report", "csv", "--out", str(out), "--seed", "01"]) == 0
    lines = out.read_text().strip().splitlines()
    assert len(lines) == 2 and lines[1].startswith("1.2.840.10045.4.3.2,ECDSA")


def subcommands():
    parser = build_parser()
    action = next(a for a in parser._actions if a.dest == "command")
    return sorted(action.choices)


@pytest.mark.parametrize("cmd", subcommands())
def test_every_subcommand_has_help(cmd, capsys):
    assert main([cmd, "--help"]) == 0
    text = capsys.readouterr().out
    action = next(a for a in build_parser()._actions if a.dest == "command")
    for act in action.choices[cmd]._actions:
        for flag in act.option_strings:
            assert flag in text
    assert main([cmd, "--no-such-flag"]) == 2


def test_module_entry_point(tmp_path):
    code, out, _ = run("--version", cwd=tmp_path)
    assert code == 0 and "pqcert" in out
