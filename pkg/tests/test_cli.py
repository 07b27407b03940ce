"""CLI behavior: payloads, exit codes, stdin handling, determinism."""

import io
import json

import pytest

from linsymp import cli
from linsymp.errors import InvariantViolation

IDENTITY2 = {"rows": 2, "cols": 2, "data": [["1", "0"], ["0", "1"]]}
SWAP = {"rows": 2, "cols": 2, "data": [["0", "1"], ["1", "0"]]}
R2 = {"rows": 2, "cols": 2, "data": [["1", "0"], ["0", "-1"]]}
DIAG_2_HALF = {"rows": 2, "cols": 2, "data": [["2", "0"], ["0", "1/2"]]}
SHEAR = {"rows": 2, "cols": 2, "data": [["1", "1"], ["0", "1"]]}


def jfile(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


def run_cli(capsys, *argv):
    code = cli.run(list(argv))
    captured = capsys.readouterr()
    payload = json.loads(captured.out) if captured.out else None
    return code, payload, captured.err


def test_check_predicates(tmp_path, capsys):
    ident = jfile(tmp_path, "i.json", IDENTITY2)
    r = jfile(tmp_path, "r.json", R2)
    code, payload, _ = run_cli(capsys, "check", "--symplectic", ident)
    assert code == 0 and payload["verdict"] is True
    code, payload, _ = run_cli(capsys, "check", "--anti-symplectic", r)
    assert code == 0 and payload["verdict"] is True
    code, payload, _ = run_cli(capsys, "check", "--anti-symplectic", ident)
    assert code == 1 and payload["verdict"] is False
    code, payload, _ = run_cli(capsys, "check", "--involution", r)
    assert code == 0
    code, payload, _ = run_cli(capsys, "check", "--sp-r", jfile(tmp_path, "s.json", SHEAR))
    assert code == 0 and payload == {"verdict": True}
    code, payload, _ = run_cli(capsys, "check", "--sp-r", jfile(tmp_path, "d.json", DIAG_2_HALF))
    assert code == 1
    code, payload, _ = run_cli(capsys, "check", "--gl-embedded", jfile(tmp_path, "d2.json", DIAG_2_HALF))
    assert code == 0 and payload["witness"] == {"rows": 1, "cols": 1, "data": [["2"]]}
    code, payload, _ = run_cli(capsys, "check", "--gl-embedded", jfile(tmp_path, "s2.json", SHEAR))
    assert code == 1 and payload["witness"] is None


def test_check_reads_stdin(tmp_path, capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(IDENTITY2)))
    code, payload, _ = run_cli(capsys, "check", "--symplectic", "-")
    assert code == 0 and payload["verdict"] is True


def test_split_and_chart(tmp_path, capsys):
    swap = jfile(tmp_path, "swap.json", SWAP)
    code, payload, _ = run_cli(capsys, "split", swap)
    assert code == 0
    assert payload["plus"]["data"] == [["1"], ["1"]]
    assert payload["minus"]["data"] == [["1"], ["-1"]]

    s = jfile(tmp_path, "inv.json", {"rows": 2, "cols": 2, "data": [["1", "2"], ["0", "-1"]]})
    code, payload, _ = run_cli(capsys, "chart", "coords", s)
    assert code == 0
    assert payload["base"]["data"] == [["1"], ["0"]]
    assert payload["coordinate"]["data"] == [["1"]]

    base = jfile(tmp_path, "base.json", payload["base"])
    coord = jfile(tmp_path, "coord.json", payload["coordinate"])
    code, payload, _ = run_cli(capsys, "chart", "involution", base, coord)
    assert code == 0 and payload["data"] == [["1", "2"], ["0", "-1"]]


def test_basis(tmp_path, capsys):
    l1 = jfile(tmp_path, "l1.json", {"rows": 2, "cols": 1, "data": [["1"], ["0"]]})
    l2 = jfile(tmp_path, "l2.json", {"rows": 2, "cols": 1, "data": [["1"], ["1"]]})
    code, payload, _ = run_cli(capsys, "basis", l1, l2)
    assert code == 0
    assert payload["v"]["data"] == [["1"], ["0"]]
    assert payload["w"]["data"] == [["1"], ["1"]]


def test_conjugate(tmp_path, capsys):
    swap = jfile(tmp_path, "swap.json", SWAP)
    code, payload, _ = run_cli(capsys, "conjugate", "to-r", swap)
    assert code == 0
    psi_file = jfile(tmp_path, "psi.json", payload)
    code, payload, _ = run_cli(capsys, "conjugate", "of", psi_file)
    assert code == 0 and payload == SWAP


def test_factor_and_normalize(tmp_path, capsys):
    phi = jfile(tmp_path, "phi.json", DIAG_2_HALF)
    code, payload, _ = run_cli(capsys, "factor", "sl2", phi)
    assert code == 0
    assert payload["S"] == SWAP
    assert payload["T"]["data"] == [["0", "2"], ["1/2", "0"]]

    shear = jfile(tmp_path, "shear.json", SHEAR)
    code, payload, _ = run_cli(capsys, "factor", "blocks", phi, shear)
    assert code == 0 and payload["phi"]["rows"] == 4

    swap = jfile(tmp_path, "swap.json", SWAP)
    code, payload, _ = run_cli(capsys, "normalize", phi, swap)
    assert code == 0
    assert payload["phi_tilde"]["data"] == [["5/4", "-3/8"], ["-3/2", "5/4"]]
    assert payload["psi"]["data"] == [["1/2", "1/2"], ["-1", "1"]]


def test_unitary(tmp_path, capsys):
    r = jfile(tmp_path, "r.json", R2)
    code, payload, _ = run_cli(capsys, "unitary", "to-theta", r)
    assert code == 0 and payload["data"] == [[[1.0, 0.0]]]
    theta = jfile(tmp_path, "theta.json", {"rows": 1, "cols": 1, "data": [[[0.0, 1.0]]]})
    code, payload, _ = run_cli(capsys, "unitary", "from-theta", theta)
    assert code == 0 and payload["data"] == [[0.0, 1.0], [1.0, 0.0]]
    # Tolerance is configurable: an almost-unitary theta passes with a loose tol.
    near = jfile(tmp_path, "near.json", {"rows": 1, "cols": 1, "data": [[[1.00001, 0.0]]]})
    code, _, _ = run_cli(capsys, "unitary", "from-theta", near)
    assert code == 3
    code, _, _ = run_cli(capsys, "unitary", "from-theta", near, "--tol", "1e-3")
    assert code == 0


def test_sample_golden_bytes(tmp_path, capsys):
    code = cli.run(["sample", "sp", "--n", "1", "--seed", "42"])
    out = capsys.readouterr().out
    expected = (
        json.dumps(
            {"rows": 2, "cols": 2, "data": [["16", "3"], ["37", "7"]]},
            indent=2,
            sort_keys=True,
        )
        + "\n"
    )
    assert code == 0 and out == expected


@pytest.mark.parametrize("kind", ["sp", "inv", "spr", "lag", "theta"])
def test_sample_kinds(capsys, kind):
    code, payload, _ = run_cli(capsys, "sample", kind, "--n", "2", "--seed", "3")
    assert code == 0 and payload["rows"] in (2, 4)


def test_sample_pipes_into_check(tmp_path, capsys):
    code, payload, _ = run_cli(capsys, "sample", "spr", "--n", "2", "--seed", "9")
    assert code == 0
    f = jfile(tmp_path, "spr.json", payload)
    code, payload, _ = run_cli(capsys, "check", "--sp-r", f)
    assert code == 0


def test_verify_deterministic_stdout(capsys):
    code1 = cli.run(["verify", "--n-max", "1", "--trials", "2", "--seed", "5"])
    out1 = capsys.readouterr().out
    code2 = cli.run(["verify", "--n-max", "1", "--trials", "2", "--seed", "5"])
    out2 = capsys.readouterr().out
    assert code1 == code2 == 0
    assert out1 == out2
    summary = json.loads(out1)
    assert summary["all_passed"] is True


def test_exit_code_2_parse_errors(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{oops")
    code, payload, err = run_cli(capsys, "check", "--symplectic", str(bad))
    assert code == 2 and payload is None and "format error" in err
    zero_den = jfile(tmp_path, "z.json", {"rows": 1, "cols": 1, "data": [["1/0"]]})
    code, _, err = run_cli(capsys, "check", "--involution", zero_den)
    assert code == 2


def test_exit_code_2_cli_misuse():
    with pytest.raises(SystemExit) as exc:
        cli.run(["check", "--symplectic", "--involution", "x.json"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.run(["check", "--symplectic", "x.json", "--tol", "1e-3"])  # --tol is unitary-only
    assert exc.value.code == 2


def test_exit_code_3_domain_errors(tmp_path, capsys):
    odd = jfile(tmp_path, "odd.json", {"rows": 3, "cols": 3, "data": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]})
    code, _, err = run_cli(capsys, "check", "--symplectic", odd)
    assert code == 3 and "domain error" in err
    not_sp = jfile(tmp_path, "ns.json", {"rows": 2, "cols": 2, "data": [["2", "0"], ["0", "2"]]})
    code, _, err = run_cli(capsys, "check", "--sp-r", not_sp)
    assert code == 3
    phi = jfile(tmp_path, "phi.json", DIAG_2_HALF)
    r = jfile(tmp_path, "r.json", R2)
    code, _, err = run_cli(capsys, "normalize", phi, r)  # R does not reverse phi
    assert code == 3
    ident = jfile(tmp_path, "i.json", IDENTITY2)
    code, _, _ = run_cli(capsys, "split", ident)  # identity is not anti-symplectic
    assert code == 3


def test_exit_code_4_invariant_failure(tmp_path, capsys, monkeypatch):
    def broken(S):
        raise InvariantViolation("synthetic failure")

    monkeypatch.setattr(cli, "reversor_conjugator", broken)
    swap = jfile(tmp_path, "swap.json", SWAP)
    code, payload, err = run_cli(capsys, "conjugate", "to-r", swap)
    assert code == 4 and payload is None and "internal invariant failure" in err
