import json

from lcft import checks, cli
from lcft.extension import TameAbelianExtension


def _write(tmp_path, text, name="ext.cfg"):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


UNRAM = "p=3\nt=1\nf=2\ne=1\nu0=1\nprecision=32\n"
C9 = "p=2\nt=2\nf=3\ne=3\nu0=g\nprecision=32\nseed=5\nsamples=15\n"


def test_validate_ok(tmp_path, capsys):
    code = cli.main(["validate", _write(tmp_path, UNRAM)])
    out = capsys.readouterr().out
    assert code == 0
    assert "degree 2" in out


def test_validate_wild_exits_one(tmp_path, capsys):
    cfg = _write(tmp_path, "p=2\nt=1\nf=1\ne=2\nu0=1\n")
    assert cli.main(["validate", cfg]) == 1
    assert "wild" in capsys.readouterr().err


def test_missing_config_exits_three(capsys):
    assert cli.main(["galois", "/does/not/exist.cfg"]) == 3
    assert "config error" in capsys.readouterr().err


def test_malformed_config_exits_three(tmp_path, capsys):
    cfg = _write(tmp_path, "p 3\n")
    assert cli.main(["validate", cfg]) == 3


def test_recip_table_contains_frobenius_row(tmp_path, capsys):
    code = cli.main(["recip", _write(tmp_path, UNRAM), "--json"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    rows = [r for r in payload["table"] if r["valuation"] == 1]
    assert {"valuation": 1, "unit": "1", "galois": {"a": 1, "c": "1"},
            "search_agrees": True} in rows
    assert all(r["search_agrees"] for r in payload["table"])


def test_descriptor_round_trip_through_json(tmp_path, capsys):
    code = cli.main(["validate", _write(tmp_path, C9), "--json"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    again = TameAbelianExtension.from_descriptor(payload["descriptor"])
    assert again.descriptor() == payload["descriptor"]


def test_norm_group_json(tmp_path, capsys):
    code = cli.main(["norm-group", _write(tmp_path, C9), "--json"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["invariant_factors"] == [9]
    assert payload["quotient_order"] == 9
    assert len(payload["coset_representatives"]) == 9


def test_galois_command(tmp_path, capsys):
    code = cli.main(["galois", _write(tmp_path, C9), "--json"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["order"] == 9
    assert payload["structure"] == [9]
    assert len(payload["ramification"]["0"]) == 3
    assert len(payload["ramification"]["1"]) == 1


def test_hasse_command(tmp_path, capsys):
    code = cli.main(["hasse", _write(tmp_path, C9), "--json"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["character_order"] == 9
    assert len(payload["table"]) == 9
    invariants = {(row["invariant_numerator"], row["invariant_denominator"])
                  for row in payload["table"]}
    assert (0, 1) in invariants
    assert any(den == 9 for _, den in invariants)


def test_check_passes_and_embeds_seed(tmp_path, capsys):
    code = cli.main(["check", _write(tmp_path, C9), "--json",
                     "--samples", "10"])
    payload = json.loads(capsys.readouterr().out)
    assert code == 0
    assert payload["passed"] is True
    assert payload["seed"] == 5
    assert len(payload["results"]) == 15


def test_check_deterministic_output(tmp_path, capsys):
    cfg = _write(tmp_path, UNRAM)
    cli.main(["check", cfg, "--json", "--samples", "10", "--seed", "3"])
    first = capsys.readouterr().out
    cli.main(["check", cfg, "--json", "--samples", "10", "--seed", "3"])
    assert capsys.readouterr().out == first


def test_check_failure_exits_two(tmp_path, capsys, monkeypatch):
    monkeypatch.setattr(
        checks, "run_checks",
        lambda ext, samples=100, seed=0: [
            checks.CheckResult("forced", False, "injected failure")])
    monkeypatch.setattr(cli.checks, "run_checks", checks.run_checks)
    assert cli.main(["check", _write(tmp_path, UNRAM)]) == 2
    assert "FAIL forced" in capsys.readouterr().out


def test_precision_env_override(tmp_path, monkeypatch, capsys):
    cfg = _write(tmp_path, "p=3\nt=1\nf=2\ne=1\nu0=1\n")
    monkeypatch.setenv("LCFT_PRECISION", "16")
    cli.main(["validate", cfg, "--json"])
    payload = json.loads(capsys.readouterr().out)
    assert payload["descriptor"]["precision"] == 16


def test_descriptor_text_round_trip(tmp_path):
    ext = TameAbelianExtension.from_parameters(2, 2, 3, 3, "g", 16)
    cfg = _write(tmp_path, ext.descriptor_text())
    raw = cli.parse_config(cfg)
    again = cli.build_extension(raw)
    assert again.descriptor() == ext.descriptor()
