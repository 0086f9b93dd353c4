"""CLI: subcommands, exit codes, determinism of emitted documents."""

import json

import pytest

from rankgeo.cli import main
from rankgeo.documents import dumps_canonical


FIELD8 = {"p": 2, "e": 1, "m": 3, "gqm": [1, 1, 0, 1]}
CODE215 = {
    "field": FIELD8,
    "generator": [
        [[1, 0, 0], [0, 0, 0], [0, 1, 0], [0, 0, 0]],
        [[0, 0, 0], [1, 0, 0], [0, 0, 0], [0, 0, 1]],
    ],
}
SYSTEM310 = {
    "field": FIELD8,
    "basis": [
        [[1, 0, 0], [0, 0, 0]],
        [[0, 0, 0], [1, 0, 0]],
        [[0, 1, 0], [1, 0, 0]],
        [[0, 0, 1], [0, 0, 0]],
        [[1, 0, 0], [0, 1, 0]],
    ],
}


@pytest.fixture
def code_path(tmp_path):
    p = tmp_path / "example215.json"
    p.write_text(dumps_canonical(CODE215))
    return str(p)


@pytest.fixture
def system_path(tmp_path):
    p = tmp_path / "system310.json"
    p.write_text(dumps_canonical(SYSTEM310))
    return str(p)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_weights_subcommand(capsys, code_path):
    code, out, err = run_cli(capsys, "weights", "--code", code_path)
    assert code == 0
    doc = json.loads(out)
    assert doc["d"] == 2 and doc["profile"] == [2, 4]
    assert doc["dual_profile"] == [2, 4]


def test_classify_subcommand(capsys, code_path):
    code, out, _ = run_cli(capsys, "classify", "--code", code_path)
    assert code == 0
    doc = json.loads(out)
    assert doc["flags"]["is_near_mrd"] is True
    assert doc["flags"]["is_mrd"] is False
    assert doc["rank_defect"] == 0


def test_classify_table_format(capsys, code_path):
    code, out, _ = run_cli(capsys, "classify", "--code", code_path,
                           "--format", "table")
    assert code == 0
    assert "flags.is_near_mrd" in out and "True" in out


def test_evasive_subcommand(capsys, system_path):
    code, out, _ = run_cli(capsys, "evasive", "--system", system_path,
                           "--h", "1", "--r", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["evasive"] is True
    code, out, _ = run_cli(capsys, "evasive", "--system", system_path,
                           "--h", "1", "--r", "2")
    assert json.loads(out)["evasive"] is False


def test_spectrum_subcommand(capsys, system_path):
    code, out, _ = run_cli(capsys, "spectrum", "--system", system_path)
    assert code == 0
    doc = json.loads(out)
    assert max(doc["spectrum"]) == 3 and doc["d_of_psi"] == 2


def test_dual_subcommands(capsys, code_path, system_path):
    code, out, _ = run_cli(capsys, "dual", "--code", code_path)
    assert code == 0
    doc = json.loads(out)
    assert len(doc["generator"]) == 2
    code, out, _ = run_cli(capsys, "dual", "--system", system_path)
    assert code == 0
    assert len(json.loads(out)["basis"]) == 5


def test_construct_subcommands(capsys, tmp_path):
    field_path = tmp_path / "f16.json"
    field_path.write_text(json.dumps({"p": 2, "e": 1, "m": 4}))
    code, out, _ = run_cli(capsys, "construct", "gabidulin", "--field",
                           str(field_path), "--n", "4", "--k", "2")
    assert code == 0
    gab = json.loads(out)
    assert len(gab["generator"]) == 2

    code, out, _ = run_cli(capsys, "construct", "near-mrd", "--field",
                           str(field_path), "--k", "3")
    assert code == 0
    assert len(json.loads(out)["basis"]) == 5

    code, out, _ = run_cli(capsys, "construct", "search", "--field",
                           str(field_path), "--k", "2", "--h", "1",
                           "--n", "4")
    assert code == 0
    assert json.loads(out)["found"] is True

    # direct-sum needs summand documents
    gab_path = tmp_path / "gab.json"
    gab_path.write_text(json.dumps(gab))
    code, out, _ = run_cli(capsys, "construct", "direct-sum", "--field",
                           str(field_path), "--summands", str(gab_path),
                           str(gab_path))
    assert code == 0
    assert len(json.loads(out)["generator"]) == 4


def test_missing_file_is_a_domain_error(capsys):
    code, out, err = run_cli(capsys, "evasive", "--system", "badpath.json",
                             "--h", "1", "--r", "1")
    assert code == 1
    assert "no such file" in err and out == ""


def test_unparseable_arguments_exit_one(capsys):
    code, _, err = run_cli(capsys, "weights")
    assert code == 1


def test_budget_error_exits_two(capsys, code_path):
    code, _, err = run_cli(capsys, "weights", "--code", code_path,
                           "--budget", "2")
    assert code == 2
    assert "budget" in err.lower()


def test_verify_subcommand_passes(capsys):
    code, out, _ = run_cli(capsys, "verify", "cor-4.11")
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"] is True and doc["complete"] is True


def test_verify_small_range_via_flags(capsys):
    code, out, _ = run_cli(capsys, "verify", "theorem-3.3", "--q", "2",
                           "--m", "3", "--k", "2", "--n-max", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["parameters"]["n_max"] == 3
    assert doc["instances"] == 66


def test_verify_failure_exits_three(capsys, monkeypatch):
    # corrupt the scattered bound: the cor-4.4 suite must fail loudly
    import rankgeo.classify as classify_mod
    monkeypatch.setattr(classify_mod, "scattered_dim_bound",
                        lambda k, m, h: 0)
    code, out, err = run_cli(capsys, "verify", "cor-4.4", "--n-max", "3")
    assert code == 3
    doc = json.loads(out)
    assert doc["failure_count"] > 0
    assert doc["failures"][0]["code"]["generator"]


def test_output_is_byte_identical_across_runs(capsys, code_path):
    _, out1, _ = run_cli(capsys, "classify", "--code", code_path)
    _, out2, _ = run_cli(capsys, "classify", "--code", code_path)
    assert out1 == out2


def test_out_flag_writes_file(tmp_path, capsys, code_path):
    target = tmp_path / "report.json"
    code, out, _ = run_cli(capsys, "weights", "--code", code_path,
                           "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["d"] == 2


def test_env_budget_override(capsys, code_path, monkeypatch):
    monkeypatch.setenv("RANKGEO_BUDGET", "2")
    code, _, err = run_cli(capsys, "weights", "--code", code_path)
    assert code == 2
    monkeypatch.setenv("RANKGEO_BUDGET", "notanumber")
    code, _, err = run_cli(capsys, "weights", "--code", code_path)
    assert code == 1
