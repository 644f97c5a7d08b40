import json

import pytest

from polylb import polylb_cli
from polylb.polylb_cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, run_cli
from polylb.polylb_fvector import FaceCountVector
from polylb.polylb_version import polylb_version


def test_fvector_json_with_oracle(capsys):
    assert run_cli(["fvector", "J:s=3,d=5", "--oracle", "--format", "json"]) == EXIT_OK
    result = json.loads(capsys.readouterr().out)
    assert result["family"] == "J:s=3,d=5"
    assert result["verdict"] == "MATCH"
    assert result["formula"]["counts"] == ["12", "32", "39", "25", "8"]
    assert result["oracle"] == result["formula"]


def test_fvector_markdown(capsys):
    assert run_cli(["fvector", "simplex:d=4"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("# simplex:d=4\n")
    assert "| formula | (5, 10, 10, 5) |" in out
    assert "verdict: UNCHECKED" in out


def test_fvector_csv(capsys):
    assert run_cli(["fvector", "B:d=3", "--oracle", "--format", "csv"]) == EXIT_OK
    assert capsys.readouterr().out.splitlines() == [
        # the family contains commas, so csv quotes it
        '"J:s=3,d=3",formula,8,12,6',
        '"J:s=3,d=3",oracle,8,12,6',
        '"J:s=3,d=3",verdict,MATCH',
    ]


def test_fvector_without_closed_form(capsys):
    assert run_cli(["fvector", "sigma:d=4", "--format", "json"]) == EXIT_OK
    result = json.loads(capsys.readouterr().out)
    assert result["formula"] is None and result["oracle"] is None
    assert result["verdict"] == "UNCHECKED"


def test_fvector_mismatch_exits_one(capsys, monkeypatch):
    monkeypatch.setattr(polylb_cli, "expected_fvector", lambda spec: FaceCountVector.of([5, 10, 10, 6]))
    assert run_cli(["fvector", "simplex:d=4", "--oracle"]) == EXIT_FAILED
    assert "verdict: MISMATCH" in capsys.readouterr().out


def test_oracle_guard(capsys):
    assert run_cli(["fvector", "simplex:d=4", "--oracle", "--oracle-guard", "4"]) == EXIT_USAGE
    assert "--force-oracle" in capsys.readouterr().err
    assert run_cli(["fvector", "simplex:d=4", "--oracle", "--oracle-guard", "4", "--force-oracle"]) == EXIT_OK


@pytest.mark.parametrize(
    "argv",
    [
        ["fvector", "J:s=1,d=3"],
        ["fvector", "cube:d=3"],
        ["verify", "--suite", "bogus"],
        ["verify", "--suite", "dichotomy", "--d-max", "5"],
        ["verify", "--suite", "tau_minimality", "--d-max", "5", "--s-set", "1,2"],
        ["table", "--which", "eta", "--d", "0..3"],
        ["table", "--which", "eta", "--d", "5..3"],
        [],
    ],
)
def test_bad_arguments_exit_two(argv, capsys):
    assert run_cli(argv) == EXIT_USAGE


def test_verify_writes_report(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = run_cli(["verify", "--suite", "existence", "--d-max", "20", "--format", "json", "--out", str(out)])
    assert code == EXIT_OK
    assert capsys.readouterr().out == ""
    (report,) = json.loads(out.read_text())
    assert report["claim_id"] == "existence"
    assert report["passed"] is True
    assert report["points_checked"] == "19"
    assert {"d": "5", "a": "5", "m": "2"} in report["equality_witnesses"]


def test_verify_csv_summary(capsys):
    assert run_cli(["verify", "--suite", "barnette_truncations", "--d-max", "3", "--format", "csv"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "claim_id,verdict,points_checked,failures,equality_witnesses,findings"
    assert lines[1].startswith("barnette_truncations,PASS,")


def test_table(capsys):
    assert run_cli(["table", "--which", "dichotomy", "--d", "9", "--format", "csv"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "d,k,eta,tau,gap,lower"
    assert lines[1] == "9,1,96,100,4,eta"
    assert len(lines) == 9


def test_minimiser_table(capsys):
    assert run_cli(["table", "--which", "minimisers", "--d", "6..6", "--format", "json"]) == EXIT_OK
    rows = json.loads(capsys.readouterr().out)
    assert [r["s"] for r in rows] == ["2", "3", "4"]
    assert rows[1] == {"d": "6", "s": "3", "a": "5", "m": "2", "f_0": "13", "required f_0": "14"}


def test_dump(capsys):
    assert run_cli(["dump", "tmprod:d=3,a=2,m=1", "--format", "md"]) == EXIT_OK
    result = json.loads(capsys.readouterr().out)
    assert list(result) == ["family", "polytope", "incidence", "face_lattice"]
    assert result["polytope"]["n_vertices"] == "5"
    assert result["face_lattice"]["f_vector"]["counts"] == ["5", "8", "5"]


def test_dump_is_byte_identical(tmp_path):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    for path in (first, second):
        assert run_cli(["dump", "A:d=3", "--out", str(path)]) == EXIT_OK
    assert first.read_bytes() == second.read_bytes()


def test_version(capsys):
    assert run_cli(["--version"]) == EXIT_OK
    assert f"polylb version {polylb_version}" in capsys.readouterr().out
