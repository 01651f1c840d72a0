import json
import os

import pytest

from dccodes.cli import main


def run_cli(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_count_orthogonal(capsys):
    rc, out, _ = run_cli(capsys, "count-orthogonal", "--m", "9")
    assert rc == 0 and out.strip() == "27"


def test_count_orthogonal_explain(capsys):
    rc, out, _ = run_cli(capsys, "count-orthogonal", "--m", "12", "--explain")
    assert rc == 0
    assert out.startswith("count_orthogonal(12) = 192")
    assert "self-reciprocal" in out


def test_verify_dc(capsys):
    rc, out, _ = run_cli(capsys, "verify", "--m", "4", "--f", "1+x+x^2")
    assert rc == 0
    got = json.loads(out)
    assert (got["n"], got["k"], got["d"]) == (8, 4, 4)
    assert got["self_dual"] and got["extremal"]
    assert got["weight_distribution"] == [1, 0, 0, 0, 14, 0, 0, 0, 1]
    assert got["hull_dimension"] == 4


def test_verify_bordered(capsys):
    rc, out, _ = run_cli(capsys, "verify", "--m", "3", "--f", "x+x^2", "--bordered")
    assert rc == 0
    got = json.loads(out)
    assert (got["n"], got["k"], got["d"]) == (8, 4, 4)
    assert got["construction"] == "bordered" and got["self_dual"]


def test_verify_alpha_without_bordered_is_usage_error(capsys):
    rc, _, err = run_cli(capsys, "verify", "--m", "3", "--f", "x", "--alpha", "1")
    assert rc == 2 and "alpha" in err


def test_dc_classify(capsys):
    rc, out, _ = run_cli(capsys, "dc", "classify", "--m", "9", "--f", "x^6+x^4+x^3+x+1")
    assert rc == 0
    got = json.loads(out)
    assert got == {
        "self_dual": True,
        "weight": 5,
        "predicate_used": "thm_upto20",
        "extremal": True,
        "oracle_d": 4,
    }


def test_dc_classify_non_self_dual(capsys):
    rc, out, _ = run_cli(capsys, "dc", "classify", "--m", "4", "--f", "1+x")
    assert rc == 0
    got = json.loads(out)
    assert not got["self_dual"] and not got["extremal"]
    assert got["oracle_d"] == 3  # the row (1, 1+x) has weight 3


def test_dc_canonical(capsys):
    rc, out, _ = run_cli(capsys, "dc", "canonical", "--m", "4", "--f", "x^3")
    assert rc == 0 and out.strip() == "1"


def test_bordered_classify(capsys):
    rc, out, _ = run_cli(capsys, "bordered", "classify", "--m", "5", "--f", "x^2+x^3+x^4", "--alpha", "0")
    assert rc == 0
    got = json.loads(out)
    assert got["lcd"] and got["hull_dim"] == 0
    assert (got["n"], got["k"]) == (12, 6)


def test_bordered_lift(capsys):
    rc, out, _ = run_cli(capsys, "bordered", "lift", "--m", "5", "--f", "x^2")
    assert rc == 0
    assert json.loads(out) == {"m": 5, "f": "x^4+x^3+x+1", "alpha": 0}


def test_bordered_lift_rejects_even_m(capsys):
    rc, _, err = run_cli(capsys, "bordered", "lift", "--m", "4", "--f", "1+x+x^2")
    assert rc == 2 and "odd m" in err


def test_search_stdout_and_file(tmp_path, capsys):
    rc, out, _ = run_cli(capsys, "search", "--kind", "extremal_dc", "--m", "4")
    assert rc == 0
    assert out.splitlines()[1] == "4,x^2+x+1,3,8,4,4,true,true,false,thm_upto20"

    target = tmp_path / "reports.json"
    rc, out, _ = run_cli(
        capsys, "search", "--kind", "extremal_dc", "--m", "4", "--format", "json",
        "--out", str(target),
    )
    assert rc == 0 and out == ""
    assert json.loads(target.read_text())[0]["f"] == "x^2+x+1"


def test_search_env_workers(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("DCCODES_WORKERS", "2")
    rc, out, _ = run_cli(capsys, "search", "--kind", "selfdual_dc", "--m", "5")
    assert rc == 0 and len(out.splitlines()) == 6


def test_search_config_file_flags_win(tmp_path, capsys):
    config = tmp_path / "cfg.json"
    config.write_text(json.dumps({"kind": "selfdual_dc", "m": 5, "format": "json"}))
    rc, out, _ = run_cli(capsys, "search", "--config", str(config), "--m", "7")
    assert rc == 0
    got = json.loads(out)
    assert {r["m"] for r in got} == {7} and len(got) == 7


def test_search_usage_errors(capsys):
    rc, _, err = run_cli(capsys, "search", "--kind", "selfdual_dc", "--m", "30")
    assert rc == 2 and "budget" in err
    rc, _, err = run_cli(capsys, "search", "--m", "4")
    assert rc == 2 and "kind" in err


def test_search_figures(tmp_path, capsys):
    figures = tmp_path / "figs"
    rc, _, _ = run_cli(
        capsys, "search", "--kind", "extremal_dc", "--m", "4", "--m-max", "6",
        "--figures", str(figures), "--out", str(tmp_path / "out.csv"),
    )
    assert rc == 0
    names = sorted(os.listdir(figures))
    assert "search_summary.png" in names
    wd_files = [n for n in names if n.startswith("wd_extremal_dc_m04")]
    assert wd_files and all((figures / n).stat().st_size > 0 for n in names)


def test_verify_figures(tmp_path, capsys):
    figures = tmp_path / "figs"
    rc, _, _ = run_cli(
        capsys, "verify", "--m", "4", "--f", "1+x+x^2", "--figures", str(figures)
    )
    assert rc == 0
    assert any(name.startswith("wd_verify_dc") for name in os.listdir(figures))


def test_tables_command(capsys, tmp_path):
    figures = tmp_path / "figs"
    rc, out, _ = run_cli(capsys, "tables", "--figures", str(figures))
    assert rc == 0
    assert out.count("ok ") >= 13
    assert "MISSING" not in out and "MISMATCH" not in out
    assert len(os.listdir(figures)) == 11  # 8 short rows + 3 long rows


def test_bad_polynomial_is_usage_error(capsys):
    rc, _, err = run_cli(capsys, "verify", "--m", "4", "--f", "x^^2")
    assert rc == 2 and "error" in err
