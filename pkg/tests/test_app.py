import json

import pytest

from paley_zn import app as app_module
from paley_zn.main import main
from paley_zn.verification import VerificationReport


def test_check_admissible(run_cli):
    assert run_cli("check", 10) == (0, "10 = 2 * 5\nadmissible, x=3\n", "")


def test_check_inadmissible(run_cli):
    code, out, _ = run_cli("check", 21)
    assert code == 1
    assert out == "21 = 3 * 7\ninadmissible (prime 3 = 3 mod 4)\n"


def test_check_excluded(run_cli):
    code, out, _ = run_cli("check", 1)
    assert code == 1
    assert out == "excluded (n must be >= 3)\n"


@pytest.mark.parametrize("argv", [("check", "abc"), ("check", 0), ("count", 13, "--order", 5), ()])
def test_usage_errors(run_cli, argv):
    assert run_cli(*argv)[0] == 2


def test_props_5(run_cli):
    code, out, _ = run_cli("props", 5)
    assert code == 0
    for line in ("degree: 2", "edges: 5", "connected: yes", "cycle: yes", "complete: no"):
        assert line in out.splitlines()


def test_props_65(run_cli):
    code, out, _ = run_cli("props", 65)
    assert code == 0
    lines = out.splitlines()
    for line in ("degree: 12", "edges: 390", "connected: yes", "cycle: no",
                 "self-complementary edge count: no"):
        assert line in lines
    assert not any(line.startswith("decomposition") for line in lines)


def test_props_25_shows_decomposition(run_cli):
    code, out, _ = run_cli("props", 25)
    assert code == 0
    assert "degree: 10" in out
    assert "decomposition: 5 blocks of G(5), 25 intra-block edges, 100 star edges, checks passed" in out


def test_props_rejects_inadmissible(run_cli):
    code, _, err = run_cli("props", 21)
    assert code == 1
    assert "inadmissible" in err


def test_count_triangles_both(run_cli):
    assert run_cli("count", 13, "--order", 3, "--method", "both") == (0, "formula: 26\nbrute: 26\n", "")


def test_count_k4_both(run_cli):
    assert run_cli("count", 29, "--order", 4, "--method", "both", "--workers", 2)[:2] == (0, "formula: 203\nbrute: 203\n")


def test_count_formula_needs_prime_power(run_cli):
    code, out, err = run_cli("count", 65, "--order", 3, "--method", "formula")
    assert code == 1
    assert out == ""
    assert "no closed formula" in err


def test_count_both_marks_missing_formula(run_cli):
    code, out, _ = run_cli("count", 26, "--order", 3)
    assert code == 0
    assert out.startswith("formula: no formula\nbrute: ")


def _no_graph(n):
    raise RuntimeError(f"built G_{n} for a formula-only count")


@pytest.mark.parametrize("order, expected", [(3, "formula: 26\n"), (4, "formula: 0\n")])
def test_count_formula_skips_graph(run_cli, monkeypatch, order, expected):
    monkeypatch.setattr(app_module, "build_graph", _no_graph)
    assert run_cli("count", 13, "--order", order, "--method", "formula") == (0, expected, "")


def test_count_formula_rejects_inadmissible_without_graph(run_cli, monkeypatch):
    monkeypatch.setattr(app_module, "build_graph", _no_graph)
    code, out, err = run_cli("count", 21, "--method", "formula")
    assert code == 1
    assert out == ""
    assert "inadmissible" in err


def test_count_mismatch_exits_3(run_cli, monkeypatch):
    monkeypatch.setattr(app_module, "count_triangles_brute", lambda g, workers=1: 0)
    code, out, err = run_cli("count", 13)
    assert code == 3
    assert "26" in err


def test_jacobi(run_cli):
    assert run_cli("jacobi", 13, 1) == (0, "J(psi,chi) mod 13: -3+2i\nnorm: 13\nK: 10\n", "")


def test_jacobi_prime_power(run_cli):
    code, out, _ = run_cli("jacobi", 5, 2)
    assert code == 0
    assert out == "J(psi,chi) mod 5^2: 5+10i\nnorm: 125\nK: -150\n"


def test_jacobi_rejects_3_mod_4(run_cli):
    code, _, err = run_cli("jacobi", 7, 1)
    assert code == 1
    assert "7" in err


def test_verify_degenerate(run_cli):
    code, out, _ = run_cli("verify", "--max-n", 3)
    assert code == 0
    assert out == "PASS  admissible(n=3)\n1 passed, 0 failed\n"


def test_verify_json_and_files(run_cli, tmp_path):
    out_path, pdf_path = tmp_path / "report.json", tmp_path / "report.pdf"
    code, out, _ = run_cli("verify", "--max-n", 30, "--max-prime", 13, "--alphas", "1",
                           "--json", "--out", out_path, "--pdf", pdf_path)
    assert code == 0
    data = json.loads(out)
    assert data["summary"]["fail"] == 0
    assert {"name": "admissible", "params": {"n": 10}, "pass": True,
            "expected": True, "actual": True} in data["checks"]
    assert json.loads(out_path.read_text()) == data
    assert pdf_path.read_bytes().startswith(b"%PDF")


def test_verify_failure_exits_3(run_cli, monkeypatch):
    report = VerificationReport()
    report.add("broken", {'n': 5}, 1, 2)
    monkeypatch.setattr(app_module, "run_verification", lambda settings: report)
    code, out, _ = run_cli("verify")
    assert code == 3
    assert "FAIL  broken(n=5)" in out


def test_verify_rejects_bad_alphas(run_cli):
    assert run_cli("verify", "--alphas", "0,1")[0] == 2
    assert run_cli("verify", "--alphas", "x")[0] == 2


def test_export_edge_list_to_stdout(run_cli):
    assert run_cli("export", 5, "--format", "edge-list") == (0, "0 1\n0 4\n1 2\n2 3\n3 4\n", "")


def test_export_dot(run_cli):
    code, out, _ = run_cli("export", 13, "--format", "dot")
    assert code == 0
    assert out.count(" -- ") == 39


def test_export_json_file(run_cli, tmp_path):
    path = tmp_path / "g25.json"
    code, out, _ = run_cli("export", 25, "--format", "json", "--out", path)
    assert code == 0
    assert out == f"wrote {path.stat().st_size} bytes to {path}\n"
    assert len(json.loads(path.read_text())["edges"]) == 125


def test_export_png_needs_out(run_cli):
    assert run_cli("export", 5, "--format", "png")[0] == 2


def test_export_io_failure(run_cli, tmp_path):
    code, _, err = run_cli("export", 5, "--out", tmp_path / "missing" / "g5.txt")
    assert code == 2
    assert err.startswith("error:")


def test_verbose_logs_to_stderr(run_cli):
    code, _, err = run_cli("-vv", "jacobi", 13)
    assert code == 0
    assert "DEBUG paley_zn." in err


def test_main_entry_point(capsys):
    assert main(["check", "26"]) == 0
    assert capsys.readouterr().out == "26 = 2 * 13\nadmissible, x=5\n"
