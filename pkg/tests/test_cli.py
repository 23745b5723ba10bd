"""Command line surface: outputs, exit codes, report determinism."""

import json

import pytest

from fanobase.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_scroll_h0(capsys):
    code, out, _ = run(capsys, "scroll", "h0", "--d", "5,1,0", "--class", "4,-8")
    assert code == 0 and out == "43\n"


def test_scroll_h0_negative_degree_class(capsys):
    code, out, _ = run(capsys, "scroll", "h0", "--d", "5,1,0", "--class=-1,3")
    assert code == 0 and out == "0\n"


def test_scroll_intersect(capsys):
    code, out, _ = run(
        capsys, "scroll", "intersect", "--d", "5,1,0", "--classes", "1,0;1,0;1,0"
    )
    assert code == 0 and out == "6\n"


def test_scroll_support(capsys):
    code, out, _ = run(capsys, "scroll", "support", "--d", "13,9,0", "--class", "4,-40")
    assert code == 0
    assert out.splitlines() == ["4,0,0", "3,1,0", "2,2,0", "1,3,0"]


def test_surface_split(capsys):
    code, out, _ = run(capsys, "surface", "split", "--e", "4", "--class", "4,12")
    assert code == 0
    assert out.splitlines() == ["multiplicity 1", "residual 3,12"]


def test_k3_chain(capsys):
    code, out, _ = run(capsys, "k3", "chain", "--m", "5")
    assert code == 0
    assert "cover pullback: 2,5" in out
    assert "pencil multiplicity: 5" in out
    assert "anticanonical degree: 8" in out
    assert "base locus dimension: 1" in out


def test_wps_hilbert(capsys):
    code, out, _ = run(
        capsys, "wps", "hilbert", "--weights", "1,1,1,2,3", "--degrees", "6", "--max", "6"
    )
    assert code == 0 and out == "1,3,7,14,25,41,63\n"


def test_wps_hilbert_no_relations(capsys):
    code, out, _ = run(capsys, "wps", "hilbert", "--weights", "1", "--max", "3")
    assert code == 0 and out == "1,1,1,1\n"


def test_wps_infer(capsys):
    code, out, _ = run(capsys, "wps", "infer", "--series", "1,3,7,14,25,41,63")
    assert code == 0
    assert out.splitlines() == ["generators 1,1,1,2,3", "relations 6"]


def test_wps_infer_polynomial_ring(capsys):
    code, out, _ = run(capsys, "wps", "infer", "--series", "1,1,1,1")
    assert code == 0
    assert out.splitlines() == ["generators 1", "relations (none)"]


def test_cover_analyze_beyond_bound_is_data_not_error(capsys):
    code, out, _ = run(capsys, "cover", "analyze", "--m", "13")
    assert code == 0
    assert "verdict fails-du-val-necessary" in out
    assert "fiber-multiplicity 4" in out


def test_cover_analyze_json(capsys):
    code, out, _ = run(capsys, "cover", "analyze", "--m", "5", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["base"] == [5, 1, 0]
    assert data["branch"] == [4, -8]
    assert data["verdict"] == "passes-du-val-necessary"


def test_classify_enumerate(capsys):
    code, out, _ = run(capsys, "classify", "enumerate")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 13
    assert lines[0].startswith("i ")
    assert any("ii-c(12)" in line and "degree=22" in line for line in lines)


def test_blowup_degree(capsys):
    code, out, _ = run(capsys, "blowup", "degree", "--ambient", "8", "--curve", "2", "--genus", "1")
    assert code == 0 and out == "4\n"


def test_verify_paper_passes(capsys):
    code, out, _ = run(capsys, "verify-paper")
    assert code == 0
    assert out.count("== case") == 13
    assert "FAIL" not in out
    assert "all green" in out


def test_verify_paper_max_degree(capsys):
    code, out, _ = run(capsys, "verify-paper", "--max-degree", "2")
    assert code == 0
    assert out.count("== case") == 1


def test_verify_paper_json_round_trip(capsys):
    code, out, _ = run(capsys, "verify-paper", "--json")
    assert code == 0
    parsed = json.loads(out)
    assert parsed["summary"]["failed"] == 0
    assert json.dumps(parsed, indent=2, sort_keys=True) + "\n" == out


def test_verify_paper_deterministic(capsys):
    _, first, _ = run(capsys, "verify-paper", "--json")
    _, second, _ = run(capsys, "verify-paper", "--json")
    assert first == second


def test_usage_error_exit_code(capsys):
    code, _, err = run(capsys, "scroll", "h0", "--d", "5,1,0")
    assert code == 2
    assert "required" in err


def test_unknown_command_exit_code(capsys):
    code, _, _ = run(capsys, "no-such-command")
    assert code == 2


def test_domain_error_exit_code(capsys):
    code, _, err = run(capsys, "cover", "analyze", "--m", "2")
    assert code == 3
    assert "error:" in err


def test_arity_domain_error(capsys):
    code, _, err = run(capsys, "scroll", "intersect", "--d", "5,1,0", "--classes", "1,0;1,0")
    assert code == 3
    assert "error:" in err
