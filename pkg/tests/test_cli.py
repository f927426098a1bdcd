import json

import pytest

from helpers import DATA, M, consistent_left_rhs, inconsistent_left_rhs, load, ref_example
from qcramer import QMatrix, format_matrix, matrix_from_json, parse_matrix
from qcramer.cli import main


def write(tmp_path, name, m: QMatrix) -> str:
    p = tmp_path / f"{name}.mat"
    p.write_text(format_matrix(m))
    return str(p)


def data(name):
    return str(DATA / f"{name}.mat")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def matrix_part(out: str) -> QMatrix:
    # comment lines are skipped by the parser; the first matrix block is the result
    lines = [ln for ln in out.splitlines() if ln.strip() and not ln.startswith("#")]
    rows, cols = map(int, lines[0].split())
    return parse_matrix("\n".join(lines[: rows + 1]))


def test_inverse(tmp_path, capsys):
    a = M("1; i", "0; j")
    code, out, _ = run(capsys, "inverse", write(tmp_path, "a", a))
    assert code == 0
    assert matrix_part(out) == M("1; k", "0; -j")
    assert "# check AX=I: ok" in out


def test_mp_json(tmp_path, capsys):
    code, out, _ = run(capsys, "mp", write(tmp_path, "a", M("1; i")), "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["verb"] == "mp"
    assert doc["route"] == "mp-left"
    assert doc["denominators"] == ["2"]
    assert matrix_from_json(doc["matrix"]) == M("1/2", "-1/2 i")
    assert [a["id"] for a in doc["axioms"]] == ["P1", "P2", "P3", "P4"]
    assert all(a["holds"] for a in doc["axioms"])


def test_decimal_rendering(tmp_path, capsys):
    _, out, _ = run(capsys, "mp", write(tmp_path, "a", M("1; i")), "--decimal", "--no-verify")
    assert "0.5" in out and "-0.5i" in out
    assert "axiom" not in out


def test_drazin_routes(tmp_path, capsys):
    path = write(tmp_path, "a", M("1; i; 0", "0; 0; 1", "0; 0; 0"))
    outs = []
    for route in ("drazin-cdet", "drazin-rdet", "composition-oracle"):
        code, out, _ = run(capsys, "drazin", path, "--route", route)
        assert code == 0
        outs.append(matrix_part(out))
    assert outs[0] == outs[1] == outs[2]


def test_wdrazin_case_one(capsys):
    code, out, _ = run(capsys, "wdrazin", data("ex1_A"), data("ex1_W"), "--route", "v-route", "--lf", "21")
    assert code == 0
    assert matrix_part(out) == ref_example("ex1_wdrazin")
    assert "# axiom W9: ok" in out


def test_inapplicable_route_is_an_error(capsys):
    code, _, err = run(capsys, "wdrazin", data("ex1_A"), data("ex1_W"), "--route", "weight-left")
    assert code == 1
    assert "full column rank" in err


def test_unknown_route(capsys):
    code, _, err = run(capsys, "solve-left", data("ex1_A"), data("ex1_W"), data("ex1_D"), "--route", "iv")
    assert code == 1
    assert "unknown route" in err


def test_case_one_is_rejected_with_residual(capsys):
    code, out, err = run(capsys, "solve-left", data("ex1_A"), data("ex1_W"), data("ex1_D"))
    assert code == 2
    assert "inconsistent" in err
    blocks = out.split("# best-effort X:\n")
    residual = matrix_part(blocks[0])
    assert not residual.is_zero()
    assert matrix_part(blocks[1]) == ref_example("ex1_X")


def test_inconsistent_json(tmp_path, capsys):
    a, w = load("ex1_A"), load("ex1_W")
    d = write(tmp_path, "d", inconsistent_left_rhs(a, w))
    code, out, _ = run(capsys, "solve-left", data("ex1_A"), data("ex1_W"), d, "--json")
    doc = json.loads(out)
    assert code == 2
    assert doc["status"] == "inconsistent"
    assert not matrix_from_json(doc["residual"]).is_zero()


def test_consistent_left(tmp_path, capsys):
    a, w = load("ex1_A"), load("ex1_W")
    d = consistent_left_rhs(a, w, M("1; 0", "i; 1", "0; k"))
    code, out, _ = run(capsys, "solve-left", data("ex1_A"), data("ex1_W"), write(tmp_path, "d", d), "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["status"] == "consistent"
    assert doc["k"] == [2]
    assert all(doc["checks"].values())


def test_two_sided_case_two_rejected(capsys):
    args = [data(n) for n in ("ex2_A", "ex2_W1", "ex2_D", "ex2_B_corrected", "ex2_W2")]
    code, out, _ = run(capsys, "solve-two-sided", *args)
    assert code == 2
    assert matrix_part(out.split("# best-effort X:\n")[1]) == ref_example("ex2_X_corrected")


def test_det_identity(tmp_path, capsys):
    code, out, _ = run(capsys, "det", write(tmp_path, "h", QMatrix.identity(3)))
    assert code == 0
    assert out.strip().splitlines()[-1] == "1"


def test_det_row_and_column(tmp_path, capsys):
    path = write(tmp_path, "m", M("i; j", "k; i"))
    _, out, _ = run(capsys, "det", path, "--row", "2")
    assert out.strip().splitlines()[-1] == "-1 + i"
    code, _, err = run(capsys, "det", path)
    assert code == 1
    assert "not Hermitian" in err


def test_parse_error_reports_position(tmp_path, capsys):
    p = tmp_path / "bad.mat"
    p.write_text("2 2\n1; 2\n3; q\n")
    code, _, err = run(capsys, "inverse", str(p))
    assert code == 1
    assert "line 3" in err and "column" in err


def test_missing_file(capsys):
    code, _, err = run(capsys, "inverse", "/nonexistent/a.mat")
    assert code == 1


def test_size_cap(tmp_path, capsys):
    path = write(tmp_path, "a", QMatrix.identity(3))
    code, _, err = run(capsys, "inverse", path, "--max-n", "2")
    assert code == 3
    assert "size cap" in err


def test_verify_failure_exit_code(tmp_path, capsys):
    a = write(tmp_path, "a", M("1; i"))
    x = write(tmp_path, "x", M("1", "0"))
    code, out, _ = run(capsys, "verify", "mp", a, x)
    assert code == 4
    assert "FAILED" in out


def test_verify_success(tmp_path, capsys):
    x = write(tmp_path, "x", ref_example("ex1_wdrazin"))
    code, out, _ = run(capsys, "verify", "wdrazin", data("ex1_A"), data("ex1_W"), x)
    assert code == 0
    assert out.count(": ok") == 3


def test_verify_wrong_arity(tmp_path, capsys):
    code, _, _ = run(capsys, "verify", "wdrazin", data("ex1_A"), data("ex1_W"))
    assert code == 1


def test_usage_error_exits_one(capsys):
    with pytest.raises(SystemExit) as info:
        main(["solve-two-sided", "a.mat"])
    assert info.value.code == 1


def test_bad_lf(capsys):
    with pytest.raises(SystemExit) as info:
        main(["wdrazin", data("ex1_A"), data("ex1_W"), "--lf", "13"])
    assert info.value.code == 1


def test_output_is_deterministic(capsys):
    argv = ["wdrazin", data("ex2_A"), data("ex2_W1"), "--json"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_printed_matrix_round_trips(capsys):
    _, out, _ = run(capsys, "wdrazin", data("ex2_A"), data("ex2_W1"), "--no-verify")
    m = matrix_part(out)
    assert parse_matrix(format_matrix(m)) == m
