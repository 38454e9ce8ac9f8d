import json
import math

import numpy as np
import pytest

from q1dhydrogen.cli import EXIT_NON_CONVERGENCE, EXIT_OK, EXIT_USAGE, main


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_table_single_row(capsys):
    code, out, _ = run(["table", "--n-max", "1"], capsys)
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0] == "n,S_rho,S_gamma_o,S_gamma_s,sum_o,sum_s"
    assert lines[1] == "1,1.1544,1.2242,0.5575,2.3786,1.7119"


def test_table_row_sum_identity_at_printed_precision(capsys):
    code, out, _ = run(["table", "--n-max", "10"], capsys)
    assert code == EXIT_OK
    for line in out.strip().splitlines()[1:]:
        _, s_rho, s_go, s_gs, sum_o, sum_s = line.split(",")
        assert float(sum_o) == float(f"{float(s_rho) + float(s_go):.4f}")
        assert float(sum_s) == float(f"{float(s_rho) + float(s_gs):.4f}")


def test_table_json(capsys):
    code, out, _ = run(["table", "--n-max", "3", "--format", "json"], capsys)
    assert code == EXIT_OK
    rows = json.loads(out)
    assert len(rows) == 3
    assert set(rows[0]) == {"n", "s_rho", "s_gamma_o", "s_gamma_s", "sum_o", "sum_s"}
    for row in rows:
        assert row["sum_o"] == row["s_rho"] + row["s_gamma_o"]


def test_table_usage_errors(capsys):
    assert run(["table", "--n-max", "0"], capsys)[0] == EXIT_USAGE
    assert run(["table", "--n-max", "33"], capsys)[0] == EXIT_USAGE
    assert run(["table", "--n-max", "2", "--tol", "-1"], capsys)[0] == EXIT_USAGE


def test_determinism(capsys):
    first = run(["table", "--n-max", "4"], capsys)
    second = run(["table", "--n-max", "4"], capsys)
    assert first == second
    fig1 = run(["figure", "--id", "4", "--n", "1,2", "--grid", "0:1:0.01"], capsys)
    fig2 = run(["figure", "--id", "4", "--n", "1,2", "--grid", "0:1:0.01"], capsys)
    assert fig1 == fig2


def test_figure_node_features(capsys):
    # the first excited state's position density vanishes at x = 2
    code, out, _ = run(["figure", "--id", "1", "--n", "2", "--grid", "1.5:2.5:0.01"], capsys)
    assert code == EXIT_OK
    rows = [line.split(",") for line in out.strip().splitlines()[1:]]
    values = {float(r[0]): float(r[1]) for r in rows}
    assert values[2.0] == 0.0
    # the trigonometric momentum density touches zero at p = 0.5 and has
    # its first hump near p = 0.18
    code, out, _ = run(["figure", "--id", "4", "--n", "2", "--grid", "0:1:0.002"], capsys)
    rows = [line.split(",") for line in out.strip().splitlines()[1:]]
    grid = np.array([float(r[0]) for r in rows])
    vals = np.array([float(r[1]) for r in rows])
    assert vals[np.argmin(np.abs(grid - 0.5))] < 1e-10
    first_hump = grid[np.argmax(vals * (grid < 0.5))]
    assert abs(first_hump - 0.18) <= 0.01


def test_figure_lorentz_origin(capsys):
    code, out, _ = run(["figure", "--id", "2", "--n", "1", "--grid", "0:0.1:0.1"], capsys)
    assert code == EXIT_OK
    first_value = float(out.strip().splitlines()[1].split(",")[1])
    assert first_value == pytest.approx(2.0 / math.pi, rel=1e-12)


def test_figure_usage_errors(capsys):
    assert run(["figure", "--id", "5"], capsys)[0] == EXIT_USAGE
    assert run(["figure", "--id", "1", "--grid", "0:1:-0.1"], capsys)[0] == EXIT_USAGE
    assert run(["figure", "--id", "1", "--grid", "nonsense"], capsys)[0] == EXIT_USAGE
    assert run(["figure", "--id", "1", "--grid=-1:1:0.5"], capsys)[0] == EXIT_USAGE
    assert run(["figure", "--id", "1", "--n", "0"], capsys)[0] == EXIT_USAGE


def test_figure_json(capsys):
    code, out, _ = run(["figure", "--id", "3", "--n", "1", "--grid=-1:1:0.5",
                        "--format", "json"], capsys)
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["coordinate"] == [-1.0, -0.5, 0.0, 0.5, 1.0]
    assert payload["value_n=1"][2] == 0.0


def test_eval_values(capsys):
    code, out, _ = run(["eval", "psi", "--n", "1", "--x", "1"], capsys)
    assert code == EXIT_OK
    assert float(out) == pytest.approx(2.0 / math.e, abs=1e-15)
    code, out, _ = run(["eval", "phi-cheb", "--n", "1", "--p", "1"], capsys)
    assert float(out) == pytest.approx(0.7978845608028655, abs=1e-15)
    code, out, _ = run(["eval", "phi-lorentz", "--n", "1", "--p", "1"], capsys)
    assert complex(out) == pytest.approx(-0.3989422804014327j, abs=1e-12)
    code, out, _ = run(["eval", "rho", "--n", "1", "--x", "1"], capsys)
    assert float(out) == pytest.approx(4.0 * math.exp(-2.0), abs=1e-15)
    code, out, _ = run(["eval", "psi-1d", "--n", "1", "--x", "-1", "--parity", "odd"], capsys)
    assert float(out) == pytest.approx(-math.sqrt(2.0) / math.e, abs=1e-15)
    code, out, _ = run(["eval", "phi-1d", "--n", "2", "--p", "0.5", "--branch", "-",
                        "--phase", "plain"], capsys)
    assert complex(out) == pytest.approx(
        math.sqrt(4 / math.pi) * np.exp(-2j * math.atan(1.0)) / 2.0, abs=1e-12)


def test_eval_usage_errors(capsys):
    # outside the half-line domain
    assert run(["eval", "psi", "--n", "1", "--x", "-1"], capsys)[0] == EXIT_USAGE
    assert run(["eval", "phi-cheb", "--n", "1", "--p", "-1"], capsys)[0] == EXIT_USAGE
    # missing coordinate flag
    assert run(["eval", "psi", "--n", "1"], capsys)[0] == EXIT_USAGE
    assert run(["eval", "phi-cheb", "--n", "1"], capsys)[0] == EXIT_USAGE
    # invalid quantum number
    assert run(["eval", "psi", "--n", "0", "--x", "1"], capsys)[0] == EXIT_USAGE


def test_verify_fast_suites_pass(capsys):
    for suite in ("identities", "normalization", "bbm"):
        code, out, _ = run(["verify", "--suite", suite], capsys)
        assert code == EXIT_OK, f"{suite} failed:\n{out}"
    code, out, _ = run(["verify", "--suite", "identities"], capsys)
    assert "node_count_is_n_minus_1: pass" in out
    assert "imag_part_matches_phi_lorentz: pass" in out


def test_verify_bbm_reports_transition(capsys):
    code, out, _ = run(["verify", "--suite", "bbm"], capsys)
    assert code == EXIT_OK
    assert "bbm_sum_q1d n=1: violated" in out
    assert "bbm_sum_q1d n=3: violated" in out
    assert "bbm_sum_q1d n=4: satisfied" in out
    assert "bbm_sum_q1d n=10: satisfied" in out


def test_verify_table_suite_flags_known_discrepancies(capsys):
    code, out, _ = run(["verify", "--suite", "table"], capsys)
    assert code == EXIT_OK, out
    assert "table_n1_sum_o: warning" in out
    assert "table_n2_sum_s: warning" in out
    assert "table_n9_s_gamma_o: warning" in out
    assert "table_cells_match_published_values: pass" in out


def test_verify_transforms_suite(capsys):
    code, out, _ = run(["verify", "--suite", "transforms"], capsys)
    assert code == EXIT_OK, out
    assert "adjudication_pattern_n2: pass" in out
    assert "phi_1d[-,plain-phase] vs fullline_by_parity: mismatch" in out
    assert "parseval_sine_n_max2: pass" in out


def test_verify_json_format(capsys):
    code, out, _ = run(["verify", "--suite", "transforms", "--format", "json"], capsys)
    assert code == EXIT_OK
    payload = json.loads(out)
    assert all(check["passed"] for check in payload["checks"])
    by_candidate = {(rep["candidate"], rep["n"]): rep for rep in payload["correspondence"]}
    rep = by_candidate[("phi_lorentz", 2)]
    assert rep["verdict"] == "match"
    assert rep["fitted_global_factor"][0] == pytest.approx(1.0, abs=1e-6)
    assert set(rep) == {"candidate", "transform", "n", "grid", "max_abs_deviation",
                        "fitted_global_factor", "verdict"}


def test_verify_rejects_unknown_suite(capsys):
    assert run(["verify", "--suite", "everything"], capsys)[0] == EXIT_USAGE


def test_table_non_convergence_exit_code(capsys, monkeypatch):
    import q1dhydrogen.cli as cli
    from q1dhydrogen.quadrature import NonConvergence

    def explode(n_max, abs_tol):
        raise NonConvergence("cell n=7 column=s_gamma_s: budget exhausted")

    monkeypatch.setattr(cli, "entropy_table", explode)
    code, _, err = run(["table", "--n-max", "7"], capsys)
    assert code == EXIT_NON_CONVERGENCE
    assert "n=7" in err and "s_gamma_s" in err


def test_help_exits_zero(capsys):
    assert run(["--help"], capsys)[0] == EXIT_OK
