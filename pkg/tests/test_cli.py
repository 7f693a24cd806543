"""Command-line surface: rendering, formats, exit codes, files, figures."""

import json

import pytest

from qzeta.cli import CliConfig, build_parser, config_from_args, main
from qzeta.qpoly import IntPolynomial
from qzeta.series import QSeries


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


# -- poly ---------------------------------------------------------------------


def test_poly_k2_text(capsys):
    code, out = run(capsys, "poly", "--k", "2")
    assert code == 0
    assert "1 + 4z + z^2" in out
    assert "-1, -7, -12, -6" in out
    assert "-1, 4, -1" in out


def test_poly_k1_text(capsys):
    code, out = run(capsys, "poly", "--k", "1")
    assert code == 0
    assert "even polynomial (degree 0): 1" in out
    assert "1 + z^2" in out


def test_poly_k5_includes_s8_coefficients(capsys):
    code, out = run(capsys, "poly", "--k", "5")
    assert code == 0
    for value in ("19672", "1736668", "19971304", "49441990"):
        assert value in out


def test_poly_even_k_has_no_odd_polynomial(capsys):
    code, out = run(capsys, "poly", "--k", "4")
    assert code == 0
    assert "odd polynomial" not in out


def test_poly_json_round_trip(capsys):
    code, out = run(capsys, "poly", "--k", "3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["k"] == 3
    assert doc["a_table"] == ["-1", "-31", "-180", "-390", "-360", "-120"]
    # byte-identical re-serialization of the polynomial payload
    blob = json.dumps(doc["p_even"])
    back = IntPolynomial.from_json_dict(json.loads(blob))
    assert json.dumps(back.to_json_dict()) == blob
    assert json.dumps(IntPolynomial.from_json_dict(doc["p_odd"]).to_json_dict()) == json.dumps(doc["p_odd"])


def test_poly_csv(capsys):
    code, out = run(capsys, "poly", "--k", "2", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "table,index,value"
    assert "a,0,-1" in lines
    assert "p_even,1,4" in lines


def test_poly_rejects_bad_k(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["poly", "--k", "0"])
    assert exc.value.code == 2


# -- verify -------------------------------------------------------------------


def test_verify_k2_passes(capsys):
    code, out = run(capsys, "verify", "--k", "2", "--order", "40")
    assert code == 0
    assert "status=PASS" in out
    assert "zero=True" in out


def test_verify_k3_json(capsys):
    code, out = run(capsys, "verify", "--k", "3", "--order", "40", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["status"] == "pass"
    assert doc["t_parity"] == "odd"
    # series payload round-trips byte-identically
    blob = json.dumps(doc["t_series"])
    assert json.dumps(QSeries.from_json_dict(json.loads(blob)).to_json_dict()) == blob


def test_verify_csv(capsys):
    code, out = run(capsys, "verify", "--k", "1", "--order", "30", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "key,value"
    assert "status,pass" in lines
    assert any(line.startswith("check:lambert_vs_divisor_sums,") for line in lines)


def test_verify_usage_error_on_small_order():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--k", "4", "--order", "2"])
    assert exc.value.code == 2


# -- count --------------------------------------------------------------------


def test_count_fourk4_table(capsys):
    code, out = run(capsys, "count", "--fourk", "4", "--n-max", "3")
    assert code == 0
    lines = out.splitlines()
    assert any(line.split() == ["1", "4", "4", "4", "yes"] for line in lines)
    assert any(line.split() == ["2", "6", "6", "6", "yes"] for line in lines)
    assert "all rows agree: yes" in out


def test_count_k_flag_is_equivalent(capsys):
    code_a, out_a = run(capsys, "count", "--k", "2", "--n-max", "4", "--format", "csv")
    code_b, out_b = run(capsys, "count", "--fourk", "8", "--n-max", "4", "--format", "csv")
    assert code_a == code_b == 0
    assert out_a == out_b
    assert out_a.splitlines()[0] == "n,series_coefficient,closed_form,brute_force,agree"


def test_count_fourk20_skips_brute_force(capsys):
    code, out = run(capsys, "count", "--fourk", "20", "--n-max", "2", "--format", "csv")
    assert code == 0
    rows = out.strip().splitlines()[1:]
    assert all(row.split(",")[3] == "" for row in rows)


def test_count_json(capsys):
    code, out = run(capsys, "count", "--fourk", "12", "--n-max", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["ok"] is True
    assert doc["rows"][0]["series_coefficient"] == 12


def test_count_rejects_bad_fourk():
    with pytest.raises(SystemExit) as exc:
        main(["count", "--fourk", "6", "--n-max", "3"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["count", "--k", "7", "--n-max", "3"])
    assert exc.value.code == 2


def test_count_requires_exactly_one_selector():
    with pytest.raises(SystemExit) as exc:
        main(["count", "--n-max", "3"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["count", "--k", "1", "--fourk", "4"])
    assert exc.value.code == 2


# -- limit --------------------------------------------------------------------


def test_limit_text_report(capsys):
    code, out = run(capsys, "limit", "--k", "1", "--q-points", "0.5,0.75,0.9")
    assert code == 0
    assert "zeta_recovery" in out
    assert "converging=True" in out


def test_limit_csv_schema(capsys):
    code, out = run(capsys, "limit", "--k", "2", "--q-points", "0.5,0.9", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "q,lhs,target,rel_err"
    assert len(lines) == 3
    assert float(lines[1].split(",")[0]) == 0.5


def test_limit_qgamma_check(capsys):
    code, out = run(capsys, "limit", "--k", "1", "--check", "qgamma", "--q-points", "0.5,0.9", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["check"] == "qgamma"
    assert doc["target"] == pytest.approx(2.4674011002723395)


def test_limit_rejects_q_of_one():
    with pytest.raises(SystemExit) as exc:
        main(["limit", "--k", "1", "--q-points", "0.5,1.0"])
    assert exc.value.code == 2


def test_limit_rejects_garbled_q_points():
    with pytest.raises(SystemExit) as exc:
        main(["limit", "--k", "1", "--q-points", "0.5,banana"])
    assert exc.value.code == 2


def test_limit_plot_writes_figure(tmp_path, capsys):
    target = tmp_path / "limit.png"
    code, out = run(
        capsys, "limit", "--k", "1", "--q-points", "0.5,0.9", "--plot", str(target)
    )
    assert code == 0
    assert target.exists()
    assert target.stat().st_size > 0
    assert str(target) in out


# -- bench --------------------------------------------------------------------


def test_bench_reports_identical_digests(capsys):
    code, out = run(capsys, "bench", "--order", "64")
    assert code == 0
    assert "schoolbook" in out
    assert "karatsuba" in out
    assert "identical across strategies: yes" in out


def test_bench_json_digests_match(capsys):
    code, out = run(capsys, "bench", "--order", "64", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["identical"] is True
    digests = {r["digest"] for r in doc["results"]}
    assert len(digests) == 1
    assert {r["strategy"] for r in doc["results"]} == {"schoolbook", "karatsuba"}


def test_bench_plot_writes_figure(tmp_path, capsys):
    target = tmp_path / "bench.png"
    code, _ = run(capsys, "bench", "--order", "64", "--plot", str(target))
    assert code == 0
    assert target.exists()


def test_bench_rejects_small_order():
    with pytest.raises(SystemExit) as exc:
        main(["bench", "--order", "32"])
    assert exc.value.code == 2


# -- output files ----------------------------------------------------------------


def test_out_writes_file_instead_of_stdout(tmp_path, capsys):
    target = tmp_path / "report.csv"
    code, out = run(
        capsys, "limit", "--k", "1", "--q-points", "0.5,0.9",
        "--format", "csv", "--out", str(target),
    )
    assert code == 0
    assert out == ""
    content = target.read_text()
    assert content.startswith("q,lhs,target,rel_err")


def test_determinism_of_repeated_runs(capsys):
    _, first = run(capsys, "verify", "--k", "2", "--order", "30", "--format", "json")
    _, second = run(capsys, "verify", "--k", "2", "--order", "30", "--format", "json")
    assert first == second


# -- invocation record -------------------------------------------------------------


def test_config_defaults_are_stable():
    parser = build_parser()
    cfg = config_from_args(parser.parse_args(["verify", "--k", "3"]))
    assert cfg == CliConfig(subcommand="verify", fmt="text", out=None, k=3, order=200)
    cfg = config_from_args(parser.parse_args(["bench"]))
    assert cfg.order == 512
    assert cfg.plot is None
    cfg = config_from_args(parser.parse_args(["count", "--fourk", "8"]))
    assert cfg.n_max == 20
    assert cfg.k is None and cfg.fourk == 8


def test_config_parses_q_point_list():
    parser = build_parser()
    cfg = config_from_args(parser.parse_args(["limit", "--k", "1", "--q-points", "0.5,0.75"]))
    assert cfg.q_points == (0.5, 0.75)
    assert cfg.check == "recovery"
    cfg = config_from_args(parser.parse_args(["limit", "--k", "1"]))
    assert cfg.q_points is None
