"""End-to-end tests for the flagvar command line, driven through main()
so exit codes and output land exactly as a shell would see them."""

import json

import pytest

from flagvar import cli


def run(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- scal ------------------------------------------------------------------

def test_scal_g2_passes(capsys):
    code, out, _ = run(capsys, ["scal", "--family", "g2"])
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] == "PASS"
    sources = {e["source"] for e in payload["entries"]}
    assert sources == {"wang-ziller", "closed-form"}


def test_scal_sp_reports_failure(capsys):
    code, out, _ = run(capsys, ["scal", "--family", "c"])
    assert code == 1
    payload = json.loads(out)
    assert payload["verdict"] == "FAIL"
    assert any("t^2 coefficient" in note for note in payload["ledger"])


def test_scal_so_odd_n2_passes_but_n4_fails(capsys):
    code, _, _ = run(capsys, ["scal", "--family", "so-odd", "--n", "2"])
    assert code == 0
    capsys.readouterr()
    code, _, _ = run(capsys, ["scal", "--family", "so-odd", "--n", "4"])
    assert code == 1


# -- spectrum --------------------------------------------------------------

def test_spectrum_json_schema(capsys):
    code, out, _ = run(capsys, ["spectrum", "--family", "su", "--n", "2",
                                "--cutoff", "3"])
    assert code == 0
    payload = json.loads(out)
    assert payload["family"] == "su"
    assert payload["n"] == 2
    assert payload["m"] == 6
    origins = {e["origin"] for e in payload["entries"]}
    assert origins == {"total", "base"}
    for entry in payload["entries"]:
        num, _, den = entry["value"].partition("/")
        assert num.lstrip("-").isdigit() and den.isdigit()
    base = [e for e in payload["entries"] if e["origin"] == "base"]
    assert base[0]["value"] == "1/1"
    assert base[0]["mult"] == 8


def test_spectrum_csv(capsys):
    code, out, _ = run(capsys, ["spectrum", "--family", "g2",
                                "--cutoff", "2", "--format", "csv"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "origin,value,value_float,mult,label"
    assert any(line.startswith("base,7/6,") for line in lines[1:])


# -- instants --------------------------------------------------------------

def test_instants_su3_csv_two_rows(capsys):
    code, out, _ = run(capsys, ["instants", "--family", "su", "--n", "2",
                                "--tmin", "0.2", "--format", "csv"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "beta,u,t,t_error,mult,is_bifurcation"
    assert len(lines) == 3
    assert lines[1].startswith("1/1,(-27+3*sqrt(85))/3,0.46855571418")
    assert lines[2].startswith("8/3,")


def test_instants_json_exact_surd(capsys):
    code, out, _ = run(capsys, ["instants", "--family", "so-odd", "--n", "2",
                                "--tmin", "0.6"])
    assert code == 0
    payload = json.loads(out)
    assert len(payload["instants"]) == 1
    inst = payload["instants"][0]
    assert inst["beta"] == "2/3"
    assert inst["mult"] == 5
    assert "sqrt(5)" in inst["u"]
    assert abs(inst["t"] - 0.6871214994450251) < 1e-9


# -- morse -----------------------------------------------------------------

def test_morse_csv_grid(capsys):
    code, out, _ = run(capsys, ["morse", "--family", "su", "--tmin", "0.1",
                                "--format", "csv"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "t,t_exact,index"
    assert len(lines) == 102
    assert lines[1] == "0.1,1/10,440"
    assert lines[-1] == "1.0,1/1,0"


def test_morse_json_index_nondecreasing(capsys):
    code, out, _ = run(capsys, ["morse", "--family", "g2", "--tmin", "0.11"])
    assert code == 0
    payload = json.loads(out)
    indices = [row["index"] for row in payload["grid"]]
    assert indices == sorted(indices, reverse=True)
    assert indices[-1] == 0


# -- figure ----------------------------------------------------------------

def test_figure_csv_columns(capsys):
    code, out, _ = run(capsys, ["figure", "--family", "su", "--n", "2",
                                "--tmin", "0.1", "--format", "csv"])
    assert code == 0
    lines = out.splitlines()
    header = lines[0].split(",")
    assert header[0] == "t"
    assert header[1] == "scal_over_m_minus_1"
    assert "const_1" in header
    assert "lam_1_1" in header
    assert len(lines) > 100


def test_figure_svg_marks_five_instants(capsys, tmp_path):
    target = tmp_path / "figure.svg"
    code, out, _ = run(capsys, ["figure", "--family", "su", "--n", "2",
                                "--tmin", "0.1", "--format", "svg",
                                "--out", str(target)])
    assert code == 0
    svg = target.read_text()
    assert svg.startswith("<svg")
    assert svg.count("stroke-dasharray") == 5


# -- verify ----------------------------------------------------------------

def test_verify_so_even_exits_zero_with_ledger(capsys):
    code, out, _ = run(capsys, ["verify", "--family", "d", "--n", "4"])
    assert code == 0
    assert "VERIFY: PASS" in out
    assert "prefactor 1/(2n-1) corrected to 1/(2(n-1))" in out
    assert "FAIL" not in out.replace("VERIFY: PASS", "")


def test_verify_all_families_pass(capsys):
    code, out, _ = run(capsys, ["verify"])
    assert code == 0
    assert "VERIFY: PASS" in out
    lines = out.splitlines()
    checks = [l for l in lines if " PASS " in l or l.endswith("PASS")]
    assert len(checks) > 40
    # Every catalogued discrepancy family shows up in the ledger lines.
    ledger = "\n".join(l for l in lines if "ledger" in l)
    for needle in ("first eigenvalue", "prefactor", "radicand",
                   "cross coefficient", "bracket table"):
        assert needle in ledger


def test_verify_single_family_mentions_only_it(capsys):
    code, out, _ = run(capsys, ["verify", "--family", "g2"])
    assert code == 0
    assert "[g2" in out
    assert "[su" not in out


# -- failure and usage paths ----------------------------------------------

def test_usage_error_bad_tmin(capsys):
    code, _, err = run(capsys, ["instants", "--family", "su", "--tmin", "2"])
    assert code == 2
    assert "t_min" in err


def test_usage_error_bad_cutoff(capsys):
    code, _, err = run(capsys, ["spectrum", "--family", "su",
                                "--cutoff", "0"])
    assert code == 2
    assert "cutoff" in err


def test_usage_error_bad_phi1(capsys):
    code, _, err = run(capsys, ["figure", "--family", "su", "--phi1", "0"])
    assert code == 2


def test_unknown_family_rejected_by_argparse(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["scal", "--family", "e8"])
    assert exc.value.code == 2


def test_unknown_subcommand_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["frobnicate"])
    assert exc.value.code == 2


# -- file output -----------------------------------------------------------

def test_out_writes_file_and_keeps_stdout_quiet(capsys, tmp_path):
    target = tmp_path / "instants.json"
    code, out, _ = run(capsys, ["instants", "--family", "su", "--n", "2",
                                "--tmin", "0.2", "--out", str(target)])
    assert code == 0
    assert out == ""
    payload = json.loads(target.read_text())
    assert len(payload["instants"]) == 2


def test_alias_families_match_canonical(capsys):
    code_alias, out_alias, _ = run(capsys, ["scal", "--family", "a",
                                            "--n", "3"])
    code_full, out_full, _ = run(capsys, ["scal", "--family", "su",
                                          "--n", "3"])
    assert code_alias == code_full == 0
    assert out_alias == out_full
