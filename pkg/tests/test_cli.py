import io
import json
import math
import subprocess
import sys

import jsonschema
import pytest

from eupbounds.cli import main
from eupbounds.records import load_schema, parse_csv, render_csv


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def csv_rows(text):
    header, rows, comments = parse_csv(text)
    return [dict(zip(header, row)) for row in rows], comments


# ----------------------------------------------------------------- bound

def test_bound_flat_slit_product():
    code, out, err = run_cli("bound", "--dim", "1", "--alpha", "0", "--dx", "1")
    assert code == 0 and err == ""
    rows, _ = csv_rows(out)
    assert float(rows[0]["product"]) == pytest.approx(math.pi, abs=1e-12)
    assert rows[0]["regime"] == "flat-limit"


def test_bound_ball_at_max_radius_degenerates():
    # decimal rendering of pi/2 snaps onto the closed-interval endpoint
    code, out, _ = run_cli("bound", "--dim", "3", "--alpha", "1",
                           "--radius", "1.5707963268")
    assert code == 0
    rows, _ = csv_rows(out)
    assert float(rows[0]["product"]) == 0.0
    assert rows[0]["degenerate"] == "true"


def test_bound_hemisphere_cap():
    code, out, _ = run_cli("bound", "--dim", "2", "--a", "1",
                           "--theta", repr(math.pi / 2))
    assert code == 0
    rows, _ = csv_rows(out)
    assert float(rows[0]["lambda1"]) == pytest.approx(2.0, abs=1e-10)


def test_bound_cap_alpha_convention():
    _, out_alpha, _ = run_cli("bound", "--dim", "2", "--alpha", "0.25",
                              "--theta", "1.0")
    _, out_a, _ = run_cli("bound", "--dim", "2", "--a", "1.0", "--theta", "1.0")
    rows_alpha, _ = csv_rows(out_alpha)
    rows_a, _ = csv_rows(out_a)
    assert rows_alpha[0]["lambda1"] == rows_a[0]["lambda1"]


# ------------------------------------------------------------- exit codes

def test_usage_error_exit_1():
    code, out, err = run_cli("bound", "--dim", "1", "--alpha", "0")
    assert code == 1 and out == ""
    assert err.startswith("EUP-ERR 1 ")
    assert "\n" not in err.strip()


def test_domain_error_exit_2():
    code, out, err = run_cli("bound", "--dim", "1", "--alpha", "-1", "--dx", "1")
    assert code == 2 and out == ""
    assert err.startswith("EUP-ERR 2 ")


def test_unknown_flag_exit_1():
    code, _, err = run_cli("bound", "--dim", "1", "--nope", "3")
    assert code == 1
    assert err.startswith("EUP-ERR 1 ")


def test_cap_theta_out_of_domain_exit_2():
    code, _, err = run_cli("bound", "--dim", "2", "--a", "1", "--theta", "3.1")
    assert code == 2
    assert err.startswith("EUP-ERR 2 ")


# ------------------------------------------------------------------ scans

def test_scan_product_nondecreasing_in_width():
    code, out, _ = run_cli("scan", "--dim", "1", "--sweep", "dx:log:0.1:10:25",
                           "--alpha", "1")
    assert code == 0
    rows, comments = csv_rows(out)
    products = [float(r["product"]) for r in rows]
    assert all(b >= a for a, b in zip(products, products[1:]))
    assert comments[-1].startswith("meta warnings=0")


def test_scan_cap_root_strictly_decreasing():
    code, out, _ = run_cli("scan", "--dim", "2", "--sweep", "theta:0.1:2.9:20",
                           "--a", "1")
    assert code == 0
    rows, _ = csv_rows(out)
    roots = [float(r["nu1"]) for r in rows]
    assert all(b < a for a, b in zip(roots, roots[1:]))


def test_scan_hyperbolic_sigma_decreases_to_floor():
    code, out, _ = run_cli("scan", "--dim", "3", "--sweep", "radius:1:50:20",
                           "--alpha", "-0.25")
    assert code == 0
    rows, _ = csv_rows(out)
    sigmas = [float(r["sigma_p_min"]) for r in rows]
    assert all(b < a for a, b in zip(sigmas, sigmas[1:]))
    assert sigmas[-1] > 1.0
    assert sigmas[-1] - 1.0 < sigmas[0] - 1.0


def test_scan_into_invalid_domain_flags_rows():
    code, out, _ = run_cli("scan", "--dim", "3", "--sweep", "radius:1:3:5",
                           "--alpha", "1")
    assert code == 0
    rows, comments = csv_rows(out)
    flagged = [r for r in rows if r["status"] == "domain-error"]
    assert flagged and all(r["sigma_p_min"] == "" for r in flagged)
    assert f"warnings={len(flagged)}" in comments[-1]


def test_scan_usage_errors():
    code, _, err = run_cli("scan", "--dim", "1", "--sweep", "bogus:0:1:5",
                           "--alpha", "1")
    assert code == 1 and err.startswith("EUP-ERR 1 ")
    code, _, err = run_cli("scan", "--dim", "1", "--sweep", "dx:0:1", "--alpha", "1")
    assert code == 1
    code, _, err = run_cli("scan", "--dim", "1", "--sweep", "dx:log:0:1:5",
                           "--alpha", "1")
    assert code == 1


# ------------------------------------------------------------------ modes

def test_modes_samples_and_summary():
    code, out, _ = run_cli("modes", "--dim", "1", "--alpha", "1", "--dx", "2",
                           "--n", "1", "--samples", "64")
    assert code == 0
    rows, _ = csv_rows(out)
    samples = [r for r in rows if r["kind"] == "sample"]
    summary = [r for r in rows if r["kind"] == "summary"]
    assert len(samples) == 64 and len(summary) == 1
    assert float(samples[0]["psi"]) == 0.0
    assert float(samples[-1]["psi"]) == 0.0
    assert abs(float(summary[0]["norm"]) - 1.0) < 1e-8
    assert float(summary[0]["p_n"]) == pytest.approx(2.0, rel=1e-12)


def test_modes_even_mode_vanishes_at_center():
    code, out, _ = run_cli("modes", "--dim", "1", "--alpha", "1", "--dx", "2",
                           "--n", "2", "--samples", "65")
    rows, _ = csv_rows(out)
    samples = [r for r in rows if r["kind"] == "sample"]
    assert float(samples[32]["x"]) == 0.0
    assert float(samples[32]["psi"]) == 0.0


# ------------------------------------------------------------- validation

def test_validate_all_passes_small_grid():
    code, out, _ = run_cli("validate", "--suite", "all", "--grid", "1000")
    assert code == 0
    rows, _ = csv_rows(out)
    assert rows and all(r["passed"] == "true" for r in rows)
    assert {r["suite"] for r in rows} == {"1d", "2d", "3d"}


def test_validate_single_suite():
    code, out, _ = run_cli("validate", "--suite", "2d", "--grid", "1000")
    assert code == 0
    rows, _ = csv_rows(out)
    assert {r["suite"] for r in rows} == {"2d"}


def test_validate_failure_exit_3_still_reports_everything():
    # a deliberately coarse grid cannot hit the stated tolerances
    code, out, _ = run_cli("validate", "--suite", "1d", "--grid", "40")
    assert code == 3
    rows, _ = csv_rows(out)
    assert any(r["passed"] == "false" for r in rows)
    assert len(rows) == 72          # every check is still listed


# ---------------------------------------------------- formats, determinism

def test_csv_round_trip_byte_identical():
    _, out, _ = run_cli("scan", "--dim", "3", "--sweep", "radius:1:3:7",
                        "--alpha", "1")
    header, rows, comments = parse_csv(out)
    assert render_csv(header, rows, comments) == out


def test_repeated_runs_byte_identical():
    args = ("scan", "--dim", "1", "--sweep", "dx:0.5:5:9", "--alpha", "0.3")
    _, first, _ = run_cli(*args)
    _, second, _ = run_cli(*args)
    assert first == second


def test_json_records_validate_against_schema():
    schema = load_schema()
    for args in (
        ("bound", "--dim", "1", "--alpha", "0", "--dx", "1", "--format", "json"),
        ("bound", "--dim", "3", "--alpha", "-0.25", "--radius", "2", "--format", "json"),
        ("scan", "--dim", "3", "--sweep", "radius:1:3:5", "--alpha", "1",
         "--format", "json"),
        ("modes", "--dim", "1", "--alpha", "1", "--dx", "2", "--n", "1",
         "--samples", "8", "--format", "json"),
        ("validate", "--suite", "3d", "--grid", "1000", "--format", "json"),
    ):
        code, out, _ = run_cli(*args)
        assert code == 0
        lines = out.splitlines()
        assert lines
        for line in lines:
            jsonschema.validate(json.loads(line), schema)


def test_format_from_environment(monkeypatch):
    monkeypatch.setenv("EUP_DEFAULT_FORMAT", "json")
    _, out, _ = run_cli("bound", "--dim", "1", "--alpha", "0", "--dx", "1")
    assert out.startswith('{"command":"bound"')
    monkeypatch.setenv("EUP_DEFAULT_FORMAT", "xml")
    code, _, err = run_cli("bound", "--dim", "1", "--alpha", "0", "--dx", "1")
    assert code == 1 and err.startswith("EUP-ERR 1 ")


def test_flag_overrides_environment(monkeypatch):
    monkeypatch.setenv("EUP_DEFAULT_FORMAT", "json")
    _, out, _ = run_cli("bound", "--dim", "1", "--alpha", "0", "--dx", "1",
                        "--format", "csv")
    assert out.startswith("command,")


def test_console_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "eupbounds", "bound", "--dim", "1",
         "--alpha", "0", "--dx", "1"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("command,")
    proc = subprocess.run(
        [sys.executable, "-m", "eupbounds", "bound", "--dim", "3",
         "--alpha", "1", "--radius", "9"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 2
    assert proc.stderr.startswith("EUP-ERR 2 ")
