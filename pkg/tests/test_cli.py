import json
import subprocess
import sys

import numpy as np
import pytest

from twrc.cli import main, parse_quantization
from twrc.discrete import format_channel
from twrc.presets import PRESETS

from conftest import noiseless_dm


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def csv_points(text):
    lines = text.strip().splitlines()
    assert lines[0] == "r1,r2"
    return np.array([[float(v) for v in ln.split(",")] for ln in lines[1:]])


def dominates_point(pts, target, tol):
    return bool(np.any((pts[:, 0] >= target[0] - tol) & (pts[:, 1] >= target[1] - tol)))


@pytest.fixture
def noiseless_file(tmp_path):
    path = tmp_path / "noiseless.txt"
    path.write_text(format_channel(noiseless_dm()))
    return str(path)


def test_presets_match_captions():
    assert PRESETS["fig-asym-pdf"].channel.as_tuple() == (20, 20, 20, 2, 30, 6)
    assert PRESETS["fig-sym-pdf"].channel.as_tuple() == (20, 20, 20, 12, 12, 6)
    assert PRESETS["fig-asym-combined"].channel.as_tuple() == (50, 40, 20, 20, 40, 15)
    assert PRESETS["fig-sym-combined"].channel.as_tuple() == (20, 20, 20, 8, 8, 6)


def test_region_partial_df_reaches_quoted_point(capsys):
    code, out, _ = run(capsys, "region", "--preset", "fig-asym-pdf", "--scheme", "partial-df")
    assert code == 0
    pts = csv_points(out)
    assert dominates_point(pts, (0.58, 1.47), 0.01)
    # 9 significant digits
    assert all(len(v.lstrip("-0.").replace(".", "").split("e")[0]) <= 9 for v in out.split()[1].split(","))


@pytest.mark.parametrize("preset", sorted(PRESETS))
def test_region_df_is_one_pentagon(capsys, preset):
    code, out, _ = run(capsys, "region", "--preset", preset, "--scheme", "df", "--resolution", "101")
    assert code == 0
    pts = csv_points(out)
    _, out, _ = run(capsys, "point", "--preset", preset, "--scheme", "df")
    doc = json.loads(out)
    r2, s = doc["r2_max"], doc["sum_max"]
    # every sample sits on the pentagon's upper-right edge
    assert np.allclose(pts[:, 1], np.minimum(r2, s - pts[:, 0]), atol=1e-8)
    assert pts[-1, 0] == pytest.approx(doc["r1_max"], abs=1e-8)
    # Pareto corners (0, r2), (s - r2, r2), (r1, s - r1) plus the axis drop: at most 4
    corners = {(0.0, r2), (max(s - r2, 0.0), r2), (doc["r1_max"], min(r2, s - doc["r1_max"])), (doc["r1_max"], 0.0)}
    assert len(corners) <= 4


def test_region_combined_sym(capsys):
    code, out, _ = run(capsys, "region", "--preset", "fig-sym-combined", "--scheme", "combined", "--grid", "51")
    assert code == 0
    assert dominates_point(csv_points(out), (0.69, 1.00), 0.02)


def test_region_json_has_params_and_round_trips(capsys, tmp_path):
    dest = tmp_path / "r.json"
    code, out, _ = run(capsys, "region", "--preset", "fig-asym-pdf", "--scheme", "partial-df", "--grid", "11", "--format", "json", "--out", str(dest))
    assert code == 0 and out == ""
    doc = json.loads(dest.read_text())
    assert doc["scheme"] == "partial-df" and doc["grid"] == 11
    assert doc["channel"]["n2"] == 30.0
    assert set(doc["points"][0]) == {"r1", "r2", "alpha", "beta"}
    code, out, _ = run(capsys, "region", "--preset", "fig-asym-pdf", "--scheme", "partial-df", "--grid", "11")
    pts = csv_points(out)
    again = np.array([[p["r1"], p["r2"]] for p in doc["points"]])
    assert np.allclose(again, pts, atol=1e-8, rtol=0)
    # the maximizing parameters reproduce the point
    from twrc import GaussianTwrc, SplitParams, partial_decode_forward
    from twrc.geometry import contains

    ch = GaussianTwrc(**doc["channel"])
    for p in doc["points"][::7]:
        cs = partial_decode_forward(ch, SplitParams(p["alpha"], p["beta"]))
        assert contains(cs, (p["r1"], p["r2"]), tol=1e-12)


def test_json_round_trip_exact(capsys):
    from twrc.presets import figure_regions  # noqa: F401
    from twrc.sweep import region_sweep

    code, out, _ = run(capsys, "region", "--preset", "fig-sym-pdf", "--scheme", "partial-df", "--grid", "21", "--resolution", "64", "--format", "json")
    doc = json.loads(out)
    b = region_sweep(PRESETS["fig-sym-pdf"].channel, "partial-df", 21).compute_boundary(64)
    got = np.array([[p["r1"], p["r2"]] for p in doc["points"]])
    want = np.column_stack([b.grid, b.heights])[np.isfinite(b.heights)]
    assert np.max(np.abs(got - want)) <= 1e-12


def test_region_is_deterministic(tmp_path):
    outs = []
    for name in ("a.csv", "b.csv"):
        dest = tmp_path / name
        assert main(["region", "--preset", "fig-asym-combined", "--scheme", "combined", "--grid", "11", "--out", str(dest)]) == 0
        outs.append(dest.read_bytes())
    assert outs[0] == outs[1]


def test_point_partial_df(capsys):
    code, out, _ = run(capsys, "point", "--preset", "fig-asym-pdf", "--scheme", "partial-df", "--alpha", "1", "--beta", "0.5")
    doc = json.loads(out)
    assert code == 0
    assert doc["r1_max"] == pytest.approx(0.585, abs=5e-4)
    assert doc["alpha"] == 1.0 and doc["beta"] == 0.5


def test_point_combined_has_i_values(capsys):
    code, out, _ = run(capsys, "point", "--preset", "fig-asym-combined", "--scheme", "combined", "--alpha", "0.5", "--beta", "0", "--gamma", "0")
    doc = json.loads(out)
    assert (doc["r1_max"], doc["r2_max"]) == pytest.approx((0.681, 0.857), abs=1e-3)
    assert sorted(doc["i_values"]) == [f"i{k}" for k in range(1, 10)]


def test_point_zero_powers(capsys):
    code, out, _ = run(capsys, "point", "--p1", "0", "--p2", "0", "--pr", "0", "--n1", "1", "--n2", "1", "--nr", "1", "--scheme", "combined")
    doc = json.loads(out)
    assert (doc["r1_max"], doc["r2_max"], doc["sum_max"]) == (0.0, 0.0, 0.0)


def test_point_warns_on_ignored_gamma(capsys):
    code, out, err = run(capsys, "point", "--preset", "fig-asym-pdf", "--scheme", "partial-df", "--gamma", "0.3")
    assert code == 0
    assert "--gamma has no effect" in err
    assert "gamma" not in json.loads(out)


def test_point_cutset_reports_unbounded_sum(capsys):
    _, out, _ = run(capsys, "point", "--preset", "fig-sym-combined", "--scheme", "cutset")
    assert json.loads(out)["sum_max"] is None


@pytest.mark.parametrize(
    "argv, verdict",
    [
        (["--preset", "fig-asym-pdf"], True),
        (["--preset", "fig-sym-pdf"], False),
        (["--p1", "1", "--p2", "1", "--pr", "1", "--n1", "1", "--n2", "1", "--nr", "1"], True),
    ],
)
def test_check_improvement(capsys, argv, verdict):
    code, out, _ = run(capsys, "check-improvement", *argv)
    assert code == 0
    assert out.strip().splitlines()[-1].endswith(str(verdict).lower())
    _, out, _ = run(capsys, "check-improvement", *argv, "--format", "json")
    assert json.loads(out)["partial_df_strictly_better"] is verdict


def test_check_improvement_first_disjunct_text(capsys):
    _, out, _ = run(capsys, "check-improvement", "--preset", "fig-asym-pdf")
    assert "6 > 2 -> true" in out


def test_dm_noiseless(capsys, noiseless_file):
    code, out, _ = run(capsys, "dm", "--channel-file", noiseless_file, "--quantization", "1/2", "--resolution", "21")
    assert code == 0
    assert dominates_point(csv_points(out), (1.0, 1.0), 1e-9)


def test_dm_constant_channel(capsys, tmp_path):
    path = tmp_path / "const.txt"
    path.write_text("2 2 2 1 1 1\n" + "1\n" * 8)
    code, out, _ = run(capsys, "dm", "--channel-file", str(path), "--u-size", "1")
    assert code == 0
    assert np.all(csv_points(out) == 0.0)


def test_dm_nesting(capsys, noiseless_file):
    _, coarse, _ = run(capsys, "dm", "--channel-file", noiseless_file, "--quantization", "1/2", "--format", "json")
    _, fine, _ = run(capsys, "dm", "--channel-file", noiseless_file, "--quantization", "1/4", "--u-size", "1", "--format", "json")
    _, fine2, _ = run(capsys, "dm", "--channel-file", noiseless_file, "--quantization", "1/4", "--format", "json")
    a = json.loads(coarse)["points"]
    b = np.array([[p["r1"], p["r2"]] for p in json.loads(fine2)["points"]])
    for p in a:
        assert dominates_point(b, (p["r1"], p["r2"]), 1e-12)
    assert json.loads(fine)["u_size"] == 1


def test_dm_parse_error_has_line_number(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("1 1 1 1 1 2\n0.5 0.7\n")
    code, _, err = run(capsys, "dm", "--channel-file", str(path))
    assert code == 2
    assert "line 2" in err


def test_dm_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "dm", "--channel-file", str(tmp_path / "nope.txt"))
    assert code == 2 and "cannot read" in err


def test_dm_resource_cap(capsys, noiseless_file, monkeypatch):
    monkeypatch.setenv("TWRC_MAX_ENUM", "100")
    code, _, err = run(capsys, "dm", "--channel-file", noiseless_file, "--quantization", "1/4")
    assert code == 3
    assert "exceeds the cap" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["region", "--preset", "fig-asym-pdf"],
        ["region", "--preset", "fig-asym-pdf", "--scheme", "magic"],
        ["region", "--preset", "fig-asym-pdf", "--scheme", "df", "--grid", "1"],
        ["point", "--scheme", "df", "--p1", "1"],
        ["point", "--preset", "fig-asym-pdf", "--scheme", "df", "--n1", "-1"],
        ["point", "--preset", "fig-asym-pdf", "--scheme", "partial-df", "--alpha", "2"],
        ["dm", "--channel-file", "x", "--quantization", "0.3"],
    ],
)
def test_argument_errors_exit_2(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 2
    assert capsys.readouterr().err


def test_db_flag(capsys):
    _, out, _ = run(capsys, "point", "--scheme", "direct", "--db", "--p1", "10", "--p2", "10", "--pr", "0", "--n1", "0", "--n2", "0", "--nr", "0")
    doc = json.loads(out)
    assert doc["channel"]["p1"] == pytest.approx(10.0)
    assert doc["r1_max"] == pytest.approx(0.5 * np.log2(11.0), abs=1e-12)


def test_parse_quantization():
    assert parse_quantization("1/4") == 0.25
    assert parse_quantization("0.5") == 0.5


def test_console_script_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "twrc.cli", "check-improvement", "--preset", "fig-sym-pdf"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip().endswith("false")
