import io
import json

import pytest
from hypothesis import given, settings, strategies as st

from spherecal.cli import run_command


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def kv(text):
    return dict(line.split("=", 1) for line in text.splitlines())


@pytest.fixture
def config(tmp_path):
    def write(doc):
        p = tmp_path / "cfg.json"
        p.write_text(json.dumps(doc) if not isinstance(doc, str) else doc)
        return str(p)

    return write


def test_check_defaults():
    code, out, _ = run("check")
    assert code == 0
    v = kv(out)
    assert float(v["size_parameter"]) == pytest.approx(29.54, abs=0.01)
    assert v["regime"] == "optical"
    assert float(v["far_field_min_range_m"]) == pytest.approx(312.6, abs=0.05)
    assert v["far_field_ok"] == "true"


def test_geom():
    code, out, _ = run("geom", "--theta", "10", "--standoff", "2000")
    assert code == 0
    header, row = out.splitlines()
    rec = dict(zip(header.split(","), map(float, row.split(","))))
    assert rec["beta_deg"] == pytest.approx(0.29961, abs=1e-5)
    assert rec["sphere_y_m"] == pytest.approx(60 * 0.17364817766693033, rel=1e-8)


def test_pattern_and_out_of_lobe():
    code, out, _ = run("pattern", "--beta", "0.2994")
    assert code == 0
    assert float(kv(out)["pattern_loss_db"]) == pytest.approx(5.91, abs=0.01)
    code, out, err = run("pattern", "--beta", "0.6")
    assert code == 3 and out == "" and "null" in err


def test_rcs():
    code, out, _ = run("rcs")
    v = kv(out)
    assert code == 0 and v["regime"] == "optical"
    assert 0.85 <= float(v["mie_to_optical_ratio"]) <= 1.15
    code, out, _ = run("rcs", "--radius", "0.001", "--wavelength", "0.0319")
    assert kv(out)["regime"] == "rayleigh"
    assert run("rcs", "--radius", "-1")[0] == 3


def test_sweep_stdout(config):
    code, out, _ = run("sweep", "--config", config({"standoff_m": [2000], "theta_steps": 3}))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "standoff_m,theta_deg,beta_deg,slant_range_m,sigma_eff_m2,z_dbz,delta_z_db"
    assert len(lines) == 4


def test_sweep_files(config, tmp_path):
    code, out, _ = run("sweep", "--config", config({"standoff_m": [2000, 5000]}), "--out", str(tmp_path / "o"))
    assert code == 0
    assert len((tmp_path / "o" / "sweep.csv").read_text().splitlines()) == 403
    assert (tmp_path / "o" / "sweep_summary.csv").read_text() == out


def test_sweep_near_field(config):
    code, _, err = run("sweep", "--config", config({"standoff_m": [100]}))
    assert code == 3 and "far-field" in err
    narrow = {"standoff_m": [100], "allow_near_field": True, "theta_min_deg": -0.1, "theta_max_deg": 0.1, "theta_steps": 3}
    assert run("sweep", "--config", config(narrow))[0] == 0


def test_sweep_sentinel_warning(config):
    doc = {"standoff_m": [400], "theta_min_deg": -30, "theta_max_deg": 30, "theta_steps": 7}
    code, out, err = run("sweep", "--config", config(doc))
    assert code == 0 and "nan" in out and "warning" in err


def test_fig2(tmp_path):
    code, out, _ = run("fig2", "--out", str(tmp_path))
    assert code == 0
    names = sorted(p.name for p in tmp_path.iterdir())
    assert names == ["fig2_summary.csv", "fig2a.csv", "fig2b.csv", "fig2c.csv", "fig2d.csv"]
    summary = [l.split(",") for l in out.splitlines()[1:]]
    dz = {float(r[0]): float(r[2]) for r in summary}
    assert dz[2000] == pytest.approx(5.91, abs=0.1)
    assert dz[5000] == pytest.approx(0.84, abs=0.05)
    assert (tmp_path / "fig2b.csv").read_text().splitlines()[0] == "standoff_m,beta_deg,sigma_eff_m2"


def test_fig2_panels_are_projections(tmp_path):
    assert run("sweep", "--out", str(tmp_path / "s"))[0] == 0
    assert run("fig2", "--out", str(tmp_path / "f"))[0] == 0
    full = [l.split(",") for l in (tmp_path / "s" / "sweep.csv").read_text().splitlines()]
    header = full[0]
    for panel in "abcd":
        lines = [l.split(",") for l in (tmp_path / "f" / f"fig2{panel}.csv").read_text().splitlines()]
        idx = [header.index(c) for c in lines[0]]
        assert lines[1:] == [[r[i] for i in idx] for r in full[1:]]


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["bogus"],
        ["geom"],
        ["pattern", "--beta", "abc"],
        ["check", "--config", "/nonexistent/cfg.json"],
    ],
)
def test_usage_errors_exit_2(argv):
    assert run(*argv)[0] == 2


def test_config_errors_exit_2(config):
    assert run("check", "--config", config({"tether_length_m": -5}))[0] == 2
    assert run("check", "--config", config("{not json"))[0] == 2
    assert run("check", "--config", config({"typo": 1}))[0] == 2


def test_unwritable_output_exit_2(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    assert run("fig2", "--out", str(blocker / "sub"))[0] == 2


def test_bad_thread_env(monkeypatch):
    monkeypatch.setenv("SPHERECAL_THREADS", "many")
    assert run("sweep")[0] == 2


@settings(max_examples=100, deadline=None)
@given(st.binary(max_size=120))
def test_fuzz_exit_codes(tmp_path_factory, data):
    p = tmp_path_factory.mktemp("fz") / "c.json"
    p.write_bytes(data)
    assert run("check", "--config", str(p))[0] in (0, 2, 3)
