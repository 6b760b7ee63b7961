import json

import numpy as np
import pytest
from click.testing import CliRunner

from surfmono.algebra import fermat
from surfmono.cli import main
from surfmono.config import RunConfig, load_surface, parse_point
from surfmono.geometry import ProjectivePoint
from surfmono.pipeline import fermat_regression, scan, scan_centers


def run(*args):
    res = CliRunner().invoke(main, list(args))
    return res.exit_code, res.output


def strip_time(text):
    data = json.loads(text)
    data.pop("generatedAt")
    return data


def test_config_roundtrip(tmp_path):
    cfg = RunConfig(seed=7, cluster_tol=1e-6, px_samples=10)
    assert RunConfig.from_json(cfg.to_json()) == cfg
    path = tmp_path / "cfg.json"
    path.write_text(cfg.to_json())
    assert RunConfig.load(path) == cfg
    with pytest.raises(ValueError):
        RunConfig(tracker_tol=0)
    with pytest.raises(ValueError):
        RunConfig.from_dict({"bogus": 1})
    with pytest.raises(ValueError):
        RunConfig.from_dict({"schemaVersion": 99})


def test_inputs(tmp_path):
    assert load_surface("fermat").terms == fermat(3).terms
    p = tmp_path / "f.json"
    p.write_text(json.dumps(fermat(3).to_dict()))
    assert load_surface(str(p)).terms == fermat(3).terms
    assert load_surface("x0^2 + x1^2 + x2^2 + x3^2").degree == 2
    np.testing.assert_allclose(parse_point("0,0,0,1").coords, [0, 0, 0, 1])
    assert parse_point("1,2i,0,1").same_as(ProjectivePoint(np.array([1, 2j, 0, 1])))


def test_scan_examples():
    rep = scan(fermat(3), 3, center=(0.37, 0.21, 0.13), box=0.5)
    assert rep.candidates == [] and len(rep.points) == 27
    rep = scan(fermat(3), 3)
    assert [p.center.same_as(parse_point("0,0,0,1")) for p in rep.candidates] == [True]
    with pytest.raises(ValueError):
        scan_centers(0)


def test_fermat_regression_passes():
    rep = fermat_regression(random_count=3, px_budget=60)
    assert rep.passed, [c.to_dict() for c in rep.checks if not c.passed]


def test_analyze_report(tmp_path):
    out = tmp_path / "r.json"
    paths = tmp_path / "p.csv"
    code, text = run("analyze", "--surface", "fermat", "--point", "0,0,0,1", "--seed", "0", "--out", str(out),
                     "--paths-csv", str(paths), "--json")
    assert code == 0
    rep = json.loads(out.read_text())
    assert rep["schemaVersion"] == 1 and rep["groupOrder"] == 3
    assert rep["classification"] == "Alternating(3)"
    assert all(len(g["perm"]) == 1 and len(g["perm"][0]) == 3 for g in rep["generators"])
    assert paths.read_text().startswith("loop,step,sheet")
    code2, text2 = run("analyze", "--point", "0,0,0,1", "--seed", "0", "--json")
    assert strip_time(text) == strip_time(text2)


def test_analyze_plot(tmp_path):
    out = tmp_path / "r.json"
    code, _ = run("analyze", "--point", "0,0,1,2", "--out", str(out), "--plot")
    assert code == 0
    assert (tmp_path / "r.slice.png").stat().st_size > 0
    assert (tmp_path / "r.paths.png").stat().st_size > 0


def test_analyze_on_surface_fails():
    code, text = run("analyze", "--point", "1,-1,0,0", "--json")
    assert code == 2 and json.loads(text)["error"] == "TrackingError"


def test_branch_curve_command(tmp_path):
    out = tmp_path / "c.json"
    sl = tmp_path / "s.csv"
    code, _ = run("branch-curve", "--point", "0,0,0,1", "--reduced", "--out", str(out), "--slice-csv", str(sl))
    assert code == 0
    data = json.loads(out.read_text())
    assert data["divisorDegree"] == 6 and data["reducedDegree"] == 3 and data["curve"]["degree"] == 3
    assert len(sl.read_text().strip().splitlines()) == 4


def test_contact_and_px_commands():
    code, text = run("contact", "--line", "1,-1,0,0;0,0,0,1", "--json")
    assert code == 0 and json.loads(text)["type"] == [3]
    code, text = run("px-test", "--point", "0,0,1,2", "--budget", "50", "--json")
    assert code == 0 and json.loads(text)["status"] == "NotInPX"
    code, _ = run("contact", "--line", "1,0,0,0")
    assert code != 0


def test_focal_and_numerology_commands(tmp_path):
    csv_path = tmp_path / "f.csv"
    code, text = run("focal-demo", "--family", "point", "--samples", "4", "--csv", str(csv_path), "--json")
    assert code == 0
    rep = json.loads(text)
    assert rep["maxDegree"] == 2 and all(m["foci"][0]["multiplicity"] == 2 for m in rep["members"])
    code, text = run("numerology", "--degree", "3", "--json")
    assert code == 0 and json.loads(text)["degKR"] == 6
    code, _ = run("numerology", "--degree", "1")
    assert code == 2


def test_scan_command():
    code, text = run("scan", "--grid", "1", "--json")
    assert code == 0
    rep = json.loads(text)
    assert rep["scanned"] == 1 and len(rep["candidates"]) == 1
    code, _ = run("scan", "--grid", "0")
    assert code == 2
