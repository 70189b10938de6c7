import json

import pytest

from antipod.cli import main
from antipod.io import write_config
from antipod.constructions import base_polytope


@pytest.fixture
def cube_file(tmp_path):
    path = tmp_path / "cube.json"
    write_config(path, base_polytope("cube", 3))
    return path


def test_count_both_oracles(cube_file, capsys):
    assert main(["count", "--input", str(cube_file)]) == 0
    out = capsys.readouterr().out
    assert "lp: a = 28, sa = 4" in out
    assert "oracles agree" in out


def test_count_certificates(cube_file, tmp_path):
    cert = tmp_path / "cert.json"
    assert main(["count", "--input", str(cube_file), "--oracle", "lp", "--certificates", str(cert)]) == 0
    data = json.loads(cert.read_text())
    assert data["strict"]["count"] == 4


def test_count_degenerate_needs_reembed(tmp_path, capsys):
    path = tmp_path / "flat.json"
    path.write_text('{"dim": 3, "points": [[0,0,0],[1,0,0],[0,1,0],[1,1,0]]}')
    assert main(["count", "--input", str(path)]) == 2
    assert main(["count", "--input", str(path), "--in-affine-hull"]) == 0
    assert "sa = 2" in capsys.readouterr().out


def test_usage_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"dim": 2, "points": [[0, 0.5]]}')
    assert main(["count", "--input", str(bad)]) == 2
    assert main(["count", "--input", str(tmp_path / "missing.json")]) == 2
    assert main(["construct", "--name", "crosspoly_pyramid", "--params", "d=4", "--out", str(tmp_path / "o.json")]) == 2
    assert main(["construct", "--name", "crosspoly_pyramid", "--params", "d", "--out", str(tmp_path / "o.json")]) == 2
    assert main(["bounds", "--dmax", "1"]) == 2
    assert main(["verify", "--suite", "nonsense"]) == 2
    with pytest.raises(SystemExit):
        main(["frobnicate"])


def test_construct_then_count(tmp_path, capsys):
    out = tmp_path / "pyr.json"
    assert main(["construct", "--name", "pyramid_over", "--params", "base=trapezoid", "--out", str(out)]) == 0
    assert main(["count", "--input", str(out), "--mode", "strict"]) == 0
    assert "sa = 7" in capsys.readouterr().out


def test_bounds_csv(tmp_path, capsys):
    csv_path = tmp_path / "b.csv"
    assert main(["bounds", "--dmax", "5", "--csv", str(csv_path)]) == 0
    rows = json.loads(capsys.readouterr().out)["rows"]
    assert len(rows) == 10
    lines = csv_path.read_text().splitlines()
    assert lines[0].startswith("d,k,n,lower,upper") and len(lines) == 11


def test_segments_exit_codes(tmp_path):
    good = tmp_path / "g.json"
    good.write_text('{"segments": [[[0,0,0],[0,0,1]], [[1,0,0],[1,0,1]], [[0,1,0],[0,1,1]]]}')
    assert main(["segments", "--input", str(good)]) == 0
    five = tmp_path / "f.json"
    five.write_text('{"segments": [[[0,0,0],[0,0,1]], [[2,0,0],[2,0,1]], [[3,2,0],[3,2,1]],'
                    ' [[1,3,0],[1,3,1]], [[-1,2,0],[-1,2,1]]]}')
    assert main(["segments", "--input", str(five), "--mode", "antipodal"]) == 1


def test_search_writes_config_and_log(tmp_path, capsys):
    out = tmp_path / "s.json"
    assert main(["search", "--d", "2", "--n", "5", "--budget", "2000", "--restarts", "2", "--out", str(out)]) == 0
    log = json.loads((tmp_path / "s.json.log.json").read_text())
    assert log["best_value"] == 3 and log["verified"]
    assert "sa = 3" in capsys.readouterr().out


def test_verify_report_is_deterministic(tmp_path):
    r1, r2 = tmp_path / "r1.json", tmp_path / "r2.json"
    assert main(["verify", "--suite", "five_point_table,bounds_consistency", "--report", str(r1)]) == 0
    assert main(["verify", "--suite", "five_point_table,bounds_consistency", "--report", str(r2)]) == 0
    a, b = json.loads(r1.read_text()), json.loads(r2.read_text())
    assert a == b
    assert [e["id"] for e in a["entries"]] == ["five_point_table", "bounds_consistency"]
    assert all(e["citation"] and e["pass"] for e in a["entries"])
