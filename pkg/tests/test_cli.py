import json

import pytest

from ctxdegree.cli import main, repro


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_degree(capsys):
    code, out = run(capsys, "degree", "-g", "grid")
    assert code == 0
    lines = out.splitlines()
    assert lines[:2] == ["d=1", "count=96"]
    assert lines[2].startswith("witness=")


def test_dist_csv(capsys):
    code, out = run(capsys, "dist", "-g", "grid")
    assert code == 0
    assert out.splitlines()[1:] == ["ell,count", "1,96", "3,320", "5,96"]


def test_dist_binomial_json(capsys):
    code, out = run(capsys, "dist", "-g", "grid", "--binomial", "--format", "json")
    assert code == 0
    document = json.loads(out)
    assert document["source"] == "binomial"
    assert document["counts"]["3"] == "160"


def test_geometry_build_then_validate(capsys, tmp_path):
    path = tmp_path / "grid.geom"
    assert main(["geometry", "build", "-g", "grid", "-o", str(path)]) == 0
    assert path.read_text().startswith("geometry grid points=9 lines=6")
    code, out = run(capsys, "geometry", "validate", "-f", str(path))
    assert code == 0
    assert out.strip() == "grid: valid"


def test_symplectic_build(capsys):
    code, out = run(capsys, "geometry", "build", "--symplectic", "2")
    assert code == 0
    assert "points=15 lines=15" in out.splitlines()[0]


def test_validate_document_without_lines(capsys, tmp_path):
    path = tmp_path / "empty.geom"
    path.write_text("geometry empty points=3 lines=0\n")
    code, _ = run(capsys, "geometry", "validate", "-f", str(path))
    assert code == 1


def test_geometry_info(capsys):
    code, out = run(capsys, "geometry", "info", "-g", "grid", "--format", "json")
    assert code == 0
    info = json.loads(out)
    assert info["lines_per_point"] == 2
    assert info["oracle_estimate"] == 93
    assert info["oracle_qubits"] == 22


def test_bounds(capsys):
    code, out = run(capsys, "bounds", "-g", "doily", "--d", "3")
    assert code == 0
    assert json.loads(out)["omega_pl"] == pytest.approx(14 / 15)


def test_quasi(capsys):
    code, out = run(capsys, "quasi", "-g", "grid", "--tmax", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "t,ell,P"
    assert len(lines) == 1 + 4 * 7


def test_optimize_betas_then_replay(capsys, tmp_path):
    path = tmp_path / "betas.csv"
    assert main(["optimize-betas", "-g", "grid", "-o", str(path)]) == 0
    lines = path.read_text().splitlines()
    assert lines[0] == "t,b_t"
    assert lines[-1].endswith(",0")
    code, out = run(capsys, "quasi", "-g", "grid", "--betas", str(path))
    assert code == 0
    assert len(out.splitlines()) == 1 + len(lines) * 7


def test_find_degree(capsys):
    code, out = run(capsys, "find-degree", "-g", "grid", "--seed", "3")
    assert code == 0
    assert out.splitlines()[-1] == "d=1"
    assert out.splitlines()[0].startswith("round ell_prime=none")


def test_repro_table5(capsys):
    code, out = run(capsys, "repro", "table5", "--skip-slow")
    assert code == 0
    assert out.splitlines()[0] == "table,geometry,quantity,expected,observed,tolerance,status"
    assert out.rstrip().endswith("# PASS")


def test_unknown_geometry_fails(capsys):
    code, _ = run(capsys, "degree", "-g", "octahedron")
    assert code == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["frobnicate"],
        ["degree"],
        ["degree", "-g", "grid", "--shots", "0"],
        ["degree", "-g", "grid", "--seed", "-1"],
    ],
)
def test_usage_errors_exit_with_two(argv):
    with pytest.raises(SystemExit) as excinfo:
        main(argv)
    assert excinfo.value.code == 2


@pytest.mark.parametrize("table", ["table7", "table8"])
def test_repro_schedule_tables_without_eloily(table):
    frame = repro.run_table(table, include_slow=False)
    failing = frame[frame["status"] == "FAIL"]
    assert repro.passed(frame), failing.to_dict("records")
    assert set(frame["geometry"]) == {"grid", "two_spread", "doily"}


@pytest.mark.slow
@pytest.mark.parametrize("table", ["table7", "table8"])
def test_repro_schedule_tables(table):
    frame = repro.run_table(table)
    assert repro.passed(frame)
    assert "eloily" in set(frame["geometry"])
