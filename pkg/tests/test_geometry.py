import pytest

from ctxdegree.exceptions import GeometryError, LimitExceededError
from ctxdegree.geometry import (
    NEGATIVE,
    POSITIVE,
    Geometry,
    are_isomorphic,
    build_named,
    build_symplectic,
    contexts_from_operators,
    contextuality_bounds,
    duad_syntheme_geometry,
    dump_geometry,
    find_spread,
    parse_geometry,
    symplectic_counts,
    validate,
)
from ctxdegree.pauli import parse_label


@pytest.mark.parametrize(
    "name,points,lines,negative",
    [
        ("triangle", 3, 3, 1),
        ("grid", 9, 6, 3),
        ("doily", 15, 15, 3),
        ("two_spread", 15, 10, None),
        ("eloily", 27, 45, 9),
    ],
)
def test_named_counts(name, points, lines, negative):
    g = build_named(name)
    assert g.num_points == points
    assert g.num_lines == lines
    if negative is not None:
        assert g.negative_lines == negative


def test_named_lines_per_point(grid, doily, eloily, two_spread):
    assert grid.uniform_lines_per_point == 2
    assert doily.uniform_lines_per_point == 3
    assert eloily.uniform_lines_per_point == 5
    assert two_spread.uniform_lines_per_point == 2


def test_name_lookup_is_forgiving():
    assert build_named("Two-Spread").name == "two_spread"


def test_unknown_name():
    with pytest.raises(GeometryError):
        build_named("octahedron")


def test_grid_rows_positive_columns_negative(grid):
    assert grid.line_signs == (POSITIVE,) * 3 + (NEGATIVE,) * 3
    assert [op.label for op in grid.point_labels[:3]] == ["YZ", "ZY", "XX"]


def test_named_geometries_validate(triangle, grid, doily, two_spread, eloily):
    for g in (triangle, grid, doily, two_spread, eloily):
        assert validate(g) == [], g.name


def test_flipped_sign_is_reported(grid):
    signs = list(grid.line_signs)
    signs[0] ^= 1
    broken = grid.model_copy(update={"line_signs": tuple(signs)})
    violations = validate(broken)
    assert len(violations) == 1
    assert "line sign mismatch" in violations[0]


def test_index_out_of_range():
    g = Geometry(name="bad", num_points=3, lines=((0, 1, 3),), line_signs=(POSITIVE,))
    assert any("index out of range" in v for v in validate(g))


def test_repeated_and_duplicate_lines():
    g = Geometry(
        name="bad", num_points=4, lines=((0, 0, 1), (1, 2, 3), (3, 2, 1)), line_signs=(0, 0, 0)
    )
    violations = validate(g)
    assert any("repeated point" in v for v in violations)
    assert any("duplicate line" in v for v in violations)


def test_non_context_line():
    ops = tuple(parse_label(label) for label in ("XI", "IX", "ZZ"))
    g = Geometry(name="bad", num_points=3, lines=((0, 1, 2),), line_signs=(0,), point_labels=ops)
    assert any("not form a context" in v for v in validate(g))


def test_two_spread_removes_a_spread(doily, two_spread):
    spread = find_spread(doily)
    assert len(spread) == 5
    covered = [p for i in spread for p in doily.lines[i]]
    assert sorted(covered) == list(range(15))
    remaining = {tuple(line) for line in two_spread.lines}
    assert all(doily.lines[i] not in remaining for i in spread)
    assert set(two_spread.lines_per_point) == {2}


def test_contexts_from_two_qubit_operators_is_the_doily(doily):
    assert are_isomorphic(build_symplectic(2), doily, signed=True)


def test_duad_syntheme_model_is_the_doily(doily):
    model = duad_syntheme_geometry()
    assert (model.num_points, model.num_lines) == (15, 15)
    assert are_isomorphic(model, doily)


def test_grid_is_not_the_doily(grid, doily):
    assert not are_isomorphic(grid, doily)


def test_two_anticommuting_operators_have_no_lines():
    g = contexts_from_operators([parse_label("X"), parse_label("Z")])
    assert (g.num_points, g.num_lines) == (2, 0)


def test_duplicate_operators_rejected():
    with pytest.raises(GeometryError):
        contexts_from_operators([parse_label("XY"), parse_label("XY"), parse_label("ZZ")])


def test_symplectic_single_qubit_has_no_lines():
    g = build_symplectic(1)
    assert (g.num_points, g.num_lines) == (3, 0)
    assert symplectic_counts(1)["lines"] == 0


@pytest.mark.parametrize("n_qubits,points,lines,per_point", [(2, 15, 15, 3), (3, 63, 315, 15)])
def test_symplectic_counts(n_qubits, points, lines, per_point):
    g = build_symplectic(n_qubits)
    assert (g.num_points, g.num_lines, g.uniform_lines_per_point) == (points, lines, per_point)
    assert symplectic_counts(n_qubits) == {
        "points": points,
        "lines": lines,
        "lines_per_point": per_point,
    }


@pytest.mark.slow
def test_symplectic_four_qubits():
    g = build_symplectic(4)
    expected = symplectic_counts(4)
    assert g.num_points == expected["points"] == 255
    assert g.num_lines == expected["lines"]
    assert g.uniform_lines_per_point == expected["lines_per_point"] == 63


def test_symplectic_limit():
    with pytest.raises(LimitExceededError):
        build_symplectic(5)


def test_bounds_grid(grid):
    bounds = contextuality_bounds(grid, 1, 2)
    assert bounds.chi_bound == 4


def test_bounds_doily(doily):
    bounds = contextuality_bounds(doily, 3, 2)
    assert bounds.omega_pl == pytest.approx(14 / 15)
    assert bounds.omega_ll == pytest.approx(1 - (2 / 3) * (3 / 15))


def test_bounds_non_contextual(doily):
    bounds = contextuality_bounds(doily, 0, 3)
    assert bounds.chi_bound == doily.num_lines
    assert bounds.omega_ll == 1
    assert bounds.omega_pl == 1


def test_bounds_non_uniform_lines_per_point():
    g = Geometry(name="loose", num_points=4, lines=((0, 1, 2),), line_signs=(NEGATIVE,))
    bounds = contextuality_bounds(g, 1, 1)
    assert bounds.omega_ll is None
    assert bounds.chi_bound == -1


def test_bounds_ranges(grid):
    with pytest.raises(ValueError):
        contextuality_bounds(grid, 7, 2)
    with pytest.raises(ValueError):
        contextuality_bounds(grid, 1, 3)


def test_text_document_round_trip(grid):
    text = dump_geometry(grid)
    assert text.splitlines()[0] == "geometry grid points=9 lines=6"
    parsed = parse_geometry(text)
    assert parsed.lines == grid.lines
    assert parsed.line_signs == grid.line_signs
    assert [op.label for op in parsed.point_labels] == [op.label for op in grid.point_labels]


def test_unlabelled_document():
    parsed = parse_geometry("geometry tri points=3 lines=3\nline 0 1 sign=-\nline 1 2 sign=+\nline 0 2 sign=+\n")
    assert parsed.negative_lines == 1
    assert parsed.point_labels is None


@pytest.mark.parametrize(
    "text",
    [
        "",
        "geometry empty points=3 lines=0\n",
        "geometry short points=3 lines=2\nline 0 1 2 sign=+\n",
        "geometry bad points=3 lines=1\nline 0 1 5 sign=+\n",
        "geometry bad points=3 lines=1\nline 0 1 2 sign=?\n",
        "geometry bad points=3 lines=1\nlabels XX YY ZZ\nline 0 1 2 sign=+\n",
    ],
)
def test_rejected_documents(text):
    with pytest.raises(GeometryError):
        parse_geometry(text)
