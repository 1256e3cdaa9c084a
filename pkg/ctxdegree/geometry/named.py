import itertools
from typing import Callable, Dict, List

from ..exceptions import GeometryError
from ..pauli.algebra import all_operators, context_sign, parse_label
from .builders import contexts_from_operators, find_spread
from .models import NEGATIVE, POSITIVE, Geometry

# Rows of the magic square; columns are the negative lines
GRID_ROWS = (
    ("YZ", "ZY", "XX"),
    ("ZX", "XZ", "YY"),
    ("XY", "YX", "ZZ"),
)


def build_triangle() -> Geometry:
    """3 points, 3 two-point lines, the first one negative; not Pauli-labellable"""
    return Geometry(
        name="triangle",
        num_points=3,
        lines=((0, 1), (1, 2), (0, 2)),
        line_signs=(NEGATIVE, POSITIVE, POSITIVE),
    )


def build_grid() -> Geometry:
    labels = [label for row in GRID_ROWS for label in row]
    ops = tuple(parse_label(label) for label in labels)
    rows = [tuple(3 * r + c for c in range(3)) for r in range(3)]
    columns = [tuple(3 * r + c for r in range(3)) for c in range(3)]
    lines = rows + columns
    signs = []
    for line in lines:
        sign = context_sign(*(ops[p] for p in line))
        signs.append(POSITIVE if sign == 1 else NEGATIVE)
    return Geometry(
        name="grid",
        num_points=9,
        lines=tuple(lines),
        line_signs=tuple(signs),
        point_labels=ops,
    )


def build_doily() -> Geometry:
    return contexts_from_operators(list(all_operators(2)), name="doily")


def build_two_spread() -> Geometry:
    doily = build_doily()
    spread = find_spread(doily)
    if spread is None:  # pragma: no cover - the doily always has spreads
        raise GeometryError("doily has no spread")
    keep = [i for i in range(doily.num_lines) if i not in spread]
    return doily.with_lines(keep, name="two_spread")


def eloily_operators() -> List:
    """The 27 three-qubit operators with exactly one identity factor"""
    return [op for op in all_operators(3) if op.weight == 2]


def build_eloily() -> Geometry:
    return contexts_from_operators(eloily_operators(), name="eloily")


def duad_syntheme_geometry() -> Geometry:
    """GQ(2,2) from a 6-set: points are pairs, lines are partitions into three pairs.

    Unsigned and unlabelled; an incidence model of the doily independent of
    Pauli operators.
    """
    duads = list(itertools.combinations(range(6), 2))
    index = {duad: i for i, duad in enumerate(duads)}
    synthemes = set()
    for a, b, c in itertools.combinations(duads, 3):
        if len(set(a) | set(b) | set(c)) == 6:
            synthemes.add(tuple(sorted((index[a], index[b], index[c]))))
    lines = tuple(sorted(synthemes))
    return Geometry(
        name="duad_syntheme",
        num_points=len(duads),
        lines=lines,
        line_signs=tuple(POSITIVE for _ in lines),
    )


NAMED_GEOMETRIES: Dict[str, Callable[[], Geometry]] = {
    "triangle": build_triangle,
    "grid": build_grid,
    "doily": build_doily,
    "two_spread": build_two_spread,
    "eloily": build_eloily,
}


def build_named(name: str) -> Geometry:
    builder = NAMED_GEOMETRIES.get(name.replace("-", "_").lower())
    if builder is None:
        raise GeometryError(
            f"Unknown geometry {name!r}; expected one of {', '.join(NAMED_GEOMETRIES)}"
        )
    return builder()
