"""Plain-text geometry documents.

A document is a header line, an optional labels line and one record per line::

    geometry grid points=9 lines=6
    labels YZ ZY XX ZX XZ YY XY YX ZZ
    line 0 1 2 sign=+
    ...
"""

import re
from typing import List, Optional, Tuple

from ..exceptions import GeometryError, LabelParseError
from ..pauli.algebra import PauliOperator, parse_label
from .models import NEGATIVE, POSITIVE, Geometry
from .validation import validate

HEADER_RE = re.compile(r"^geometry\s+(\S+)\s+points=(\d+)\s+lines=(\d+)$")
LINE_RE = re.compile(r"^line\s+((?:\d+\s+){1,2}\d+)\s+sign=([+-])$")


def dump_geometry(g: Geometry) -> str:
    """Serialize a geometry into its text document (newline terminated)"""
    rows = [f"geometry {g.name} points={g.num_points} lines={g.num_lines}"]
    if g.point_labels is not None:
        rows.append("labels " + " ".join(op.label for op in g.point_labels))
    for line, b in zip(g.lines, g.line_signs):
        points = " ".join(str(p) for p in line)
        rows.append(f"line {points} sign={'+' if b == POSITIVE else '-'}")
    return "\n".join(rows) + "\n"


def parse_geometry(text: str) -> Geometry:
    """Parse a text document, rejecting anything that violates the Geometry invariants.

    Raises:
        GeometryError: malformed records, count mismatches or invariant violations
    """
    rows = [row.strip() for row in text.splitlines()]
    rows = [row for row in rows if row and not row.startswith("#")]
    if not rows:
        raise GeometryError("empty geometry document")

    header = HEADER_RE.match(rows[0])
    if header is None:
        raise GeometryError(f"malformed header: {rows[0]!r}")
    name, num_points, num_lines = header.group(1), int(header.group(2)), int(header.group(3))

    labels: Optional[Tuple[PauliOperator, ...]] = None
    lines: List[Tuple[int, ...]] = []
    signs: List[int] = []
    for number, row in enumerate(rows[1:], start=2):
        if row.startswith("labels"):
            if labels is not None or lines:
                raise GeometryError(f"record {number}: labels must appear once, before the lines")
            try:
                labels = tuple(parse_label(token) for token in row.split()[1:])
            except LabelParseError as e:
                raise GeometryError(f"record {number}: {e}") from e
            continue
        match = LINE_RE.match(row)
        if match is None:
            raise GeometryError(f"record {number}: cannot parse {row!r}")
        lines.append(tuple(int(p) for p in match.group(1).split()))
        signs.append(POSITIVE if match.group(2) == "+" else NEGATIVE)

    if not lines:
        raise GeometryError("geometry document has no line records")
    if len(lines) != num_lines:
        raise GeometryError(f"header declares {num_lines} lines but the body has {len(lines)}")

    geometry = Geometry(
        name=name,
        num_points=num_points,
        lines=tuple(lines),
        line_signs=tuple(signs),
        point_labels=labels,
    )
    violations = validate(geometry)
    if violations:
        raise GeometryError(f"invalid geometry {name!r}", violations=violations)
    return geometry


def load_geometry(path: str) -> Geometry:
    with open(path, "r") as f:
        return parse_geometry(f.read())


def save_geometry(g: Geometry, path: str) -> None:
    with open(path, "w") as f:
        f.write(dump_geometry(g))
