from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from ..config import settings
from ..exceptions import DimensionError, GeometryError, LimitExceededError
from ..pauli.algebra import PauliOperator, all_operators, context_sign, symplectic_product
from .models import NEGATIVE, POSITIVE, Geometry


def contexts_from_operators(
    ops: Sequence[PauliOperator], name: str = "contexts"
) -> Geometry:
    """Geometry whose lines are all contexts (commuting triples with product ±1) in ``ops``"""
    if not ops:
        return Geometry(name=name, num_points=0, lines=(), line_signs=())
    widths = {op.n_qubits for op in ops}
    if len(widths) != 1:
        raise DimensionError(f"Operators act on different qubit counts: {sorted(widths)}")

    index: Dict[Tuple[int, int], int] = {}
    for i, op in enumerate(ops):
        if op.is_identity:
            raise GeometryError(f"Operator {i} is the identity")
        if op.key in index:
            raise GeometryError(
                f"duplicate operators: {ops[index[op.key]].label} and {op.label}"
            )
        index[op.key] = i

    # Two commuting points determine the third; keep each triple once (i < j < k)
    found: List[Tuple[int, int, int]] = []
    for i, a in enumerate(ops):
        for j in range(i + 1, len(ops)):
            b = ops[j]
            if symplectic_product(a.x_bits, a.z_bits, b.x_bits, b.z_bits):
                continue
            k = index.get((a.x_bits ^ b.x_bits, a.z_bits ^ b.z_bits))
            if k is not None and k > j:
                found.append((i, j, k))

    found.sort()
    signs = []
    for i, j, k in found:
        sign = context_sign(ops[i], ops[j], ops[k])
        signs.append(POSITIVE if sign == 1 else NEGATIVE)

    geometry = Geometry(
        name=name,
        num_points=len(ops),
        lines=tuple(found),
        line_signs=tuple(signs),
        point_labels=tuple(ops),
    )
    logger.info(
        f"Enumerated {geometry.num_lines} contexts on {geometry.num_points} operators "
        f"({geometry.negative_lines} negative)"
    )
    return geometry


def symplectic_counts(n_qubits: int) -> Dict[str, int]:
    """Points, lines and lines per point of W(2N-1, 2) by the closed formulas"""
    points = 4**n_qubits - 1
    per_point = 4 ** (n_qubits - 1) - 1
    return {
        "points": points,
        "lines": points * per_point // 3,
        "lines_per_point": per_point,
    }


def build_symplectic(n_qubits: int, limit: Optional[int] = None) -> Geometry:
    """Symplectic polar space W(2N-1, 2) on all non-trivial N-qubit operators"""
    limit = limit if limit is not None else settings.symplectic_max_qubits
    if n_qubits < 1:
        raise ValueError("N must be at least 1")
    if n_qubits > limit:
        raise LimitExceededError(f"N={n_qubits} exceeds the configured limit of {limit} qubits")

    geometry = contexts_from_operators(
        list(all_operators(n_qubits)), name=f"W({2 * n_qubits - 1},2)"
    )
    expected = symplectic_counts(n_qubits)
    observed = {
        "points": geometry.num_points,
        "lines": geometry.num_lines,
        "lines_per_point": geometry.uniform_lines_per_point,
    }
    for key, value in expected.items():
        if observed[key] != value:
            logger.warning(
                f"W({2 * n_qubits - 1},2): enumerated {key}={observed[key]} "
                f"but the closed formula gives {value}"
            )
    return geometry


def find_spread(geometry: Geometry) -> Optional[List[int]]:
    """First set of pairwise-disjoint lines covering every point, by backtracking in line order"""
    incidence = geometry.incidence
    covered = [False] * geometry.num_points
    chosen: List[int] = []

    def extend() -> bool:
        try:
            point = covered.index(False)
        except ValueError:
            return True
        # The first uncovered point must be covered by one of its own lines
        for i in incidence[point]:
            line = geometry.lines[i]
            if any(covered[p] for p in line):
                continue
            for p in line:
                covered[p] = True
            chosen.append(i)
            if extend():
                return True
            chosen.pop()
            for p in line:
                covered[p] = False
        return False

    if extend():
        return sorted(chosen)
    return None
