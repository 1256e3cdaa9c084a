from typing import List

from ..pauli.algebra import context_sign, commutes, multiply
from .models import NEGATIVE, POSITIVE, Geometry


def validate(g: Geometry) -> List[str]:
    """Check every Geometry invariant; returns the violations (empty when valid)"""
    violations: List[str] = []

    if len(g.line_signs) != g.num_lines:
        violations.append(
            f"{len(g.line_signs)} line signs for {g.num_lines} lines"
        )

    seen = {}
    for i, line in enumerate(g.lines):
        if len(line) not in (2, 3):
            violations.append(f"line {i}: {len(line)} points (expected 2 or 3)")
        for p in line:
            if not 0 <= p < g.num_points:
                violations.append(f"line {i}: index out of range ({p} not in [0, {g.num_points}))")
        if len(set(line)) != len(line):
            violations.append(f"line {i}: repeated point")
        key = tuple(sorted(line))
        if key in seen:
            violations.append(f"line {i}: duplicate line (same as line {seen[key]})")
        else:
            seen[key] = i

    for i, b in enumerate(g.line_signs):
        if b not in (POSITIVE, NEGATIVE):
            violations.append(f"line {i}: sign {b} is not 0 or 1")

    if g.point_labels is None or violations:
        return violations

    labels = g.point_labels
    if len(labels) != g.num_points:
        violations.append(f"{len(labels)} labels for {g.num_points} points")
        return violations
    if len({op.n_qubits for op in labels}) > 1:
        violations.append("labels act on different qubit counts")
        return violations
    for p, op in enumerate(labels):
        if op.is_identity:
            violations.append(f"point {p}: label is the identity")
    if violations:
        return violations

    for i, line in enumerate(g.lines):
        ops = [labels[p] for p in line]
        if len(ops) == 3:
            derived = context_sign(*ops)
        else:
            # Two-point line: the operators must coincide up to sign
            derived = None
            if commutes(ops[0], ops[1]):
                product = multiply(ops[0], ops[1])
                if product.is_identity:
                    derived = {0: 1, 2: -1}.get(product.phase_exp)
        if derived is None:
            violations.append(f"line {i}: points do not form a context")
            continue
        declared = 1 if g.line_signs[i] == POSITIVE else -1
        if derived != declared:
            violations.append(
                f"line {i}: line sign mismatch (declared {declared:+d}, derived {derived:+d})"
            )
    return violations
