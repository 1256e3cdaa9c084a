from math import pi
from typing import Sequence

import numpy as np

from ..exceptions import SimulationError
from ..geometry.models import NEGATIVE, Geometry
from ..oracle.brute_force import invalid_count
from .circuits import build_diffusion
from .statevector import Circuit, QuantumState, apply_circuit, cp, cx, h, x


def build_phase_query(g: Geometry, b: int) -> Circuit:
    """Phase e^(i b beta l) on every assignment with l invalid lines, beta = 2 pi / L.

    Qubit V is a scratch line qubit returned to |0>; qubit V+1 holds a constant |1>.
    """
    L = g.num_lines
    if not 0 <= b < L:
        raise ValueError(f"multiplier b={b} outside [0, {L})")
    line_qubit, one = g.num_points, g.num_points + 1
    theta = b * 2 * pi / L
    circuit: Circuit = []
    for i, line in enumerate(g.lines):
        parity: Circuit = [cx(p, line_qubit) for p in line]
        if g.line_signs[i] == NEGATIVE:
            parity.append(x(line_qubit))
        circuit += parity
        if theta:
            circuit.append(cp(theta, [line_qubit], one))
        circuit += parity[::-1]
    return circuit


def quasi_grover_probabilities(g: Geometry, schedule: Sequence[int]) -> np.ndarray:
    """P(l) after each query of ``schedule`` on the V+2 qubit circuit; row t is after t queries"""
    V, L = g.num_points, g.num_lines
    if L == 0:
        raise SimulationError(f"{g.name} has no lines")
    ells = np.array([invalid_count(g, a) for a in range(1 << V)])

    state = QuantumState.zeros(V + 2)
    state = apply_circuit(state, [h(q) for q in range(V)] + [x(V + 1)])
    diffusion = build_diffusion(range(V))

    def class_probabilities(s: QuantumState) -> np.ndarray:
        return np.bincount(ells, weights=s.probabilities(V), minlength=L + 1)

    rows = [class_probabilities(state)]
    for b in schedule:
        state = apply_circuit(state, build_phase_query(g, b) + diffusion)
        rows.append(class_probabilities(state))
    return np.vstack(rows)
