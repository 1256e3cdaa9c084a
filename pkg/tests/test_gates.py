from math import asin, sin, sqrt

import numpy as np
import pytest

from ctxdegree.config import settings
from ctxdegree.exceptions import LimitExceededError, SimulationError
from ctxdegree.gates import (
    QuantumState,
    RegisterLayout,
    apply_circuit,
    build_diffusion,
    build_oracle,
    build_UC,
    build_UC_prime,
    build_UG,
    oracle_gate_count,
    register_value,
)
from ctxdegree.gates.circuits import build_flag_minus, build_threshold
from ctxdegree.gates.statevector import Gate, cx, h, mcx, x
from ctxdegree.oracle import invalid_count


def basis_index(layout: RegisterLayout, a: int = 0, x_value: int = 0, y_value: int = 0) -> int:
    index = a
    for k in range(layout.width):
        if (x_value >> k) & 1:
            index |= 1 << layout.x_bit(k)
        if (y_value >> k) & 1:
            index |= 1 << layout.y_bit(k)
    return index


def test_hadamard():
    state = apply_circuit(QuantumState.zeros(1), [h(0)])
    assert np.allclose(state.amplitudes, [1 / sqrt(2), 1 / sqrt(2)])


def test_multi_controlled_x():
    state = apply_circuit(QuantumState.basis(4, 0b0111), [mcx([0, 1, 2], 3)])
    assert state.amplitudes[0b1111] == pytest.approx(1)


def test_flipped_control_fires_on_zero():
    state = apply_circuit(QuantumState.zeros(2), [mcx([], 1, flipped=[0])])
    assert state.amplitudes[0b10] == pytest.approx(1)


def test_controlled_x_does_not_fire():
    state = apply_circuit(QuantumState.basis(2, 0b00), [cx(0, 1)])
    assert state.amplitudes[0] == pytest.approx(1)


def test_bad_qubits():
    with pytest.raises(SimulationError):
        apply_circuit(QuantumState.zeros(2), [x(2)])
    with pytest.raises(SimulationError):
        apply_circuit(QuantumState.zeros(2), [cx(1, 1)])


def test_unsupported_gate():
    with pytest.raises(ValueError):
        Gate(name="swap", target=0)


def test_qubit_limit(monkeypatch):
    monkeypatch.setattr(settings, "simulator_max_qubits", 4)
    with pytest.raises(LimitExceededError):
        QuantumState.zeros(5)


def test_register_value():
    assert register_value(0b0110, [1, 2, 3]) == 0b110
    assert register_value(0b0110, [3, 2, 1]) == 0b011


def test_diffusion_fixes_uniform_state():
    uniform = apply_circuit(QuantumState.zeros(3), [h(q) for q in range(3)])
    after = apply_circuit(uniform, build_diffusion(range(3)))
    overlap = abs(np.vdot(uniform.amplitudes, after.amplitudes))
    assert overlap == pytest.approx(1)


def test_grover_steps_follow_closed_form():
    """One marked state out of 8: sin^2((2t + 1) theta)"""
    theta = asin(sqrt(1 / 8))
    state = apply_circuit(QuantumState.zeros(3), [h(q) for q in range(3)])
    diffusion = build_diffusion(range(3))
    expected = {1: 0.78125, 2: 0.9453125}
    for t in (1, 2):
        state.amplitudes[5] *= -1
        state = apply_circuit(state, diffusion)
        p = abs(state.amplitudes[5]) ** 2
        assert p == pytest.approx(sin((2 * t + 1) * theta) ** 2)
        assert p == pytest.approx(expected[t])


@pytest.mark.parametrize("width", [1, 2, 3, 4, 5])
def test_comparator_truth_table(width):
    """Relative phase -1 exactly when x <= y, and Y restored afterwards"""
    layout = RegisterLayout(num_points=0, num_lines=0, width=width)
    circuit = build_flag_minus(layout) + build_UC(layout) + build_UC_prime(layout)
    for x_value in range(1 << width):
        for y_value in range(1 << width):
            start = QuantumState.basis(layout.num_qubits, basis_index(layout, 0, x_value, y_value))
            out = apply_circuit(start, circuit)
            index = basis_index(layout, 0, x_value, y_value)
            expected = -1 if x_value <= y_value else 1
            assert out.amplitudes[index] == pytest.approx(expected / sqrt(2)), (x_value, y_value)
            assert out.probabilities()[index] + out.probabilities()[index | 1 << layout.flag] == pytest.approx(1)


def test_comparator_equal_values_restore_y():
    layout = RegisterLayout(num_points=0, num_lines=0, width=3)
    start = QuantumState.basis(layout.num_qubits, basis_index(layout, 0, 2, 2))
    after_uc = apply_circuit(start, build_UC(layout))
    index = int(np.flatnonzero(np.abs(after_uc.amplitudes) > 0.5)[0])
    assert register_value(index, layout.y_qubits) == 0
    restored = apply_circuit(after_uc, build_UC_prime(layout))
    index = int(np.flatnonzero(np.abs(restored.amplitudes) > 0.5)[0])
    assert register_value(index, layout.y_qubits) == 2


def _check_counter(g, literal):
    """Every V-basis branch of H^V |0> carries its invalid count in X and its line flags in L"""
    layout = RegisterLayout.for_geometry(g)
    prepare = [h(q) for q in layout.v_qubits]
    state = apply_circuit(QuantumState.zeros(layout.num_qubits), prepare + build_UG(g, layout, literal=literal))
    support = np.flatnonzero(np.abs(state.amplitudes) > 1e-9)
    assert support.size == 1 << g.num_points
    for index in support.tolist():
        a = index & ((1 << g.num_points) - 1)
        assert register_value(index, layout.x_qubits) == invalid_count(g, a)
        for i, line in enumerate(g.lines):
            invalid = (sum((a >> p) & 1 for p in line) & 1) != g.line_signs[i]
            assert (index >> layout.l_qubits[i]) & 1 == int(invalid)


@pytest.mark.parametrize("literal", [False, True])
def test_counter_triangle(triangle, literal):
    _check_counter(triangle, literal)


def test_triangle_all_zero_input(triangle):
    layout = RegisterLayout.for_geometry(triangle)
    state = apply_circuit(QuantumState.zeros(layout.num_qubits), build_UG(triangle, layout))
    index = int(np.flatnonzero(np.abs(state.amplitudes) > 0.5)[0])
    assert [(index >> q) & 1 for q in layout.l_qubits] == [1, 0, 0]
    assert register_value(index, layout.x_qubits) == 1


@pytest.mark.slow
@pytest.mark.parametrize("literal", [False, True])
def test_counter_grid(grid, literal):
    _check_counter(grid, literal)


def test_literal_counter_limited_to_small_geometries(doily):
    with pytest.raises(SimulationError):
        build_UG(doily, literal=True)


def test_layout_widths(triangle, grid):
    assert RegisterLayout.for_geometry(triangle).num_qubits == 11
    assert RegisterLayout.for_geometry(grid).num_qubits == 22


def test_overflowing_counter(grid):
    with pytest.raises(SimulationError):
        build_UG(grid, RegisterLayout.for_geometry(grid, width=2))


def _check_oracle(g):
    """Phase -1 exactly on assignments with at most y invalid lines; ancillas returned"""
    layout = RegisterLayout.for_geometry(g)
    n = 1 << g.num_points
    counts = np.array([invalid_count(g, a) for a in range(n)])
    for y in range(g.num_lines + 1):
        prepare = [h(q) for q in layout.v_qubits] + build_threshold(layout, y) + build_flag_minus(layout)
        before = apply_circuit(QuantumState.zeros(layout.num_qubits), prepare)
        after = apply_circuit(before, build_oracle(g, layout))
        assert abs(after.norm - 1) < 1e-9
        offset = basis_index(layout, 0, 0, y)
        ratio = after.amplitudes[offset : offset + n] / before.amplitudes[offset : offset + n]
        expected = np.where(counts <= y, -1.0, 1.0)
        assert np.allclose(ratio, expected, atol=1e-9), y
        flag_one = offset | 1 << layout.flag
        assert np.allclose(after.amplitudes[flag_one : flag_one + n], -after.amplitudes[offset : offset + n])


def test_oracle_equivalence_triangle(triangle):
    _check_oracle(triangle)


@pytest.mark.slow
def test_oracle_equivalence_grid(grid):
    _check_oracle(grid)


def test_gate_count_estimate(grid):
    count = oracle_gate_count(grid)
    assert count["estimate"] == 2 * (6 + 6 + 15 + 15) + 3 * 3
    assert count["qubits"] == 22
    assert count["emitted_mcx"] > 0
