"""Gate lists for the threshold oracle U_G, the comparator U_C and the diffusion.

Register layout on one statevector::

    V  assignment qubits          0 .. V-1
    L  line validity flags        V .. V+L-1      (|1> = line invalid)
    X  invalid-line counter       w qubits, most significant first
    Y  threshold                  w qubits, most significant first
    flag                          last qubit, prepared in |->

with w = ceil(log2(L + 1)) so that x = L fits.
"""

import itertools
from math import ceil, comb, log2
from typing import Dict, List, Optional, Sequence

from loguru import logger
from pydantic import BaseModel

from ..exceptions import SimulationError
from ..geometry.models import NEGATIVE, Geometry
from .statevector import Circuit, cx, h, inverse, mcx, mcz, x

LITERAL_COUNTER_MAX_LINES = 6


def counter_width(num_lines: int) -> int:
    return max(1, ceil(log2(num_lines + 1)))


class RegisterLayout(BaseModel):
    num_points: int
    num_lines: int
    width: int

    @classmethod
    def for_geometry(cls, g: Geometry, width: Optional[int] = None) -> "RegisterLayout":
        return cls(
            num_points=g.num_points,
            num_lines=g.num_lines,
            width=width if width is not None else counter_width(g.num_lines),
        )

    @property
    def v_qubits(self) -> List[int]:
        return list(range(self.num_points))

    @property
    def l_qubits(self) -> List[int]:
        start = self.num_points
        return list(range(start, start + self.num_lines))

    @property
    def x_qubits(self) -> List[int]:
        start = self.num_points + self.num_lines
        return list(range(start, start + self.width))

    @property
    def y_qubits(self) -> List[int]:
        start = self.num_points + self.num_lines + self.width
        return list(range(start, start + self.width))

    @property
    def flag(self) -> int:
        return self.num_points + self.num_lines + 2 * self.width

    @property
    def num_qubits(self) -> int:
        return self.flag + 1

    def x_bit(self, k: int) -> int:
        """Qubit holding the 2^k digit of the counter"""
        return self.x_qubits[self.width - 1 - k]

    def y_bit(self, k: int) -> int:
        return self.y_qubits[self.width - 1 - k]


def build_parity_flags(g: Geometry, layout: RegisterLayout) -> Circuit:
    """Set line qubit i to 1 iff line i is invalid (the P / N gates)"""
    circuit: Circuit = []
    for i, line in enumerate(g.lines):
        target = layout.l_qubits[i]
        for p in line:
            circuit.append(cx(p, target))
        if g.line_signs[i] == NEGATIVE:
            circuit.append(x(target))
    return circuit


def _ripple_counter(layout: RegisterLayout) -> Circuit:
    circuit: Circuit = []
    for line_qubit in layout.l_qubits:
        # +1 controlled on the line qubit; higher digits first so lower ones are still unchanged
        for k in range(layout.width - 1, -1, -1):
            controls = [line_qubit] + [layout.x_bit(j) for j in range(k)]
            circuit.append(mcx(controls, layout.x_bit(k)))
    return circuit


def _literal_counter(layout: RegisterLayout) -> Circuit:
    # Digit k flips once per all-invalid subset of 2^k lines: C(s, 2^k) mod 2 is digit k of s
    if layout.num_lines > LITERAL_COUNTER_MAX_LINES:
        raise SimulationError(
            f"literal counter is limited to {LITERAL_COUNTER_MAX_LINES} lines, got {layout.num_lines}"
        )
    circuit: Circuit = []
    for k in range(layout.width):
        for subset in itertools.combinations(layout.l_qubits, 1 << k):
            circuit.append(mcx(subset, layout.x_bit(k)))
    return circuit


def build_UG(g: Geometry, layout: Optional[RegisterLayout] = None, literal: bool = False) -> Circuit:
    """Line flags followed by a counter leaving the invalid count in the X register"""
    layout = layout or RegisterLayout.for_geometry(g)
    if layout.num_lines != g.num_lines or layout.num_points != g.num_points:
        raise SimulationError("register layout does not match the geometry")
    if g.num_lines >= 1 << layout.width:
        raise SimulationError(
            f"X register of width {layout.width} overflows for {g.num_lines} lines"
        )
    for line in g.lines:
        if len(line) not in (2, 3):
            raise SimulationError(f"line {line} has {len(line)} points")
    counter = _literal_counter(layout) if literal else _ripple_counter(layout)
    return build_parity_flags(g, layout) + counter


def build_UC(layout: RegisterLayout) -> Circuit:
    """Flag flip on every branch, undone when x > y; leaves Y as x XOR y"""
    xs, ys, flag = layout.x_qubits, layout.y_qubits, layout.flag
    if len(xs) != len(ys):
        raise SimulationError("X and Y registers differ in width")
    circuit: Circuit = [x(flag)]
    for i in range(len(xs)):
        # y_0..y_{i-1} now read 0 where the prefixes agree; y_i is still the original digit
        circuit.append(mcx([xs[i]], flag, flipped=ys[: i + 1]))
        circuit.append(cx(xs[i], ys[i]))
    return circuit


def build_UC_prime(layout: RegisterLayout) -> Circuit:
    """Restore Y to y after build_UC"""
    xs, ys = layout.x_qubits, layout.y_qubits
    if len(xs) != len(ys):
        raise SimulationError("X and Y registers differ in width")
    return [cx(xs[i], ys[i]) for i in reversed(range(len(xs)))]


def build_oracle(g: Geometry, layout: RegisterLayout, literal: bool = False) -> Circuit:
    """U_G, U_C, U_C', U_G^-1: phase -1 on assignments with at most y invalid lines"""
    ug = build_UG(g, layout, literal=literal)
    return ug + build_UC(layout) + build_UC_prime(layout) + inverse(ug)


def build_diffusion(qubits: Sequence[int]) -> Circuit:
    """Inversion about the mean on ``qubits`` (up to a global phase of -1)"""
    qubits = list(qubits)
    circuit: Circuit = [h(q) for q in qubits] + [x(q) for q in qubits]
    circuit.append(mcz(qubits[:-1], qubits[-1]))
    circuit += [x(q) for q in qubits] + [h(q) for q in qubits]
    return circuit


def build_threshold(layout: RegisterLayout, y: int) -> Circuit:
    """X gates writing y into the Y register"""
    if not 0 <= y < 1 << layout.width:
        raise SimulationError(f"threshold {y} does not fit {layout.width} qubits")
    return [x(layout.y_bit(k)) for k in range(layout.width) if (y >> k) & 1]


def build_flag_minus(layout: RegisterLayout) -> Circuit:
    return [x(layout.flag), h(layout.flag)]


def oracle_gate_count(g: Geometry, literal: bool = False) -> Dict[str, int]:
    """Emitted multi-controlled NOTs per oracle next to the closed-form estimate"""
    layout = RegisterLayout.for_geometry(g)
    w = layout.width
    estimate = 2 * (g.num_lines + sum(comb(g.num_lines, 1 << k) for k in range(w))) + 3 * w
    oracle = build_oracle(g, layout, literal=literal and g.num_lines <= LITERAL_COUNTER_MAX_LINES)
    emitted = sum(1 for gate in oracle if gate.name == "mcx")
    logger.debug(f"{g.name}: {emitted} controlled NOTs emitted, estimate {estimate}")
    return {
        "qubits": layout.num_qubits,
        "width": w,
        "estimate": estimate,
        "emitted_mcx": emitted,
        "total_gates": len(oracle),
    }
