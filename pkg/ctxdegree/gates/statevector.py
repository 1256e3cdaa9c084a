"""Dense statevector simulation with the gate set used by the Grover circuits.

Amplitude index bit q is qubit q (qubit 0 is the least significant bit).
Gates act on basic-indexing views of the state reshaped to (2,) * n, so
multi-controlled gates never build a matrix.
"""

from typing import List, Literal, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..config import settings
from ..exceptions import LimitExceededError, SimulationError

GateName = Literal["h", "x", "mcx", "mcz", "cp"]
SELF_INVERSE = {"h", "x", "mcx", "mcz"}
NORM_TOLERANCE = 1e-9


class Gate(BaseModel):
    """One gate; ``controls`` fire on |1>, ``flipped_controls`` on |0>"""

    model_config = ConfigDict(frozen=True)

    name: GateName
    target: int = Field(..., ge=0)
    controls: Tuple[int, ...] = ()
    flipped_controls: Tuple[int, ...] = ()
    theta: float = 0.0

    def inverse(self) -> "Gate":
        if self.name in SELF_INVERSE:
            return self
        return self.model_copy(update={"theta": -self.theta})

    @property
    def qubits(self) -> Tuple[int, ...]:
        return (self.target,) + self.controls + self.flipped_controls


Circuit = List[Gate]


def h(q: int) -> Gate:
    return Gate(name="h", target=q)


def x(q: int) -> Gate:
    return Gate(name="x", target=q)


def cx(control: int, target: int) -> Gate:
    return Gate(name="mcx", target=target, controls=(control,))


def mcx(controls: Sequence[int], target: int, flipped: Sequence[int] = ()) -> Gate:
    return Gate(name="mcx", target=target, controls=tuple(controls), flipped_controls=tuple(flipped))


def mcz(controls: Sequence[int], target: int) -> Gate:
    return Gate(name="mcz", target=target, controls=tuple(controls))


def cp(theta: float, controls: Sequence[int], target: int) -> Gate:
    return Gate(name="cp", target=target, controls=tuple(controls), theta=theta)


def inverse(circuit: Circuit) -> Circuit:
    """Adjoint circuit: reversed order, each gate inverted"""
    return [gate.inverse() for gate in reversed(circuit)]


class QuantumState(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    num_qubits: int = Field(..., ge=1)
    amplitudes: np.ndarray

    @classmethod
    def zeros(cls, num_qubits: int) -> "QuantumState":
        return cls.basis(num_qubits, 0)

    @classmethod
    def basis(cls, num_qubits: int, index: int) -> "QuantumState":
        if num_qubits > settings.simulator_max_qubits:
            raise LimitExceededError(
                f"{num_qubits} qubits exceed the simulator limit of "
                f"{settings.simulator_max_qubits}"
            )
        amplitudes = np.zeros(1 << num_qubits, dtype=np.complex128)
        amplitudes[index] = 1.0
        return cls(num_qubits=num_qubits, amplitudes=amplitudes)

    def copy(self) -> "QuantumState":
        return QuantumState(num_qubits=self.num_qubits, amplitudes=self.amplitudes.copy())

    @property
    def norm(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real)

    def probabilities(self, qubits: Optional[int] = None) -> np.ndarray:
        """Born probabilities of the low ``qubits`` qubits (all qubits by default)"""
        probs = np.abs(self.amplitudes) ** 2
        if qubits is None or qubits == self.num_qubits:
            return probs
        return probs.reshape(-1, 1 << qubits).sum(axis=0)

    def sample(self, shots: int, rng: np.random.Generator, qubits: Optional[int] = None) -> np.ndarray:
        """Measure the low ``qubits`` qubits ``shots`` times"""
        if shots <= 0:
            raise ValueError(f"shots must be positive, got {shots}")
        probs = self.probabilities(qubits)
        return rng.choice(probs.size, size=shots, p=probs / probs.sum())


def _check_gate(gate: Gate, num_qubits: int) -> None:
    qubits = gate.qubits
    for q in qubits:
        if not 0 <= q < num_qubits:
            raise SimulationError(f"{gate.name}: qubit {q} out of range for {num_qubits} qubits")
    if len(set(qubits)) != len(qubits):
        raise SimulationError(f"{gate.name}: repeated qubit in {qubits}")


def apply_gate(tensor: np.ndarray, gate: Gate, num_qubits: int) -> None:
    """Apply one gate in place to the state reshaped as (2,) * num_qubits"""
    _check_gate(gate, num_qubits)
    top = num_qubits - 1

    index: List[object] = [slice(None)] * num_qubits
    for q in gate.controls:
        index[top - q] = 1
    for q in gate.flipped_controls:
        index[top - q] = 0
    index[top - gate.target] = 0
    zero = tuple(index)
    index[top - gate.target] = 1
    one = tuple(index)

    if gate.name in ("x", "mcx"):
        saved = tensor[zero].copy()
        tensor[zero] = tensor[one]
        tensor[one] = saved
    elif gate.name == "h":
        a0 = tensor[zero].copy()
        a1 = tensor[one].copy()
        tensor[zero] = (a0 + a1) / np.sqrt(2)
        tensor[one] = (a0 - a1) / np.sqrt(2)
    elif gate.name == "mcz":
        tensor[one] *= -1
    elif gate.name == "cp":
        tensor[one] *= np.exp(1j * gate.theta)
    else:  # pragma: no cover - Literal guards the name
        raise SimulationError(f"unsupported gate {gate.name!r}")


def apply_circuit(state: QuantumState, circuit: Circuit, check_norm: bool = False) -> QuantumState:
    """Run ``circuit`` on a copy of ``state``"""
    out = state.copy()
    tensor = out.amplitudes.reshape((2,) * out.num_qubits)
    for gate in circuit:
        apply_gate(tensor, gate, out.num_qubits)
    if check_norm and abs(out.norm - 1.0) > NORM_TOLERANCE:
        raise SimulationError(f"norm drifted to {out.norm:.12f}")
    return out


def register_value(index: int, qubits: Sequence[int]) -> int:
    """Integer held by ``qubits`` (most significant first) in basis state ``index``"""
    value = 0
    for q in qubits:
        value = (value << 1) | ((index >> q) & 1)
    return value
