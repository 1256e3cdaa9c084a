from .circuits import (
    RegisterLayout,
    build_diffusion,
    build_oracle,
    build_UC,
    build_UC_prime,
    build_UG,
    counter_width,
    oracle_gate_count,
)
from .grover import GroverPlan, RoundReport, RunReport, plan_iterations, run_grover
from .quasi_circuit import build_phase_query, quasi_grover_probabilities
from .statevector import Gate, QuantumState, apply_circuit, register_value

__all__ = [
    "Gate",
    "QuantumState",
    "apply_circuit",
    "register_value",
    "RegisterLayout",
    "counter_width",
    "build_UG",
    "build_UC",
    "build_UC_prime",
    "build_oracle",
    "build_diffusion",
    "oracle_gate_count",
    "GroverPlan",
    "RoundReport",
    "RunReport",
    "plan_iterations",
    "run_grover",
    "build_phase_query",
    "quasi_grover_probabilities",
]
