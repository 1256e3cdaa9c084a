from math import asin, ceil, floor, log2, pi, sin, sqrt
from typing import Dict, List, Optional

import numpy as np
from loguru import logger
from pydantic import BaseModel, Field
from scipy.stats import norm

from ..config import settings
from ..exceptions import LimitExceededError
from ..geometry.models import Geometry
from ..oracle.brute_force import invalid_count
from ..oracle.models import Assignment, InvalidDistribution
from .circuits import (
    RegisterLayout,
    build_diffusion,
    build_flag_minus,
    build_oracle,
    build_threshold,
)
from .statevector import Circuit, QuantumState, apply_circuit, h


class GroverPlan(BaseModel):
    y: int
    sigma: float
    z: float
    m_over_n: float = Field(..., ge=0.0, le=1.0)
    t_G: int
    t_A: int
    n: int
    exact: bool = False
    width: int
    num_qubits: int


class RoundReport(BaseModel):
    y_in: int
    t_G: int
    histogram_by_ell: Dict[int, int]
    # every measured assignment string and its shot count
    assignments: Dict[str, int] = Field(default_factory=dict)
    modal_assignment: str
    x: int
    y_out: int
    p_marked_expected: Optional[float] = None


class RunReport(BaseModel):
    geometry: str
    y0: int
    sigma: float
    t_G: int
    t_A: int
    seed: int
    shots: int
    per_round: List[RoundReport] = Field(default_factory=list)
    final_y: int


def grover_iterations(m_over_n: float, n: int) -> int:
    """floor(pi/4 sqrt(n/m)), at least 1; m = 0 plans for a single marked state"""
    m = max(m_over_n * n, 1.0)
    return max(1, floor(pi / 4 * sqrt(n / m)))


def marked_probability(m_over_n: float, steps: int) -> float:
    """sin^2((2t + 1) theta) with sin^2 theta = m/n"""
    theta = asin(sqrt(m_over_n))
    return sin((2 * steps + 1) * theta) ** 2


def plan_iterations(
    g: Geometry, y: int, dist_hint: Optional[InvalidDistribution] = None
) -> GroverPlan:
    """Iteration counts for threshold y, from an exact distribution or the normal estimate"""
    L = g.num_lines
    if not 0 <= y <= L:
        raise ValueError(f"threshold y={y} outside [0, {L}]")
    if L == 0:
        raise ValueError(f"{g.name} has no lines")
    n = 1 << g.num_points
    sigma = sqrt(L) / 2
    z = (y - L / 2) / sigma
    if dist_hint is not None:
        m_over_n = float(sum(c for ell, c in dist_hint.counts.items() if ell <= y)) / n
    else:
        m_over_n = float(norm.cdf(z))
    layout = RegisterLayout.for_geometry(g)
    return GroverPlan(
        y=y,
        sigma=sigma,
        z=z,
        m_over_n=min(1.0, m_over_n),
        t_G=grover_iterations(m_over_n, n),
        t_A=ceil(log2(L + 1)),
        n=n,
        exact=dist_hint is not None,
        width=layout.width,
        num_qubits=layout.num_qubits,
    )


def grover_circuit(g: Geometry, layout: RegisterLayout, y: int, steps: int, literal: bool = False) -> Circuit:
    """State preparation followed by ``steps`` oracle + diffusion repetitions"""
    circuit: Circuit = [h(q) for q in layout.v_qubits]
    circuit += build_threshold(layout, y) + build_flag_minus(layout)
    if steps:
        step = build_oracle(g, layout, literal=literal) + build_diffusion(layout.v_qubits)
        circuit += step * steps
    return circuit


def run_grover(
    g: Geometry,
    y0: Optional[int] = None,
    shots: int = 2048,
    seed: int = 0,
    t_g: Optional[int] = None,
    control: bool = False,
    dist_hint: Optional[InvalidDistribution] = None,
    rounds: Optional[int] = None,
) -> RunReport:
    """Adaptive threshold search: t_A rounds of Grover search, lowering y after each.

    Args:
        y0: initial threshold, the number of negative lines by default
        t_g: fixed iteration count overriding the plan
        control: run with no Grover iterations (uniform sampling)
        dist_hint: exact distribution used to plan m/n
        rounds: number of rounds, t_A by default
    """
    if shots <= 0:
        raise ValueError(f"shots must be positive, got {shots}")
    L = g.num_lines
    y = g.negative_lines if y0 is None else y0
    if not 0 <= y <= L:
        raise ValueError(f"y0={y} outside [0, {L}]")
    layout = RegisterLayout.for_geometry(g)
    if layout.num_qubits > settings.simulator_max_qubits:
        raise LimitExceededError(
            f"{g.name} needs {layout.num_qubits} qubits, limit is {settings.simulator_max_qubits}"
        )

    rng = np.random.default_rng(seed)
    first = plan_iterations(g, y, dist_hint)
    report = RunReport(
        geometry=g.name,
        y0=y,
        sigma=first.sigma,
        t_G=0 if control else (t_g if t_g is not None else first.t_G),
        t_A=first.t_A,
        seed=seed,
        shots=shots,
        final_y=y,
    )

    for r in range(rounds if rounds is not None else first.t_A):
        plan = plan_iterations(g, y, dist_hint)
        steps = 0 if control else (t_g if t_g is not None else plan.t_G)
        circuit = grover_circuit(g, layout, y, steps)
        state = apply_circuit(QuantumState.zeros(layout.num_qubits), circuit)
        outcomes = state.sample(shots, rng, qubits=g.num_points)

        frequencies = np.bincount(outcomes, minlength=1 << g.num_points)
        histogram: Dict[int, int] = {}
        assignments: Dict[str, int] = {}
        for value in np.flatnonzero(frequencies).tolist():
            ell = invalid_count(g, value)
            histogram[ell] = histogram.get(ell, 0) + int(frequencies[value])
            label = Assignment(num_points=g.num_points, value=value).as_string()
            assignments[label] = int(frequencies[value])
        modal = int(np.argmax(frequencies))
        x_count = invalid_count(g, modal)
        y_out = min(x_count, L - x_count, y) if g.odd_lines else min(x_count, y)

        expected = marked_probability(plan.m_over_n, steps) if plan.exact else None
        logger.debug(
            f"round {r}: y={y} t_G={steps} modal={modal} x={x_count} -> y={y_out}"
        )
        report.per_round.append(
            RoundReport(
                y_in=y,
                t_G=steps,
                histogram_by_ell=dict(sorted(histogram.items())),
                assignments=assignments,
                modal_assignment=Assignment(num_points=g.num_points, value=modal).as_string(),
                x=x_count,
                y_out=y_out,
                p_marked_expected=expected,
            )
        )
        y = y_out

    report.final_y = y
    return report
