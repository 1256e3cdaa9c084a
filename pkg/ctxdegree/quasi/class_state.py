"""Quasi-Grover evolution on one amplitude per invalid-line class.

Assignments with the same number l of invalid lines receive the same phase
e^(i b l beta) and are mixed only through the mean amplitude, so the full
2^V statevector collapses to L + 1 class amplitudes weighted by |j_l|.
"""

from math import pi, sqrt
from typing import List, Optional, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..oracle.models import InvalidDistribution

NORM_TOLERANCE = 1e-12
# P(target) values closer than this are the same peak
PEAK_TOLERANCE = 1e-9


def first_peak(values: Sequence[float], tol: float = PEAK_TOLERANCE) -> int:
    """Earliest index whose value is within ``tol`` of the maximum"""
    values = np.asarray(values, dtype=float)
    return int(np.flatnonzero(values >= values.max() - tol)[0])


class ClassState(BaseModel):
    """Amplitude alpha_l shared by every assignment in class l (l = 0..L).

    Classes with |j_l| = 0 keep a formal amplitude that never enters the norm.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    num_lines: int = Field(..., ge=1)
    n: float
    weights: np.ndarray
    amplitudes: np.ndarray

    @classmethod
    def initial(cls, dist: InvalidDistribution) -> "ClassState":
        if dist.num_lines < 1:
            raise ValueError(f"{dist.geometry} has no lines")
        weights = dist.weights()
        n = float(weights.sum())
        return cls(
            num_lines=dist.num_lines,
            n=n,
            weights=weights,
            amplitudes=np.full(dist.num_lines + 1, 1 / sqrt(n), dtype=np.complex128),
        )

    @property
    def beta(self) -> float:
        return 2 * pi / self.num_lines

    @property
    def ells(self) -> np.ndarray:
        return np.arange(self.num_lines + 1)

    def mean(self, amplitudes: Optional[np.ndarray] = None) -> complex:
        a = self.amplitudes if amplitudes is None else amplitudes
        return complex(np.dot(self.weights, a) / self.n)

    def probabilities(self) -> np.ndarray:
        """P(l) = |j_l| |alpha_l|^2"""
        return self.weights * np.abs(self.amplitudes) ** 2

    @property
    def norm(self) -> float:
        return float(self.probabilities().sum())

    def with_amplitudes(self, amplitudes: np.ndarray) -> "ClassState":
        return ClassState(
            num_lines=self.num_lines, n=self.n, weights=self.weights, amplitudes=amplitudes
        )


def _check_multiplier(s: ClassState, b: int) -> None:
    if not 0 <= b < s.num_lines:
        raise ValueError(f"multiplier b={b} outside [0, {s.num_lines})")


def apply_phases(s: ClassState, b: int) -> np.ndarray:
    """alpha_l e^(i b l beta), before diffusion"""
    _check_multiplier(s, b)
    return s.amplitudes * np.exp(1j * b * s.beta * s.ells)


def apply_query(s: ClassState, b: int) -> ClassState:
    """One quasi-Grover query: graded phase, then inversion about the mean"""
    phased = apply_phases(s, b)
    return s.with_amplitudes(2 * s.mean(phased) - phased)


class Trajectory(BaseModel):
    """P(l) after each query; row t holds the probabilities after t queries"""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    geometry: str
    target: int
    multipliers: List[int]
    probabilities: np.ndarray
    symmetric: bool = False

    @property
    def num_queries(self) -> int:
        return self.probabilities.shape[0] - 1

    @property
    def target_series(self) -> np.ndarray:
        return self.probabilities[:, self.target]

    @property
    def baseline(self) -> float:
        return float(self.probabilities[0, self.target])

    @property
    def t_opt(self) -> int:
        """First t with P_{t-1} < P_t >= P_{t+1}; the overall argmax when there is none"""
        p = self.target_series
        for t in range(1, len(p) - 1):
            if p[t - 1] < p[t] >= p[t + 1]:
                return t
        return first_peak(p)

    @property
    def t_max_probability(self) -> int:
        return first_peak(self.target_series)

    def probability(self, t: int) -> float:
        return float(self.probabilities[t, self.target])

    def success_probability(self, t: int) -> float:
        """P(y = target): P(target) + P(L - target) when the distribution is symmetric"""
        L = self.probabilities.shape[1] - 1
        p = self.probability(t)
        mirror = L - self.target
        if self.symmetric and mirror != self.target:
            p += float(self.probabilities[t, mirror])
        return p


def evolve(
    dist: InvalidDistribution, multipliers: Sequence[int], target: Optional[int] = None
) -> Trajectory:
    """Apply the queries in ``multipliers`` in order, recording P(l) after each"""
    state = ClassState.initial(dist)
    rows = [state.probabilities()]
    for b in multipliers:
        state = apply_query(state, b)
        rows.append(state.probabilities())
    return Trajectory(
        geometry=dist.geometry,
        target=dist.degree if target is None else target,
        multipliers=list(multipliers),
        probabilities=np.vstack(rows),
        symmetric=dist.is_symmetric(),
    )


def evolve_fixed(
    dist: InvalidDistribution, t_max: int, multiplier: int = 1, target: Optional[int] = None
) -> Trajectory:
    """Fixed beta = 2 pi / L for ``t_max`` queries"""
    return evolve(dist, [multiplier] * t_max, target=target)


def final_state(dist: InvalidDistribution, multipliers: Sequence[int]) -> ClassState:
    state = ClassState.initial(dist)
    for b in multipliers:
        state = apply_query(state, b)
    return state
