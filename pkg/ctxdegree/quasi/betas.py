from typing import List, Optional, Tuple

import numpy as np
from loguru import logger
from pydantic import BaseModel, Field

from ..config import settings
from ..oracle.models import DistributionSource, InvalidDistribution
from .class_state import ClassState, Trajectory, apply_query, evolve, first_peak


class BetaSchedule(BaseModel):
    """Per-query multipliers b_t chosen for one target class"""

    target: int
    multipliers: List[int]
    t_opt_prime: int
    max_probability: float
    success_probability: float
    trained_on: DistributionSource
    n_cuberoot_ratio: float
    explored: List[int] = Field(default_factory=list)

    @property
    def nonzero_multipliers(self) -> List[int]:
        return self.multipliers[: self.t_opt_prime]


def best_multiplier(state: ClassState, target: int, tie_tol: float) -> Tuple[int, float]:
    """b in [0, L) maximising D(b) = |mean after phases - phased alpha_target|.

    Ties within ``tie_tol`` go to the smallest b. Tied choices, and the mirror
    b -> L - b of a whole schedule, reach the same P(target) at every query, so
    a schedule that differs from another only in such choices is equivalent.
    """
    L = state.num_lines
    phases = np.exp(1j * state.beta * np.outer(np.arange(L), state.ells))
    phased = phases * state.amplitudes
    means = phased @ state.weights / state.n
    distance = np.abs(means - phased[:, target])
    best = int(np.flatnonzero(distance >= distance.max() - tie_tol)[0])
    return best, float(distance[best])


def optimize_betas(
    dist: InvalidDistribution,
    target: int,
    t_max: Optional[int] = None,
    patience: Optional[int] = None,
    improvement_tol: Optional[float] = None,
    tie_tol: Optional[float] = None,
) -> BetaSchedule:
    """Greedy per-query choice of b_t for P(target).

    Stops once ``patience`` consecutive queries fail to raise P(target) by more
    than ``improvement_tol``. t'_opt is the first query whose P(target) is
    within float noise of the maximum; ``multipliers`` holds the choices up to
    t'_opt followed by a single 0 and ``explored`` every query tried.
    """
    L = dist.num_lines
    if not 0 <= target <= L:
        raise ValueError(f"target {target} outside [0, {L}]")
    t_max = t_max if t_max is not None else settings.beta_max_queries
    patience = patience or settings.beta_patience
    improvement_tol = settings.beta_improvement_tol if improvement_tol is None else improvement_tol
    tie_tol = settings.beta_tie_tol if tie_tol is None else tie_tol

    state = ClassState.initial(dist)
    series = [float(state.probabilities()[target])]
    explored: List[int] = []
    best_p, stalled = series[0], 0
    for t in range(t_max):
        b, distance = best_multiplier(state, target, tie_tol)
        state = apply_query(state, b)
        explored.append(b)
        p = float(state.probabilities()[target])
        series.append(p)
        logger.debug(f"t={t + 1}: b={b} D={distance:.6f} P({target})={p:.6f}")
        if p > best_p + improvement_tol:
            best_p, stalled = p, 0
        else:
            stalled += 1
            if stalled >= patience:
                break

    t_opt = first_peak(series)
    multipliers = explored[:t_opt] + [0]
    trajectory = evolve(dist, multipliers[:t_opt], target=target)
    schedule = BetaSchedule(
        target=target,
        multipliers=multipliers,
        t_opt_prime=t_opt,
        max_probability=series[t_opt],
        success_probability=trajectory.success_probability(t_opt),
        trained_on=dist.source,
        n_cuberoot_ratio=t_opt / float(dist.n) ** (1 / 3),
        explored=explored,
    )
    logger.info(
        f"{dist.geometry}: target {target}, t'_opt={t_opt}, max P={schedule.max_probability:.5f}"
    )
    return schedule


def replay_schedule(
    dist: InvalidDistribution, multipliers: List[int], target: int
) -> Tuple[Trajectory, int, float]:
    """Apply a fixed schedule to ``dist``; returns the trajectory, its best query and P there"""
    trajectory = evolve(dist, multipliers, target=target)
    t_best = trajectory.t_max_probability
    return trajectory, t_best, trajectory.probability(t_best)
