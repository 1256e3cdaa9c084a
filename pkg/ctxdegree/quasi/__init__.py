from .betas import BetaSchedule, best_multiplier, optimize_betas, replay_schedule
from .bisection import BisectionResult, BisectionRound, find_degree_bisection
from .class_state import (
    ClassState,
    Trajectory,
    apply_phases,
    apply_query,
    evolve,
    evolve_fixed,
    final_state,
)
from .export import read_schedule, schedule_csv, trajectory_csv
from .sampling import MeasurementSample, sample_measurement, y_probabilities

__all__ = [
    "ClassState",
    "Trajectory",
    "apply_phases",
    "apply_query",
    "evolve",
    "evolve_fixed",
    "final_state",
    "BetaSchedule",
    "best_multiplier",
    "optimize_betas",
    "replay_schedule",
    "MeasurementSample",
    "sample_measurement",
    "y_probabilities",
    "BisectionResult",
    "BisectionRound",
    "find_degree_bisection",
    "trajectory_csv",
    "schedule_csv",
    "read_schedule",
]
