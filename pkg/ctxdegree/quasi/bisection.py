"""Search for an unknown degree by bracketing it with optimised quasi-Grover rounds."""

from math import ceil, log2
from typing import Dict, List, Optional

import numpy as np
from loguru import logger
from pydantic import BaseModel, Field

from ..config import settings
from ..geometry.models import Geometry
from ..oracle.brute_force import binomial_distribution
from ..oracle.cache import load_or_compute
from ..oracle.models import DistributionSource, InvalidDistribution
from .betas import BetaSchedule, optimize_betas
from .class_state import ClassState, final_state
from .sampling import sample_values


class BisectionRound(BaseModel):
    round: int
    ell_prime: Optional[int] = None
    t_opt: int = 0
    multipliers: List[int] = Field(default_factory=list)
    samples: List[int] = Field(default_factory=list)
    observed: int
    lo: int
    hi: int
    heuristic: bool = False

    def audit_line(self) -> str:
        target = "none" if self.ell_prime is None else self.ell_prime
        return (
            f"round ell_prime={target} t_opt={self.t_opt} observed={self.observed} "
            f"bracket=[{self.lo},{self.hi}]"
        )


class BisectionResult(BaseModel):
    geometry: str
    model: DistributionSource
    seed: int
    attempts: int
    estimate: int
    closed: bool
    rounds: List[BisectionRound] = Field(default_factory=list)

    def audit_lines(self) -> List[str]:
        return [r.audit_line() for r in self.rounds]


def find_degree_bisection(
    g: Geometry,
    dist_model: DistributionSource = DistributionSource.EXACT,
    seed: int = 0,
    shots: Optional[int] = None,
    exact: Optional[InvalidDistribution] = None,
) -> BisectionResult:
    """Upper bound on d from a bracket [lo, hi] narrowed by targeted rounds.

    Measurements always come from the exact class populations; ``dist_model``
    only selects what the beta schedules are trained on. A target that is not
    observed within ceil(log2 shots) attempts moves lo past it.
    """
    shots = shots or settings.default_shots
    exact = exact if exact is not None else load_or_compute(g)
    model = exact if dist_model == DistributionSource.EXACT else binomial_distribution(g)
    rng = np.random.default_rng(seed)
    attempts = max(1, ceil(log2(shots)))
    L = g.num_lines

    lo, hi = 0, (L // 2 if g.odd_lines else L)
    uniform = ClassState.initial(exact)
    first = sample_values(uniform, g, 1, rng)[0]
    hi = min(hi, first)
    rounds = [BisectionRound(round=0, samples=[first], observed=first, lo=lo, hi=hi)]
    logger.debug(rounds[0].audit_line())

    schedules: Dict[int, BetaSchedule] = {}
    number = 0
    while lo < hi:
        number += 1
        target = (lo + hi) // 2
        if target not in schedules:
            schedules[target] = optimize_betas(model, target)
        schedule = schedules[target]
        state = final_state(exact, schedule.nonzero_multipliers)

        samples: List[int] = []
        for _ in range(attempts):
            samples.extend(sample_values(state, g, 1, rng))
            if samples[-1] <= target:
                break
        observed = min(samples)
        hi = min(hi, observed)
        failed = observed > target
        if failed:
            lo = target + 1

        entry = BisectionRound(
            round=number,
            ell_prime=target,
            t_opt=schedule.t_opt_prime,
            multipliers=schedule.multipliers,
            samples=samples,
            observed=observed,
            lo=lo,
            hi=hi,
            heuristic=failed,
        )
        logger.debug(entry.audit_line())
        rounds.append(entry)

    return BisectionResult(
        geometry=g.name,
        model=dist_model,
        seed=seed,
        attempts=attempts,
        estimate=hi,
        closed=lo == hi,
        rounds=rounds,
    )
