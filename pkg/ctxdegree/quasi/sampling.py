from typing import Dict, List, Optional

import numpy as np
from pydantic import BaseModel

from ..geometry.models import Geometry
from ..oracle.models import InvalidDistribution
from .class_state import ClassState


class MeasurementSample(BaseModel):
    shots: int
    histogram_by_ell: Dict[int, int]
    histogram_by_y: Dict[int, int]
    witnesses: Dict[int, str]
    min_y: int


def observed_value(g: Geometry, ell: int) -> int:
    """min(l, L - l) when bit-flipping every value maps l to L - l, else l"""
    return min(ell, g.num_lines - ell) if g.odd_lines else ell


def y_probabilities(state: ClassState, g: Geometry) -> Dict[int, float]:
    """P(y) after folding classes l and L - l together"""
    out: Dict[int, float] = {}
    for ell, p in enumerate(state.probabilities().tolist()):
        if p > 0:
            y = observed_value(g, ell)
            out[y] = out.get(y, 0.0) + p
    return dict(sorted(out.items()))


def sample_measurement(
    state: ClassState,
    g: Geometry,
    shots: int,
    seed: Optional[int] = None,
    dist: Optional[InvalidDistribution] = None,
    rng: Optional[np.random.Generator] = None,
) -> MeasurementSample:
    """Measure the assignment register ``shots`` times, reported per class.

    Each sampled class is paired with a concrete assignment from ``dist.witnesses``.
    """
    if shots <= 0:
        raise ValueError(f"shots must be positive, got {shots}")
    rng = rng if rng is not None else np.random.default_rng(seed)
    probs = state.probabilities()
    ells = rng.choice(probs.size, size=shots, p=probs / probs.sum())

    by_ell: Dict[int, int] = {}
    by_y: Dict[int, int] = {}
    for ell, c in enumerate(np.bincount(ells, minlength=probs.size).tolist()):
        if c:
            by_ell[ell] = c
            y = observed_value(g, ell)
            by_y[y] = by_y.get(y, 0) + c

    witnesses: Dict[int, str] = {}
    if dist is not None:
        for ell in by_ell:
            witness = dist.witness(ell)
            if witness is not None:
                witnesses[ell] = witness.as_string()

    return MeasurementSample(
        shots=shots,
        histogram_by_ell=by_ell,
        histogram_by_y=dict(sorted(by_y.items())),
        witnesses=witnesses,
        min_y=min(by_y),
    )


def sample_values(state: ClassState, g: Geometry, shots: int, rng: np.random.Generator) -> List[int]:
    """Observed y for each of ``shots`` single measurements"""
    probs = state.probabilities()
    ells = rng.choice(probs.size, size=shots, p=probs / probs.sum())
    return [observed_value(g, int(ell)) for ell in ells]
