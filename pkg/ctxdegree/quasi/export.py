import io
from typing import List

import pandas as pd

from .class_state import Trajectory


def trajectory_frame(trajectory: Trajectory) -> pd.DataFrame:
    """Long format: one row per (t, l)"""
    probs = trajectory.probabilities
    steps, classes = probs.shape
    return pd.DataFrame(
        {
            "t": [t for t in range(steps) for _ in range(classes)],
            "ell": list(range(classes)) * steps,
            "P": probs.reshape(-1),
        }
    )


def trajectory_csv(trajectory: Trajectory) -> str:
    buffer = io.StringIO()
    trajectory_frame(trajectory).to_csv(
        buffer, index=False, float_format="%.10f", lineterminator="\n"
    )
    return buffer.getvalue()


def schedule_csv(multipliers: List[int]) -> str:
    """`t,b_t` with t counted from 1"""
    frame = pd.DataFrame({"t": range(1, len(multipliers) + 1), "b_t": multipliers})
    buffer = io.StringIO()
    frame.to_csv(buffer, index=False, lineterminator="\n")
    return buffer.getvalue()


def read_schedule(path: str) -> List[int]:
    """Multipliers from a `t,b_t` CSV (or a plain list of integers, one per line)"""
    frame = pd.read_csv(path, comment="#")
    if "b_t" in frame.columns:
        return [int(b) for b in frame.sort_values("t")["b_t"]]
    frame = pd.read_csv(path, comment="#", header=None)
    return [int(b) for b in frame.iloc[:, 0]]
