from math import comb
from typing import Optional

from loguru import logger
from pydantic import BaseModel

from .models import Geometry


class ContextualityBounds(BaseModel):
    """Classical (non-contextual hidden variable) bounds that depend on d"""

    chi_bound: int
    omega_ll: Optional[float] = None
    omega_pl: float


def contextuality_bounds(g: Geometry, d: int, players: int) -> ContextualityBounds:
    """Inequality bound L - 2d and the line-line / point-line game values.

    ω_ll needs a uniform number of lines per point; it is None otherwise.
    """
    L, V = g.num_lines, g.num_points
    if not 0 <= d <= L:
        raise ValueError(f"d={d} outside [0, {L}]")
    if L == 0 or V == 0:
        raise ValueError("bounds need at least one point and one line")

    omega_pl = 1 - (d / L) / 3
    per_point = g.uniform_lines_per_point
    omega_ll: Optional[float] = None
    if per_point is None:
        logger.warning(f"{g.name}: lines per point are not uniform; omega_ll is unsupported")
    else:
        if not 1 <= players <= per_point:
            raise ValueError(f"players={players} outside [1, {per_point}]")
        omega_ll = 1 - (comb(per_point - 1, 1) / comb(per_point, players)) * (d / V)

    return ContextualityBounds(chi_bound=L - 2 * d, omega_ll=omega_ll, omega_pl=omega_pl)
