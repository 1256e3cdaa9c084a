from functools import cached_property
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from ..pauli.algebra import PauliOperator

POSITIVE = 0
NEGATIVE = 1


class Geometry(BaseModel):
    """Point-line incidence structure with a parity sign b_i per line.

    ``line_signs[i]`` is 0 for a positive line (points multiply to +1) and 1
    for a negative one. Construction does not enforce the invariants; use
    ``validate`` or the text parser for that.
    """

    model_config = ConfigDict(frozen=True)

    name: str
    num_points: int = Field(..., ge=0)
    lines: Tuple[Tuple[int, ...], ...]
    line_signs: Tuple[int, ...]
    point_labels: Optional[Tuple[PauliOperator, ...]] = None

    @property
    def num_lines(self) -> int:
        return len(self.lines)

    @property
    def negative_lines(self) -> int:
        return sum(1 for b in self.line_signs if b == NEGATIVE)

    @property
    def is_labelled(self) -> bool:
        return self.point_labels is not None

    @cached_property
    def incidence(self) -> Tuple[Tuple[int, ...], ...]:
        """Line indices through each point"""
        through: List[List[int]] = [[] for _ in range(self.num_points)]
        for i, line in enumerate(self.lines):
            for p in line:
                if 0 <= p < self.num_points:
                    through[p].append(i)
        return tuple(tuple(ls) for ls in through)

    @property
    def lines_per_point(self) -> Tuple[int, ...]:
        return tuple(len(ls) for ls in self.incidence)

    @property
    def uniform_lines_per_point(self) -> Optional[int]:
        """ℓ_p when every point lies on the same number of lines"""
        counts = set(self.lines_per_point)
        return counts.pop() if len(counts) == 1 else None

    @property
    def odd_lines(self) -> bool:
        """All lines have an odd number of points (bit-flip symmetry ℓ ↔ L-ℓ holds)"""
        return all(len(line) % 2 == 1 for line in self.lines)

    @cached_property
    def line_masks(self) -> Tuple[int, ...]:
        """Bitmask of the points on each line"""
        return tuple(sum(1 << p for p in line) for line in self.lines)

    def with_lines(
        self, keep: List[int], name: Optional[str] = None
    ) -> "Geometry":
        """Sub-geometry on the same points with only the given lines"""
        return Geometry(
            name=name or self.name,
            num_points=self.num_points,
            lines=tuple(self.lines[i] for i in keep),
            line_signs=tuple(self.line_signs[i] for i in keep),
            point_labels=self.point_labels,
        )
