from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

Count = Union[int, Fraction]


class DistributionSource(str, Enum):
    EXACT = "exact"
    BINOMIAL = "binomial"


class Assignment(BaseModel):
    """Hidden-variable assignment; bit v of ``value`` is a_v, i.e. e(O_v) = (-1)^a_v"""

    model_config = ConfigDict(frozen=True)

    num_points: int = Field(..., ge=0)
    value: int = Field(0, ge=0)

    @model_validator(mode="after")
    def _check_width(self) -> "Assignment":
        if self.value >> self.num_points:
            raise ValueError(f"assignment {self.value} has more than {self.num_points} bits")
        return self

    @classmethod
    def from_bits(cls, bits: List[int]) -> "Assignment":
        value = 0
        for v, bit in enumerate(bits):
            if bit not in (0, 1):
                raise ValueError(f"bit {v} is {bit!r}, expected 0 or 1")
            value |= bit << v
        return cls(num_points=len(bits), value=value)

    @property
    def bits(self) -> Tuple[int, ...]:
        return tuple((self.value >> v) & 1 for v in range(self.num_points))

    def flipped(self) -> "Assignment":
        """The complementary assignment j~ (every value negated)"""
        return Assignment(
            num_points=self.num_points, value=self.value ^ ((1 << self.num_points) - 1)
        )

    def as_string(self) -> str:
        """Bits a_0 a_1 ... a_{V-1} left to right"""
        return "".join(str(b) for b in self.bits)

    def __getitem__(self, v: int) -> int:
        return (self.value >> v) & 1


class InvalidDistribution(BaseModel):
    """Number of assignments |j_l| with exactly l invalid lines, for l = 0..L.

    ``counts`` is sparse for exact distributions (only classes that occur)
    and dense for the binomial approximation. ``witnesses`` maps each
    occurring class to its smallest assignment value.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    geometry: str
    num_points: int
    num_lines: int
    counts: Dict[int, Count]
    source: DistributionSource = DistributionSource.EXACT
    witnesses: Dict[int, int] = Field(default_factory=dict)

    @property
    def n(self) -> int:
        return 1 << self.num_points

    @property
    def total(self) -> Count:
        return sum(self.counts.values())

    @property
    def degree(self) -> int:
        """Smallest l with |j_l| > 0"""
        return min(ell for ell, c in self.counts.items() if c > 0)

    def count(self, ell: int) -> Count:
        return self.counts.get(ell, 0)

    def probabilities(self) -> Dict[int, float]:
        n = self.n
        return {ell: float(c) / n for ell, c in sorted(self.counts.items())}

    def weights(self) -> np.ndarray:
        """Dense float vector of |j_l| for l = 0..L"""
        dense = np.zeros(self.num_lines + 1)
        for ell, c in self.counts.items():
            dense[ell] = float(c)
        return dense

    def is_symmetric(self) -> bool:
        """|j_l| == |j_{L-l}| for every l"""
        L = self.num_lines
        return all(self.count(ell) == self.count(L - ell) for ell in range(L + 1))

    def witness(self, ell: int) -> Optional["Assignment"]:
        value = self.witnesses.get(ell)
        if value is None:
            return None
        return Assignment(num_points=self.num_points, value=value)


class DegreeResult(BaseModel):
    degree: int
    count: int
    witness: Assignment
    distribution: InvalidDistribution
