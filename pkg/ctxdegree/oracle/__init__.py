from .brute_force import (
    binomial_distribution,
    degree_of,
    gray_flip_bit,
    invalid_count,
    invalid_distribution,
    naive_distribution,
    to_gray_code,
)
from .cache import geometry_key, load_or_compute
from .export import distribution_csv
from .models import Assignment, DegreeResult, DistributionSource, InvalidDistribution

__all__ = [
    "Assignment",
    "DegreeResult",
    "DistributionSource",
    "InvalidDistribution",
    "invalid_count",
    "invalid_distribution",
    "naive_distribution",
    "degree_of",
    "binomial_distribution",
    "to_gray_code",
    "gray_flip_bit",
    "load_or_compute",
    "geometry_key",
    "distribution_csv",
]
