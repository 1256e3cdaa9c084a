"""Exact invalid-line distributions by exhaustive Gray-code enumeration.

The top ``block_bits`` assignment bits are held as one numpy vector and the
remaining low bits are walked in Gray-code order, so each step flips a
single point and only the lines through it change state.
"""

import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from math import comb
from typing import Dict, List, Optional, Tuple, Union

import numpy as np
from loguru import logger

from ..config import settings
from ..exceptions import DimensionError, LimitExceededError
from ..geometry.models import Geometry
from .models import Assignment, DegreeResult, DistributionSource, InvalidDistribution

# (lines, signs, incidence, num_points, low_bits, start, stop)
Chunk = Tuple[
    Tuple[Tuple[int, ...], ...], Tuple[int, ...], Tuple[Tuple[int, ...], ...], int, int, int, int
]


def to_gray_code(x: int) -> int:
    """Convert a counter index to its corresponding Gray code."""
    return (x >> 1) ^ x


def gray_flip_bit(k: int) -> int:
    """Bit that changes between Gray codes k-1 and k (k >= 1)"""
    return (k & -k).bit_length() - 1


def invalid_count(g: Geometry, a: Union[Assignment, int]) -> int:
    """Number of lines whose parity constraint the assignment violates"""
    if isinstance(a, Assignment):
        if a.num_points != g.num_points:
            raise DimensionError(
                f"assignment has {a.num_points} bits, geometry {g.name} has {g.num_points} points"
            )
        value = a.value
    else:
        value = a
        if value < 0 or value >> g.num_points:
            raise DimensionError(f"assignment {value} does not fit {g.num_points} points")
    return sum(
        1
        for mask, b in zip(g.line_masks, g.line_signs)
        if ((value & mask).bit_count() & 1) != b
    )


def _walk_chunk(chunk: Chunk) -> Tuple[np.ndarray, Dict[int, int]]:
    """Counts and smallest witness per class for high parts in [start, stop)"""
    lines, signs, incidence, num_points, low_bits, start, stop = chunk
    num_lines = len(lines)
    high = np.arange(start, stop, dtype=np.int64)

    # Line states with all low bits zero
    rows = np.empty((num_lines, high.size), dtype=np.int8)
    for i, line in enumerate(lines):
        parity = np.full(high.size, signs[i], dtype=np.int8)
        for p in line:
            if p >= low_bits:
                parity ^= ((high >> (p - low_bits)) & 1).astype(np.int8)
        rows[i] = parity
    ell = rows.sum(axis=0, dtype=np.int32)

    counts = np.zeros(num_lines + 1, dtype=np.int64)
    witnesses: Dict[int, int] = {}

    def record(gray: int) -> None:
        counts[:] += np.bincount(ell, minlength=num_lines + 1)
        classes, first = np.unique(ell, return_index=True)
        for c, idx in zip(classes.tolist(), first.tolist()):
            candidate = ((start + idx) << low_bits) | gray
            if candidate < witnesses.get(c, candidate + 1):
                witnesses[c] = candidate

    gray = 0
    record(gray)
    for k in range(1, 1 << low_bits):
        p = gray_flip_bit(k)
        gray ^= 1 << p
        for i in incidence[p]:
            ell += 1 - 2 * rows[i].astype(np.int32)
            rows[i] ^= 1
        record(gray)
    return counts, witnesses


def _chunks(g: Geometry, workers: int, block_bits: int) -> List[Chunk]:
    high_bits = min(block_bits, g.num_points)
    low_bits = g.num_points - high_bits
    size = 1 << high_bits
    parts = max(1, min(workers, size))
    step = -(-size // parts)
    lines = tuple(tuple(line) for line in g.lines)
    return [
        (lines, tuple(g.line_signs), g.incidence, g.num_points, low_bits, s, min(s + step, size))
        for s in range(0, size, step)
    ]


def invalid_distribution(
    g: Geometry, workers: Optional[int] = None, block_bits: Optional[int] = None
) -> InvalidDistribution:
    """Exact |j_l| over all 2^V assignments, with the smallest witness per class.

    Raises:
        LimitExceededError: V above ``settings.brute_force_max_points``
    """
    if g.num_points > settings.brute_force_max_points:
        raise LimitExceededError(
            f"{g.name}: V={g.num_points} exceeds the brute-force limit of "
            f"{settings.brute_force_max_points} points"
        )
    workers = workers or settings.workers
    block_bits = block_bits or settings.block_bits
    chunks = _chunks(g, workers, block_bits)

    started = time.perf_counter()
    if workers > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(_walk_chunk, chunks))
    else:
        results = [_walk_chunk(chunk) for chunk in chunks]

    counts = np.zeros(g.num_lines + 1, dtype=np.int64)
    witnesses: Dict[int, int] = {}
    for part_counts, part_witnesses in results:
        counts += part_counts
        for c, value in part_witnesses.items():
            witnesses[c] = min(value, witnesses.get(c, value))

    elapsed = time.perf_counter() - started
    logger.info(
        f"Enumerated 2^{g.num_points} assignments of {g.name} "
        f"in {elapsed:.2f}s ({len(chunks)} chunk(s), {workers} worker(s))"
    )
    return InvalidDistribution(
        geometry=g.name,
        num_points=g.num_points,
        num_lines=g.num_lines,
        counts={ell: int(c) for ell, c in enumerate(counts.tolist()) if c > 0},
        source=DistributionSource.EXACT,
        witnesses=dict(sorted(witnesses.items())),
    )


def naive_distribution(g: Geometry) -> InvalidDistribution:
    """Per-assignment recount; reference for small geometries"""
    if g.num_points > settings.brute_force_max_points:
        raise LimitExceededError(f"{g.name}: V={g.num_points} is too large to enumerate")
    counts: Dict[int, int] = {}
    witnesses: Dict[int, int] = {}
    for value in range(1 << g.num_points):
        ell = invalid_count(g, value)
        counts[ell] = counts.get(ell, 0) + 1
        witnesses.setdefault(ell, value)
    return InvalidDistribution(
        geometry=g.name,
        num_points=g.num_points,
        num_lines=g.num_lines,
        counts=dict(sorted(counts.items())),
        witnesses=dict(sorted(witnesses.items())),
    )


def degree_of(g: Geometry, distribution: Optional[InvalidDistribution] = None) -> DegreeResult:
    """Degree of contextuality d with its smallest witness assignment"""
    dist = distribution or invalid_distribution(g)
    d = dist.degree
    return DegreeResult(
        degree=d,
        count=int(dist.count(d)),
        witness=Assignment(num_points=g.num_points, value=dist.witnesses[d]),
        distribution=dist,
    )


def binomial_distribution(g: Geometry) -> InvalidDistribution:
    """|j_l| ~ C(L, l) 2^(V-L); counts are Fractions when L > V"""
    V, L = g.num_points, g.num_lines
    counts: Dict[int, Union[int, Fraction]] = {}
    for ell in range(L + 1):
        value = Fraction(comb(L, ell) * (1 << V), 1 << L)
        counts[ell] = int(value) if value.denominator == 1 else value
    return InvalidDistribution(
        geometry=g.name,
        num_points=V,
        num_lines=L,
        counts=counts,
        source=DistributionSource.BINOMIAL,
    )
