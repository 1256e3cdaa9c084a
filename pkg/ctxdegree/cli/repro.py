"""Regenerate the reference tables and compare them with the shipped expectations."""

from importlib import resources
from math import sqrt
from typing import Any, Callable, Dict, List, Optional

import pandas as pd
import yaml
from loguru import logger

from ..geometry.named import build_named
from ..gates.grover import marked_probability, run_grover
from ..oracle.brute_force import binomial_distribution
from ..oracle.cache import load_or_compute
from ..quasi.betas import optimize_betas, replay_schedule
from ..quasi.class_state import evolve_fixed

PASS, FAIL, SOFT_PASS, SOFT_FAIL = "PASS", "FAIL", "SOFT-PASS", "SOFT-FAIL"
COLUMNS = ["table", "geometry", "quantity", "expected", "observed", "tolerance", "status"]
FIXED_BETA_QUERIES = 20


def load_expectations() -> Dict[str, Any]:
    text = resources.files("ctxdegree").joinpath("data/expected_tables.yaml").read_text()
    return yaml.safe_load(text)


def _row(table, geometry, quantity, expected, observed, tolerance, ok, soft=False) -> Dict[str, Any]:
    if soft:
        status = SOFT_PASS if ok else SOFT_FAIL
    else:
        status = PASS if ok else FAIL
    return {
        "table": table,
        "geometry": geometry,
        "quantity": quantity,
        "expected": expected,
        "observed": observed,
        "tolerance": tolerance,
        "status": status,
    }


def _close(observed: float, expected: float, tolerance: float) -> bool:
    return abs(observed - expected) <= tolerance


def table1(table: Dict[str, Any], seed: int, include_slow: bool) -> List[Dict[str, Any]]:
    rows = []
    sigmas = table["sigmas"]
    for entry in table["rows"]:
        g = build_named(entry["geometry"])
        dist = load_or_compute(g)
        shots, t_g = entry["shots"], entry["t_G"]
        report = run_grover(
            g, y0=2, shots=shots, seed=seed, t_g=t_g, control=t_g == 0, dist_hint=dist, rounds=1
        )
        histogram = report.per_round[0].histogram_by_ell
        label = f"t_G={t_g}"
        if entry["exact"]:
            for ell, expected in entry["counts"].items():
                observed = histogram.get(ell, 0)
                rows.append(_row("table1", g.name, f"{label} count l={ell}", expected, observed, 0, observed == expected))
            continue

        # Expected class probabilities: marked classes share sin^2((2t+1)theta), the rest share its complement
        marked = {ell for ell in dist.counts if ell <= 2} if t_g else set(dist.counts)
        m_over_n = sum(dist.counts[ell] for ell in marked) / dist.n
        p_marked = marked_probability(m_over_n, t_g) if t_g else 1.0
        unmarked_total = dist.n - sum(dist.counts[ell] for ell in marked)
        for ell, reference in entry["counts"].items():
            if ell in marked:
                p = p_marked * dist.counts[ell] / (m_over_n * dist.n)
            else:
                p = (1 - p_marked) * dist.counts[ell] / unmarked_total
            mean = shots * p
            tolerance = sigmas * sqrt(shots * p * (1 - p))
            observed = histogram.get(ell, 0)
            rows.append(
                _row("table1", g.name, f"{label} count l={ell} (reference {reference})",
                     round(mean, 1), observed, round(tolerance, 1), _close(observed, mean, tolerance))
            )
    return rows


def table4(table: Dict[str, Any], seed: int, include_slow: bool) -> List[Dict[str, Any]]:
    rows = []
    tol = table["tolerance"]
    for entry in table["rows"]:
        if entry.get("slow") and not include_slow:
            continue
        dist = load_or_compute(build_named(entry["geometry"]))
        trajectory = evolve_fixed(dist, FIXED_BETA_QUERIES)
        t_opt = trajectory.t_opt
        name = entry["geometry"]
        rows.append(_row("table4", name, "t_opt", entry["t_opt"], t_opt, 0, t_opt == entry["t_opt"]))
        p = trajectory.probability(t_opt)
        rows.append(_row("table4", name, "P(d) at t_opt", entry["p_opt"], round(p, 6), tol, _close(p, entry["p_opt"], tol)))
        rows.append(_row("table4", name, "P(d) baseline", entry["baseline"], round(trajectory.baseline, 6), tol, _close(trajectory.baseline, entry["baseline"], tol)))
    return rows


def table5(table: Dict[str, Any], seed: int, include_slow: bool) -> List[Dict[str, Any]]:
    rows = []
    for entry in table["rows"]:
        if entry.get("slow") and not include_slow:
            continue
        dist = load_or_compute(build_named(entry["geometry"]))
        name = entry["geometry"]
        rows.append(_row("table5", name, "n", entry["n"], dist.n, 0, dist.n == entry["n"]))
        for ell, expected in entry["counts"].items():
            observed = dist.count(ell)
            rows.append(_row("table5", name, f"|j_{ell}|", expected, observed, 0, observed == expected))
        if not entry.get("partial"):
            extra = set(dist.counts) - set(entry["counts"])
            rows.append(_row("table5", name, "no other classes", 0, len(extra), 0, not extra))
        rows.append(_row("table5", name, "symmetric", True, dist.is_symmetric(), 0, dist.is_symmetric()))
    return rows


def table7(table: Dict[str, Any], seed: int, include_slow: bool) -> List[Dict[str, Any]]:
    rows = []
    tol, t_tol = table["tolerance"], table["t_tolerance"]
    for entry in table["rows"]:
        if entry.get("slow") and not include_slow:
            continue
        dist = load_or_compute(build_named(entry["geometry"]))
        schedule = optimize_betas(dist, dist.degree)
        name = entry["geometry"]
        rows.append(_row("table7", name, "t'_opt", entry["t_opt"], schedule.t_opt_prime, t_tol, abs(schedule.t_opt_prime - entry["t_opt"]) <= t_tol))
        rows.append(_row("table7", name, "max P(d)", entry["max_p"], round(schedule.max_probability, 6), tol, _close(schedule.max_probability, entry["max_p"], tol)))
        rows.append(_row("table7", name, "t'_opt / n^(1/3)", "", round(schedule.n_cuberoot_ratio, 4), "", True, soft=True))
        if "multipliers" in entry:
            observed = " ".join(str(b) for b in schedule.multipliers)
            expected = " ".join(str(b) for b in entry["multipliers"])
            # tied or mirrored choices reach the same P(d), so either form passes
            _, _, reference_p = replay_schedule(dist, entry["multipliers"], dist.degree)
            equivalent = observed == expected or _close(schedule.max_probability, reference_p, tol)
            rows.append(_row("table7", name, "b_t", expected, observed, "", equivalent, soft=True))
    return rows


def table8(table: Dict[str, Any], seed: int, include_slow: bool) -> List[Dict[str, Any]]:
    rows = []
    tol, t_tol = table["tolerance"], table["t_tolerance"]
    for entry in table["rows"]:
        if entry.get("slow") and not include_slow:
            continue
        g = build_named(entry["geometry"])
        exact = load_or_compute(g)
        d = exact.degree
        name = entry["geometry"]

        trained = optimize_betas(exact, d)
        rows.append(_row("table8", name, "exact t'_opt", entry["exact_t"], trained.t_opt_prime, t_tol, abs(trained.t_opt_prime - entry["exact_t"]) <= t_tol))
        rows.append(_row("table8", name, "exact 2 max P(d)", entry["exact_p"], round(trained.success_probability, 6), tol, _close(trained.success_probability, entry["exact_p"], tol)))

        # the whole trained schedule, including queries past the binomial peak
        binomial = optimize_betas(binomial_distribution(g), d)
        trajectory, t_best, _ = replay_schedule(exact, binomial.explored, d)
        p = trajectory.success_probability(t_best)
        rows.append(_row("table8", name, "binomial t'_opt", entry["binomial_t"], t_best, t_tol, abs(t_best - entry["binomial_t"]) <= t_tol))
        rows.append(_row("table8", name, "binomial 2 max P(d)", entry["binomial_p"], round(p, 6), tol, _close(p, entry["binomial_p"], tol)))
    return rows


TABLES: Dict[str, Callable[[Dict[str, Any], int, bool], List[Dict[str, Any]]]] = {
    "table1": table1,
    "table4": table4,
    "table5": table5,
    "table7": table7,
    "table8": table8,
}


def run_table(
    name: str, seed: int = 0, include_slow: bool = True, expectations: Optional[Dict[str, Any]] = None
) -> pd.DataFrame:
    if name not in TABLES:
        raise ValueError(f"unknown table {name!r}; expected one of {', '.join(TABLES)}")
    expectations = expectations or load_expectations()
    logger.info(f"Reproducing {name}: {expectations[name]['description']}")
    rows = TABLES[name](expectations[name], seed, include_slow)
    return pd.DataFrame(rows, columns=COLUMNS)


def passed(frame: pd.DataFrame) -> bool:
    """Only hard checks gate the result"""
    return not (frame["status"] == FAIL).any()
