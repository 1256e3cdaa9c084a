import argparse
import json
import os
import sys
from typing import List, Literal, Optional

from loguru import logger
from pydantic import BaseModel, Field
from tabulate import tabulate

from ..config import settings
from ..exceptions import ContextualityError
from ..geometry.bounds import contextuality_bounds
from ..geometry.builders import build_symplectic
from ..geometry.io import dump_geometry, load_geometry
from ..geometry.models import Geometry
from ..geometry.named import NAMED_GEOMETRIES, build_named
from ..geometry.validation import validate
from ..gates.circuits import oracle_gate_count
from ..gates.grover import run_grover
from ..log import configure_logging
from ..oracle.brute_force import binomial_distribution, degree_of
from ..oracle.cache import load_or_compute
from ..oracle.export import distribution_csv
from ..oracle.models import DistributionSource
from ..quasi.betas import optimize_betas
from ..quasi.bisection import find_degree_bisection
from ..quasi.class_state import evolve, evolve_fixed
from ..quasi.export import read_schedule, schedule_csv, trajectory_csv
from . import repro

Command = Literal[
    "geometry", "degree", "dist", "bounds", "grover", "quasi", "optimize-betas", "find-degree", "repro"
]


class RunConfig(BaseModel):
    command: Command
    geometry: Optional[str] = None
    seed: int = Field(0, ge=0)
    shots: int = Field(2048, ge=1)
    output: Optional[str] = None
    format: Literal["csv", "json", "text"] = "csv"


def resolve_geometry(source: str) -> Geometry:
    """A named geometry, `symplectic-N`, or a path to a geometry document"""
    if os.path.exists(source):
        return load_geometry(source)
    key = source.replace("_", "-").lower()
    if key.startswith("symplectic-"):
        return build_symplectic(int(key.split("-", 1)[1]))
    return build_named(source)


def emit(text: str, config: RunConfig) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if config.output:
        with open(config.output, "w") as f:
            f.write(text)
        logger.info(f"Wrote {config.output}")
    else:
        sys.stdout.write(text)


def geometry_info(g: Geometry) -> dict:
    per_point = g.uniform_lines_per_point
    info = {
        "name": g.name,
        "points": g.num_points,
        "lines": g.num_lines,
        "negative_lines": g.negative_lines,
        "lines_per_point": per_point if per_point is not None else "non-uniform",
        "labelled": g.is_labelled,
        "odd_lines": g.odd_lines,
    }
    return info


def cmd_geometry(args: argparse.Namespace, config: RunConfig) -> int:
    if args.action == "build":
        if args.symplectic is not None:
            g = build_symplectic(args.symplectic)
        else:
            g = resolve_geometry(args.geometry or args.file)
        emit(dump_geometry(g), config)
        return 0

    g = resolve_geometry(args.file or args.geometry)
    if args.action == "info":
        info = geometry_info(g)
        if g.num_lines and g.num_lines <= 15:
            info.update({f"oracle_{k}": v for k, v in oracle_gate_count(g).items()})
        if config.format == "json":
            emit(json.dumps(info, indent=2), config)
        else:
            emit(tabulate(info.items(), headers=["property", "value"]), config)
        return 0

    violations = validate(g)
    if violations:
        emit("\n".join(violations), config)
        logger.error(f"{g.name}: {len(violations)} violation(s)")
        return 1
    emit(f"{g.name}: valid", config)
    return 0


def cmd_degree(args: argparse.Namespace, config: RunConfig) -> int:
    g = resolve_geometry(config.geometry)
    result = degree_of(g, load_or_compute(g))
    emit(f"d={result.degree}\ncount={result.count}\nwitness={result.witness.as_string()}", config)
    return 0


def cmd_dist(args: argparse.Namespace, config: RunConfig) -> int:
    g = resolve_geometry(config.geometry)
    dist = binomial_distribution(g) if args.binomial else load_or_compute(g)
    if config.format == "json":
        document = {
            "geometry": dist.geometry,
            "n": dist.n,
            "source": dist.source.value,
            "counts": {str(ell): str(c) if args.binomial else c for ell, c in dist.counts.items()},
            "witnesses": {str(ell): v for ell, v in dist.witnesses.items()},
        }
        emit(json.dumps(document, indent=2), config)
    else:
        emit(distribution_csv(dist), config)
    return 0


def cmd_bounds(args: argparse.Namespace, config: RunConfig) -> int:
    g = resolve_geometry(config.geometry)
    d = args.d if args.d is not None else load_or_compute(g).degree
    bounds = contextuality_bounds(g, d, args.players)
    emit(bounds.model_dump_json(indent=2), config)
    return 0


def cmd_grover(args: argparse.Namespace, config: RunConfig) -> int:
    g = resolve_geometry(config.geometry)
    hint = load_or_compute(g) if args.exact_hint else None
    report = run_grover(
        g,
        y0=args.y0,
        shots=config.shots,
        seed=config.seed,
        t_g=args.tg,
        control=args.control,
        dist_hint=hint,
        rounds=args.rounds,
    )
    if config.format == "csv":
        histogram = report.per_round[-1].histogram_by_ell
        emit("ell,count\n" + "\n".join(f"{ell},{c}" for ell, c in histogram.items()), config)
    else:
        emit(report.model_dump_json(indent=2), config)
    return 0


def cmd_quasi(args: argparse.Namespace, config: RunConfig) -> int:
    g = resolve_geometry(config.geometry)
    dist = load_or_compute(g)
    if args.betas:
        trajectory = evolve(dist, read_schedule(args.betas), target=args.target)
    else:
        trajectory = evolve_fixed(dist, args.tmax, target=args.target)
    logger.info(
        f"{g.name}: t_opt={trajectory.t_opt} P={trajectory.probability(trajectory.t_opt):.6f}"
    )
    emit(trajectory_csv(trajectory), config)
    return 0


def cmd_optimize_betas(args: argparse.Namespace, config: RunConfig) -> int:
    g = resolve_geometry(config.geometry)
    dist = binomial_distribution(g) if args.model == "binomial" else load_or_compute(g)
    target = args.target if args.target is not None else load_or_compute(g).degree
    schedule = optimize_betas(dist, target, t_max=args.tmax)
    if config.format == "json":
        emit(schedule.model_dump_json(indent=2), config)
    else:
        emit(schedule_csv(schedule.multipliers), config)
    return 0


def cmd_find_degree(args: argparse.Namespace, config: RunConfig) -> int:
    g = resolve_geometry(config.geometry)
    result = find_degree_bisection(
        g, dist_model=DistributionSource(args.model), seed=config.seed, shots=config.shots
    )
    if config.format == "json":
        emit(result.model_dump_json(indent=2), config)
    else:
        emit("\n".join(result.audit_lines() + [f"d={result.estimate}"]), config)
    return 0


def cmd_repro(args: argparse.Namespace, config: RunConfig) -> int:
    frame = repro.run_table(args.table, seed=config.seed, include_slow=not args.skip_slow)
    ok = repro.passed(frame)
    emit(frame.to_csv(index=False, lineterminator="\n") + ("# PASS" if ok else "# FAIL"), config)
    logger.info("\n" + tabulate(frame.values.tolist(), headers=list(frame.columns)))
    return 0 if ok else 1


COMMANDS = {
    "geometry": cmd_geometry,
    "degree": cmd_degree,
    "dist": cmd_dist,
    "bounds": cmd_bounds,
    "grover": cmd_grover,
    "quasi": cmd_quasi,
    "optimize-betas": cmd_optimize_betas,
    "find-degree": cmd_find_degree,
    "repro": cmd_repro,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--geometry", "-g", help=f"one of {', '.join(NAMED_GEOMETRIES)}, symplectic-N, or a file")
    common.add_argument("--seed", type=int, default=settings.default_seed)
    common.add_argument("--shots", type=int, default=settings.default_shots)
    common.add_argument("--output", "-o", help="write the artifact here instead of stdout")
    common.add_argument("--format", choices=["csv", "json", "text"], default="csv")
    common.add_argument("--workers", type=int, help="brute-force worker processes")
    common.add_argument("--log-level", default=settings.log_level)

    parser = argparse.ArgumentParser(
        prog="ctxdegree", description="Degree of contextuality of Pauli geometries"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("geometry", parents=[common], help="build, inspect or validate a geometry")
    p.add_argument("action", choices=["build", "info", "validate"])
    p.add_argument("--file", "-f", help="geometry document")
    p.add_argument("--symplectic", type=int, metavar="N", help="build W(2N-1,2)")

    sub.add_parser("degree", parents=[common], help="exact degree and a witness assignment")

    p = sub.add_parser("dist", parents=[common], help="invalid-line distribution |j_l|")
    p.add_argument("--binomial", action="store_true")

    p = sub.add_parser("bounds", parents=[common], help="classical bounds for a degree")
    p.add_argument("--d", type=int, help="degree (computed when omitted)")
    p.add_argument("--players", type=int, default=2)

    p = sub.add_parser("grover", parents=[common], help="gate-level adaptive Grover search")
    p.add_argument("--y0", type=int)
    p.add_argument("--tg", type=int, help="fixed Grover iterations per round")
    p.add_argument("--control", action="store_true", help="no iterations (uniform sampling)")
    p.add_argument("--rounds", type=int)
    p.add_argument("--exact-hint", action="store_true", help="plan m/n from the exact distribution")

    p = sub.add_parser("quasi", parents=[common], help="quasi-Grover class evolution")
    p.add_argument("--tmax", type=int, default=20)
    p.add_argument("--betas", help="schedule CSV (t,b_t)")
    p.add_argument("--target", type=int)

    p = sub.add_parser("optimize-betas", parents=[common], help="greedy beta multipliers")
    p.add_argument("--target", type=int)
    p.add_argument("--model", choices=["exact", "binomial"], default="exact")
    p.add_argument("--tmax", type=int)

    p = sub.add_parser("find-degree", parents=[common], help="bisection search for d")
    p.add_argument("--model", choices=["exact", "binomial"], default="exact")

    p = sub.add_parser("repro", parents=[common], help="regenerate a reference table")
    p.add_argument("table", choices=list(repro.TABLES))
    p.add_argument("--skip-slow", action="store_true")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level, json=settings.log_json)
    if args.workers:
        settings.workers = args.workers

    needs_geometry = args.command not in ("geometry", "repro")
    if needs_geometry and not args.geometry:
        parser.error(f"{args.command} requires --geometry")
    try:
        config = RunConfig(
            command=args.command,
            geometry=args.geometry,
            seed=args.seed,
            shots=args.shots,
            output=args.output,
            format=args.format,
        )
    except ValueError as e:
        parser.error(str(e))

    if args.command == "geometry" and not (args.geometry or args.file or args.symplectic):
        parser.error("geometry requires --geometry, --file or --symplectic")

    try:
        return COMMANDS[args.command](args, config)
    except (ContextualityError, ValueError) as e:
        logger.error(str(e))
        return 1


def start() -> None:
    sys.exit(main())


if __name__ == "__main__":
    start()
