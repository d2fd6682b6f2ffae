"""Command-line entry point.

Runs a repeat batch for one model variant, writes the aggregated metrics
CSV plus (css) network snapshot JSON files into the output directory,
and prints a one-line summary.  Exit codes: 0 success, 1 runtime error,
2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .config import PRESETS, ConfigError, ModelKind, SimulationConfig
from .engine import run_batch
from .reporting import export_metrics_csv, export_network_snapshot

EXIT_OK = 0
EXIT_RUNTIME = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="caresim",
        description="Co-evolutionary doctor-patient care simulation.",
    )
    parser.add_argument("--model", choices=[m.value for m in ModelKind], default="classical")
    parser.add_argument("--preset", choices=sorted(PRESETS))
    parser.add_argument("--doctors", type=int)
    parser.add_argument("--patients", type=int)
    parser.add_argument("--rounds", type=int)
    parser.add_argument("--repeats", type=int)
    parser.add_argument("--infected", type=int)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", default="out")
    parser.add_argument("--snapshot-every", type=int, default=0)
    parser.add_argument("--tournaments-per-round", type=int)
    parser.add_argument("--elites", type=int)
    parser.add_argument("--mutation-chance", type=float)
    parser.add_argument("--crossover-chance", type=float)
    return parser


def config_from_args(args: argparse.Namespace) -> SimulationConfig:
    model = ModelKind(args.model)
    if args.preset:
        config = PRESETS[args.preset](model)
    else:
        required = {"doctors": args.doctors, "patients": args.patients, "rounds": args.rounds,
                    "infected": args.infected}
        missing = [name for name, value in required.items() if value is None]
        if missing:
            raise ConfigError(
                "without --preset you must pass " + ", ".join(f"--{m}" for m in missing)
            )
        config = SimulationConfig(
            model=model,
            num_doctors=args.doctors,
            num_patients=args.patients,
            num_rounds=args.rounds,
            num_infected_per_round=args.infected,
        )
    if args.doctors is not None:
        config.num_doctors = args.doctors
    if args.patients is not None:
        config.num_patients = args.patients
    if args.rounds is not None:
        config.num_rounds = args.rounds
    if args.repeats is not None:
        config.num_repeats = args.repeats
    if args.infected is not None:
        config.num_infected_per_round = args.infected
    if args.tournaments_per_round is not None:
        config.tournaments_per_round = args.tournaments_per_round
    if args.elites is not None:
        config.num_elites = args.elites
    if args.mutation_chance is not None:
        config.mutation_chance = args.mutation_chance
    if args.crossover_chance is not None:
        config.crossover_chance = args.crossover_chance
    config.base_seed = args.seed
    config.snapshot_every = args.snapshot_every
    config.validate()
    return config


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE

    try:
        config = config_from_args(args)
    except ConfigError as exc:
        print(f"caresim: invalid configuration: {exc}", file=sys.stderr)
        return EXIT_USAGE

    try:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        batch = run_batch(config)
        export_metrics_csv(batch.aggregates, out_dir / "metrics.csv")
        for run in batch.runs:
            for snapshot in run.snapshots:
                name = f"network_run{run.run_id:03d}_round{snapshot.round_index:04d}.json"
                export_network_snapshot(snapshot, out_dir / name)
        final = batch.aggregates[-1] if batch.aggregates else None
        if final is not None:
            print(
                f"{config.model.value}: {config.num_repeats} run(s) x "
                f"{config.num_rounds} rounds -> doctor fitness "
                f"{final.mean['doctor_fitness']:.3f}, patient fitness "
                f"{final.mean['patient_fitness']:.3f} (metrics: {out_dir / 'metrics.csv'})"
            )
        else:
            print(f"{config.model.value}: 0 rounds, header-only metrics written")
        return EXIT_OK
    except OSError as exc:
        print(f"caresim: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
