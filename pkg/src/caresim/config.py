"""Run configuration: model variant, population sizes, and GA knobs.

Two presets mirror the reference experiment setups: ``paper-full``
(100 doctors, 1000 patients, 100 rounds, 200 infections per round,
50 repeats) and ``paper-single`` (15 doctors, 100 patients, 20 rounds,
one infection attempt per patient per round, single run).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum


class ModelKind(str, Enum):
    CLASSICAL = "classical"
    CSS = "css"


class ConfigError(ValueError):
    """Raised when a configuration fails validation."""


# GA chances differ between the variants: the classical model relies on
# frequent mutation, the cognitive-social-system model on crossover.
DEFAULT_MUTATION_CHANCE = {ModelKind.CLASSICAL: 0.5, ModelKind.CSS: 0.01}
DEFAULT_CROSSOVER_CHANCE = {ModelKind.CLASSICAL: 0.3, ModelKind.CSS: 0.5}


@dataclass
class SimulationConfig:
    model: ModelKind
    num_doctors: int
    num_patients: int
    num_rounds: int
    num_infected_per_round: int
    num_repeats: int = 1
    infection_severity: float = 0.2
    needs_doctor_threshold: float = 0.6
    rating_perfect_threshold: float = 0.8
    effectiveness_cap: float = 0.7
    mutation_chance: float | None = None
    crossover_chance: float | None = None
    tournament_size: int = 5
    num_elites: int = 1
    tournaments_per_round: int | None = None
    base_seed: int = 0
    snapshot_every: int = 0
    # Alternative patient tie mutation: perturb a single random connection
    # (50% chance) instead of every tie of one class.  Off by default.
    patient_single_tie_mutation: bool = False

    def __post_init__(self):
        self.model = ModelKind(self.model)
        if self.mutation_chance is None:
            self.mutation_chance = DEFAULT_MUTATION_CHANCE[self.model]
        if self.crossover_chance is None:
            self.crossover_chance = DEFAULT_CROSSOVER_CHANCE[self.model]

    def tournaments_for(self, population_size: int) -> int:
        """Tournament events per round for one population (default: size/10 rounded up)."""
        if self.tournaments_per_round is not None:
            return self.tournaments_per_round
        return math.ceil(population_size / 10)

    def validate(self) -> None:
        counts = {
            "num_doctors": self.num_doctors,
            "num_patients": self.num_patients,
            "num_rounds": self.num_rounds,
            "num_infected_per_round": self.num_infected_per_round,
            "num_repeats": self.num_repeats,
        }
        for name, value in counts.items():
            if not isinstance(value, int):
                raise ConfigError(f"{name} must be an integer, got {value!r}")
        if self.num_doctors <= 0 or self.num_patients <= 0:
            raise ConfigError("population sizes must be positive")
        if self.num_rounds < 0:
            raise ConfigError("num_rounds must be non-negative")
        if self.num_repeats < 1:
            raise ConfigError("num_repeats must be at least 1")
        if self.num_infected_per_round < 0:
            raise ConfigError("num_infected_per_round must be non-negative")
        if self.num_infected_per_round > self.num_patients:
            raise ConfigError("num_infected_per_round cannot exceed num_patients")
        if not 0.0 <= self.mutation_chance <= 1.0:
            raise ConfigError("mutation_chance must lie in [0, 1]")
        if not 0.0 <= self.crossover_chance <= 1.0:
            raise ConfigError("crossover_chance must lie in [0, 1]")
        smallest = min(self.num_doctors, self.num_patients)
        if self.tournament_size < 1 or self.tournament_size > smallest:
            raise ConfigError("tournament_size must fit inside both populations")
        if self.num_elites < 0 or self.num_elites >= smallest:
            raise ConfigError("num_elites must be smaller than both populations")
        if self.tournaments_per_round is not None and self.tournaments_per_round < 1:
            raise ConfigError("tournaments_per_round must be positive when given")
        if self.snapshot_every < 0:
            raise ConfigError("snapshot_every must be non-negative")
        if self.snapshot_every > 0 and self.model is not ModelKind.CSS:
            raise ConfigError("network snapshots are only defined for the css model")
        if self.base_seed < 0:
            raise ConfigError("base_seed must be a non-negative 64-bit integer")


def preset_full_scale(model: ModelKind | str, **overrides) -> SimulationConfig:
    """The ``paper-full`` setup: 100 doctors, 1000 patients, 100 rounds."""
    cfg = SimulationConfig(
        model=ModelKind(model),
        num_doctors=100,
        num_patients=1000,
        num_rounds=100,
        num_infected_per_round=200,
        num_repeats=50,
    )
    return replace(cfg, **overrides) if overrides else cfg


def preset_single_run(model: ModelKind | str, **overrides) -> SimulationConfig:
    """The ``paper-single`` setup: 15 doctors, 100 patients, 20 rounds."""
    cfg = SimulationConfig(
        model=ModelKind(model),
        num_doctors=15,
        num_patients=100,
        num_rounds=20,
        num_infected_per_round=100,
        num_repeats=1,
    )
    return replace(cfg, **overrides) if overrides else cfg


PRESETS = {
    "paper-full": preset_full_scale,
    "paper-single": preset_single_run,
}
