"""Round loop, run driver, repeat batches, and metrics aggregation.

One round (mini-generation) executes, in order:

1. css only: recompute every doctor's respect map, then every doctor's
   confidence (two passes over ascending doctor ids).
2. Spread the configured number of infections among eligible patients.
3. Reset all busy flags.
4. Sort patients by triage priority (ties by ascending patient id) and
   let each patient below the care threshold pick a free doctor and be
   treated; seekers who find nobody free are counted as untreated.
5. Evolve the patient population, then the doctor population.
6. Compute the round's population metrics.

Health history records post-treatment levels only (the treatment step
appends them), so patient fitness reads as the mean quality of received
care, with the patient's current health standing in until first treated.

A run is strictly sequential and owns a single RNG stream seeded from
``derive_run_seed(base_seed, repeat_index)``; repeats are independent,
and batch aggregation reduces them in repeat-index order so it is
insensitive to any execution ordering.
"""

from __future__ import annotations

import statistics
from dataclasses import dataclass, field

from . import classical, cognitive
from .agents import DoctorState, PatientState, init_doctor, init_patient
from .config import ModelKind, SimulationConfig
from .evolution import (
    GaParams,
    crossover_doctor,
    crossover_patient,
    evolve_population,
    fitness_doctor,
    fitness_patient,
    mutate_doctor_classical,
    mutate_doctor_css,
    mutate_patient,
)
from .infection import InfectionCounter, needs_doctor, priority, spread_infection
from .ratings import RatingLedger
from .rng import RngStream, derive_run_seed

# Ordered numeric fields exported per round: ten trait/fitness means and
# three event counts.
METRIC_FIELDS = (
    "doctor_fitness",
    "patient_fitness",
    "research_ability",
    "empathy",
    "weight_wmrat",
    "weight_mwres",
    "cred_weight",
    "mean_rating_weight",
    "past_rating_weight",
    "resilience",
    "infections_applied",
    "treatments_performed",
    "untreated_seekers",
)


@dataclass
class RoundMetrics:
    run_id: int
    round_index: int
    model: ModelKind
    doctor_fitness: float
    patient_fitness: float
    research_ability: float
    empathy: float
    weight_wmrat: float
    weight_mwres: float
    cred_weight: float
    mean_rating_weight: float
    past_rating_weight: float
    resilience: float
    infections_applied: int
    treatments_performed: int
    untreated_seekers: int


@dataclass
class NetworkSnapshot:
    """Directed tie-strength graph over all agents at the end of a round.

    Node ids are namespaced strings (``d<i>`` for doctors, ``p<i>`` for
    patients); strengths are stored already rounded to six decimals so a
    snapshot round-trips its serialized form exactly.
    """

    round_index: int
    nodes: list[tuple[str, str]]
    edges: list[tuple[str, str, float]]


@dataclass
class RunState:
    config: SimulationConfig
    run_id: int
    rng: RngStream
    doctors: list[DoctorState]
    patients: list[PatientState]
    ledger: RatingLedger
    counter: InfectionCounter


@dataclass
class RunResult:
    run_id: int
    metrics: list[RoundMetrics]
    doctors: list[DoctorState]
    patients: list[PatientState]
    snapshots: list[NetworkSnapshot] = field(default_factory=list)


@dataclass
class RoundAggregate:
    """Across-repeat mean and population standard deviation, per round."""

    round_index: int
    model: ModelKind
    mean: dict[str, float]
    std: dict[str, float]


def _mean(values) -> float:
    values = list(values)
    return sum(values) / len(values)


def init_run_state(config: SimulationConfig, run_seed: int, run_id: int = 0) -> RunState:
    config.validate()
    rng = RngStream(run_seed)
    doctor_ids = list(range(config.num_doctors))
    patient_ids = list(range(config.num_patients))
    doctors = [
        init_doctor(i, rng, config.model, doctor_ids[:i] + doctor_ids[i + 1 :], patient_ids)
        for i in doctor_ids
    ]
    patients = [
        init_patient(i, rng, config.model, doctor_ids, patient_ids[:i] + patient_ids[i + 1 :])
        for i in patient_ids
    ]
    return RunState(
        config=config,
        run_id=run_id,
        rng=rng,
        doctors=doctors,
        patients=patients,
        ledger=RatingLedger(),
        counter=InfectionCounter(),
    )


def refresh_social_perception(doctors: list[DoctorState], ledger: RatingLedger) -> None:
    """Pre-round css sweep: all respect maps first, then all confidences,
    so every confidence sees the same committed respect values."""
    for doctor in doctors:
        cognitive.update_respect_for_colleagues(doctor, doctors, ledger)
    for doctor in doctors:
        cognitive.update_confidence(doctor, ledger, doctors)


def run_round(state: RunState, round_index: int) -> RoundMetrics:
    cfg = state.config
    css = cfg.model is ModelKind.CSS
    if css:
        refresh_social_perception(state.doctors, state.ledger)

    infections = spread_infection(
        state.patients,
        cfg.num_infected_per_round,
        state.counter,
        state.rng,
        cfg.infection_severity,
    )

    for doctor in state.doctors:
        doctor.is_busy = False

    doctors_by_id = {d.doctor_id: d for d in state.doctors}
    ordered = sorted(state.patients, key=lambda p: (*priority(p), p.patient_id))
    treatments = 0
    untreated = 0
    judge = cognitive.judge_doctor_css if css else classical.judge_doctor
    for patient in ordered:
        if not needs_doctor(patient, cfg.needs_doctor_threshold):
            continue
        chosen = classical.choose_doctor(
            patient, state.doctors, state.ledger, judge, cfg.needs_doctor_threshold
        )
        if chosen is None:
            untreated += 1
            continue
        doctor = doctors_by_id[chosen]
        if css:
            cognitive.receive_treatment_css(
                patient, doctor, state.doctors, state.ledger,
                cfg.effectiveness_cap, cfg.rating_perfect_threshold,
            )
        else:
            classical.receive_treatment(
                patient, doctor, state.ledger,
                cfg.effectiveness_cap, cfg.rating_perfect_threshold,
            )
        treatments += 1

    patient_params = GaParams(
        tournament_size=cfg.tournament_size,
        num_elites=cfg.num_elites,
        mutation_chance=cfg.mutation_chance,
        crossover_chance=cfg.crossover_chance,
        tournaments_per_round=cfg.tournaments_for(cfg.num_patients),
    )
    doctor_params = GaParams(
        tournament_size=cfg.tournament_size,
        num_elites=cfg.num_elites,
        mutation_chance=cfg.mutation_chance,
        crossover_chance=cfg.crossover_chance,
        tournaments_per_round=cfg.tournaments_for(cfg.num_doctors),
    )
    mutate_doctor = mutate_doctor_css if css else mutate_doctor_classical
    evolve_population(
        state.patients,
        patient_params,
        fitness_patient,
        lambda p: mutate_patient(p, cfg.model, state.rng, cfg.patient_single_tie_mutation),
        lambda loser, winner: crossover_patient(loser, winner, state.rng, cfg.model),
        state.rng,
    )
    evolve_population(
        state.doctors,
        doctor_params,
        lambda d: fitness_doctor(d, state.ledger),
        lambda d: mutate_doctor(d, state.ledger, state.rng),
        lambda loser, winner: crossover_doctor(loser, winner, state.rng, cfg.model),
        state.rng,
    )

    return RoundMetrics(
        run_id=state.run_id,
        round_index=round_index,
        model=cfg.model,
        doctor_fitness=_mean(fitness_doctor(d, state.ledger) for d in state.doctors),
        patient_fitness=_mean(fitness_patient(p) for p in state.patients),
        research_ability=_mean(d.research_ability for d in state.doctors),
        empathy=_mean(d.empathy for d in state.doctors),
        weight_wmrat=_mean(d.weight_wmrat for d in state.doctors),
        weight_mwres=_mean(d.weight_mwres for d in state.doctors),
        cred_weight=_mean(p.cred_weight for p in state.patients),
        mean_rating_weight=_mean(p.mean_rating_weight for p in state.patients),
        past_rating_weight=_mean(p.past_rating_weight for p in state.patients),
        resilience=_mean(p.resilience for p in state.patients),
        infections_applied=infections,
        treatments_performed=treatments,
        untreated_seekers=untreated,
    )


def capture_snapshot(state: RunState, round_index: int) -> NetworkSnapshot:
    nodes = [(f"d{d.doctor_id}", "doctor") for d in state.doctors]
    nodes += [(f"p{p.patient_id}", "patient") for p in state.patients]
    edges: list[tuple[str, str, float]] = []
    for doctor in state.doctors:
        src = f"d{doctor.doctor_id}"
        for peer in sorted(doctor.social_ties_doctors):
            edges.append((src, f"d{peer}", round(doctor.social_ties_doctors[peer], 6)))
        for pid in sorted(doctor.social_ties_patients):
            edges.append((src, f"p{pid}", round(doctor.social_ties_patients[pid], 6)))
    for patient in state.patients:
        src = f"p{patient.patient_id}"
        for did in sorted(patient.social_ties_doctors):
            edges.append((src, f"d{did}", round(patient.social_ties_doctors[did], 6)))
        for peer in sorted(patient.social_ties_patients):
            edges.append((src, f"p{peer}", round(patient.social_ties_patients[peer], 6)))
    return NetworkSnapshot(round_index=round_index, nodes=nodes, edges=edges)


def run_simulation(config: SimulationConfig, run_seed: int, run_id: int = 0) -> RunResult:
    """Initialize populations from the seed and execute all rounds."""
    state = init_run_state(config, run_seed, run_id)
    metrics: list[RoundMetrics] = []
    snapshots: list[NetworkSnapshot] = []
    for round_index in range(1, config.num_rounds + 1):
        metrics.append(run_round(state, round_index))
        if (
            config.model is ModelKind.CSS
            and config.snapshot_every > 0
            and round_index % config.snapshot_every == 0
        ):
            snapshots.append(capture_snapshot(state, round_index))
    return RunResult(
        run_id=run_id,
        metrics=metrics,
        doctors=state.doctors,
        patients=state.patients,
        snapshots=snapshots,
    )


@dataclass
class BatchResult:
    config: SimulationConfig
    runs: list[RunResult]
    aggregates: list[RoundAggregate]


def aggregate_rounds(per_run_metrics: list[list[RoundMetrics]], model: ModelKind) -> list[RoundAggregate]:
    """Reduce per-run series (ordered by repeat index) into mean/std rows."""
    if not per_run_metrics:
        return []
    num_rounds = len(per_run_metrics[0])
    aggregates = []
    for r in range(num_rounds):
        rows = [series[r] for series in per_run_metrics]
        mean = {}
        std = {}
        for name in METRIC_FIELDS:
            values = [float(getattr(row, name)) for row in rows]
            mean[name] = _mean(values)
            std[name] = statistics.pstdev(values) if len(values) > 1 else 0.0
        aggregates.append(
            RoundAggregate(round_index=rows[0].round_index, model=model, mean=mean, std=std)
        )
    return aggregates


def run_batch(config: SimulationConfig) -> BatchResult:
    """Run ``num_repeats`` independent simulations and aggregate per round."""
    config.validate()
    runs = [
        run_simulation(config, derive_run_seed(config.base_seed, repeat), run_id=repeat)
        for repeat in range(config.num_repeats)
    ]
    runs.sort(key=lambda r: r.run_id)
    aggregates = aggregate_rounds([run.metrics for run in runs], config.model)
    return BatchResult(config=config, runs=runs, aggregates=aggregates)
