"""Microbial genetic algorithm with tournaments, elitism, and
model-specific mutation and crossover.

Steady-state style: each event samples a tournament, the fittest member
wins, the least fit loses, and only the loser is (maybe) crossed toward
the winner and (maybe) mutated.  The top individuals are snapshotted
before the events and restored verbatim afterwards, so elites survive a
generation step bit-for-bit even if a tournament picked them as losers.

Draw order per event: tournament sample (k draws), crossover-chance
uniform, then mutation-chance uniform.  The chance uniforms are drawn
unconditionally so a run's draw sequence does not depend on the chance
values themselves.
"""

from __future__ import annotations

import copy
from dataclasses import dataclass
from typing import Callable

from .agents import DoctorState, PatientState
from .config import ModelKind
from .ratings import RatingLedger
from .rng import RngStream

MUTATION_AMOUNT_MAX = 0.05
TIE_MUTATION_RANGE = 0.1
LOW_FEEDBACK_CUTOFF = 3.0
CROSSOVER_INNER_CHANCE = 0.5


@dataclass
class GaParams:
    tournament_size: int = 5
    num_elites: int = 1
    mutation_chance: float = 0.5
    crossover_chance: float = 0.3
    tournaments_per_round: int = 1


def fitness_doctor(doctor: DoctorState, ledger: RatingLedger) -> float:
    """Mean of the doctor's current ratings; zero while unrated."""
    return ledger.mean_rating(doctor.doctor_id)


def fitness_patient(patient: PatientState) -> float:
    """Mean of the recorded health history; current health while empty."""
    if not patient.health_history:
        return patient.health_level
    return sum(patient.health_history) / len(patient.health_history)


def tournament_select(population: list, k: int, fitness: Callable, rng: RngStream):
    """Sample ``k`` distinct individuals; return (winner, loser).

    The winner has the highest fitness and the loser the lowest, with
    ties resolved by sorting on ascending agent id.
    """
    if k > len(population):
        raise ValueError("tournament size exceeds population")
    entrants = rng.sample(population, k)
    entrants.sort(key=lambda agent: (-fitness(agent), agent.agent_id))
    return entrants[0], entrants[-1]


def mutate_doctor_classical(doctor: DoctorState, ledger: RatingLedger, rng: RngStream) -> None:
    """Feedback-driven nudge of research ability or empathy.

    Poor recent feedback (< 3) triples the mutation strength; the applied
    amount can never exceed the remaining personal resource, which pays
    for the change even when the trait clamp absorbs part of it.
    """
    factor = 3.0 if ledger.recent_feedback(doctor.doctor_id) < LOW_FEEDBACK_CUTOFF else 0.5
    amount = min(doctor.personal_resource, rng.uniform(0.0, MUTATION_AMOUNT_MAX)) * factor
    amount = min(amount, doctor.personal_resource)
    trait_pick = rng.random()
    change = amount * rng.sign()
    if trait_pick < 0.7:
        doctor.research_ability = max(0.0, min(1.0, doctor.research_ability + change))
    else:
        doctor.empathy = max(0.0, min(1.0, doctor.empathy + change))
    doctor.personal_resource = max(0.0, doctor.personal_resource - amount)


def mutate_doctor_css(doctor: DoctorState, ledger: RatingLedger, rng: RngStream) -> None:
    """Five-way trait mutation over research, empathy, confidence weights,
    and a single random social tie.

    The resource-funded buckets (research, empathy) are skipped entirely
    when personal resource is exhausted, in which case the trait draw
    falls through to the first confidence-weight bucket; a change that
    would leave [0, 1] is rejected, and the applied magnitude is capped
    by the remaining resource.
    """
    factor = 1.5 if ledger.recent_feedback(doctor.doctor_id) < LOW_FEEDBACK_CUTOFF else 0.5
    amount = rng.uniform(0.0, MUTATION_AMOUNT_MAX) * factor
    trait_pick = rng.random()
    if trait_pick < 0.2 and doctor.personal_resource > 0.0:
        change = amount * rng.sign()
        if 0.0 <= doctor.research_ability + change <= 1.0:
            actual = min(abs(change), doctor.personal_resource)
            doctor.research_ability += actual if change > 0 else -actual
            doctor.personal_resource -= actual
    elif trait_pick < 0.4 and doctor.personal_resource > 0.0:
        change = amount * rng.sign()
        if 0.0 <= doctor.empathy + change <= 1.0:
            actual = min(abs(change), doctor.personal_resource)
            doctor.empathy += actual if change > 0 else -actual
            doctor.personal_resource -= actual
    elif trait_pick < 0.6:
        change = amount * rng.sign()
        doctor.weight_wmrat = max(0.0, min(1.0, doctor.weight_wmrat + change))
    elif trait_pick < 0.8:
        change = amount * rng.sign()
        doctor.weight_mwres = max(0.0, min(1.0, doctor.weight_mwres + change))
    else:
        if rng.random() < 0.5 and doctor.social_ties_doctors:
            key = rng.choice(list(doctor.social_ties_doctors.keys()))
            change = amount * rng.sign()
            doctor.social_ties_doctors[key] = max(
                0.0, min(1.0, doctor.social_ties_doctors[key] + change)
            )
        elif doctor.social_ties_patients:
            key = rng.choice(list(doctor.social_ties_patients.keys()))
            change = amount * rng.sign()
            doctor.social_ties_patients[key] = max(
                0.0, min(1.0, doctor.social_ties_patients[key] + change)
            )
    doctor.personal_resource = max(0.0, doctor.personal_resource)


def _renormalize_weights(patient: PatientState) -> None:
    # Clamp before normalizing so the renormalized weights both sum to 1
    # and stay inside [0, 1] even when a delta pushed one weight negative.
    cred = max(0.0, min(1.0, patient.cred_weight))
    mean = max(0.0, min(1.0, patient.mean_rating_weight))
    past = max(0.0, min(1.0, patient.past_rating_weight))
    total = cred + mean + past
    if total > 0.0:
        patient.cred_weight = cred / total
        patient.mean_rating_weight = mean / total
        patient.past_rating_weight = past / total
    else:
        patient.cred_weight = 1 / 3
        patient.mean_rating_weight = 1 / 3
        patient.past_rating_weight = 1 / 3


def mutate_patient(
    patient: PatientState,
    model: ModelKind,
    rng: RngStream,
    single_tie_variant: bool = False,
) -> None:
    """Shift the judgment weights along a sum-preserving direction, jitter
    resilience, and (css only) perturb social ties.

    The default tie mutation picks one class (doctors or patients, 50/50)
    and perturbs every tie in it independently; the single-tie variant
    instead touches one random connection with 50% chance.
    """
    delta = rng.uniform(-MUTATION_AMOUNT_MAX, MUTATION_AMOUNT_MAX)
    patient.cred_weight += delta
    patient.mean_rating_weight += delta
    patient.past_rating_weight -= 2.0 * delta
    resilience_change = rng.uniform(-MUTATION_AMOUNT_MAX, MUTATION_AMOUNT_MAX)
    patient.resilience = max(0.1, min(0.4, patient.resilience + resilience_change))
    _renormalize_weights(patient)
    if model is not ModelKind.CSS:
        return
    if single_tie_variant:
        if rng.random() < 0.5:
            if rng.random() < 0.5 and patient.social_ties_doctors:
                key = rng.choice(list(patient.social_ties_doctors.keys()))
                patient.social_ties_doctors[key] = max(
                    0.0,
                    min(1.0, patient.social_ties_doctors[key] + rng.uniform(-TIE_MUTATION_RANGE, TIE_MUTATION_RANGE)),
                )
            elif patient.social_ties_patients:
                key = rng.choice(list(patient.social_ties_patients.keys()))
                patient.social_ties_patients[key] = max(
                    0.0,
                    min(1.0, patient.social_ties_patients[key] + rng.uniform(-TIE_MUTATION_RANGE, TIE_MUTATION_RANGE)),
                )
        return
    if rng.random() < 0.5:
        ties = patient.social_ties_doctors
    else:
        ties = patient.social_ties_patients
    for key in ties:
        ties[key] = max(0.0, min(1.0, ties[key] + rng.uniform(-TIE_MUTATION_RANGE, TIE_MUTATION_RANGE)))


def _average_shared_ties(loser_ties: dict[int, float], winner_ties: dict[int, float]) -> None:
    for key in loser_ties:
        if key in winner_ties:
            loser_ties[key] = (loser_ties[key] + winner_ties[key]) / 2.0


def crossover_doctor(
    loser: DoctorState,
    winner: DoctorState,
    rng: RngStream,
    model: ModelKind,
) -> None:
    """With inner 50% chance, pull the loser's traits to the parents' means.

    Only the loser changes.  Tie keys the winner lacks stay untouched.
    """
    if not rng.chance(CROSSOVER_INNER_CHANCE):
        return
    loser.research_ability = (loser.research_ability + winner.research_ability) / 2.0
    loser.empathy = (loser.empathy + winner.empathy) / 2.0
    if model is ModelKind.CSS:
        loser.weight_wmrat = (loser.weight_wmrat + winner.weight_wmrat) / 2.0
        loser.weight_mwres = (loser.weight_mwres + winner.weight_mwres) / 2.0
        _average_shared_ties(loser.social_ties_doctors, winner.social_ties_doctors)
        _average_shared_ties(loser.social_ties_patients, winner.social_ties_patients)


def crossover_patient(
    loser: PatientState,
    winner: PatientState,
    rng: RngStream,
    model: ModelKind,
) -> None:
    """With inner 50% chance, average resilience, judgment weights, and
    (css only) shared tie keys into the loser."""
    if not rng.chance(CROSSOVER_INNER_CHANCE):
        return
    loser.resilience = (loser.resilience + winner.resilience) / 2.0
    loser.cred_weight = (loser.cred_weight + winner.cred_weight) / 2.0
    loser.mean_rating_weight = (loser.mean_rating_weight + winner.mean_rating_weight) / 2.0
    loser.past_rating_weight = (loser.past_rating_weight + winner.past_rating_weight) / 2.0
    _renormalize_weights(loser)
    if model is ModelKind.CSS:
        _average_shared_ties(loser.social_ties_doctors, winner.social_ties_doctors)
        _average_shared_ties(loser.social_ties_patients, winner.social_ties_patients)


def evolve_population(
    population: list,
    params: GaParams,
    fitness: Callable,
    mutate: Callable,
    crossover: Callable,
    rng: RngStream,
) -> None:
    """Run one generation step of tournament events over the population.

    ``crossover(loser, winner)`` and ``mutate(loser)`` are invoked behind
    their configured chances; the pre-step top ``num_elites`` individuals
    (fitness ties by ascending id) are restored verbatim at the end.
    """
    ranked = sorted(
        range(len(population)),
        key=lambda i: (-fitness(population[i]), population[i].agent_id),
    )
    snapshots = [(i, copy.deepcopy(population[i])) for i in ranked[: params.num_elites]]
    for _ in range(params.tournaments_per_round):
        winner, loser = tournament_select(population, params.tournament_size, fitness, rng)
        if rng.chance(params.crossover_chance):
            crossover(loser, winner)
        if rng.chance(params.mutation_chance):
            mutate(loser)
    for slot, snapshot in snapshots:
        population[slot] = snapshot
