"""Infection spread, triage priority, and the care-seeking predicate."""

from __future__ import annotations

from dataclasses import dataclass

from .agents import PatientState
from .rng import RngStream

INFECTION_SEVERITY = 0.2
NEEDS_DOCTOR_THRESHOLD = 0.6

# A patient is only eligible for a new infection above this health level,
# which keeps everyone alive; the hit itself is still floored at zero.
INFECTION_ELIGIBLE_ABOVE = 0.1


@dataclass
class InfectionCounter:
    """Run-global infection sequence; orders are never reused."""

    next_order: int = 0

    def take(self) -> int:
        order = self.next_order
        self.next_order += 1
        return order


def infect(patient: PatientState, order: int, severity: float = INFECTION_SEVERITY) -> bool:
    """Apply one infection if the patient is eligible; returns whether it landed."""
    if patient.is_infected or patient.health_level <= INFECTION_ELIGIBLE_ABOVE:
        return False
    patient.health_level = max(0.0, patient.health_level - severity)
    patient.is_infected = True
    patient.infected_order = order
    return True


def spread_infection(
    patients: list[PatientState],
    n: int,
    counter: InfectionCounter,
    rng: RngStream,
    severity: float = INFECTION_SEVERITY,
) -> int:
    """Infect up to ``n`` distinct eligible patients, sampled uniformly.

    Orders are assigned consecutively in pick order.  Returns the number
    of infections applied.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    eligible = [
        p for p in patients
        if not p.is_infected and p.health_level > INFECTION_ELIGIBLE_ABOVE
    ]
    chosen = rng.sample(eligible, min(n, len(eligible)))
    for patient in chosen:
        infect(patient, counter.take(), severity)
    return len(chosen)


def priority(patient: PatientState) -> tuple[bool, float, float]:
    """Triage key; populations sort ascending, so infected come first,
    earlier infections before later, lower health before higher."""
    if patient.is_infected:
        return (False, patient.infected_order, patient.health_level)
    return (True, float("inf"), patient.health_level)


def needs_doctor(patient: PatientState, threshold: float = NEEDS_DOCTOR_THRESHOLD) -> bool:
    return patient.health_level < threshold
