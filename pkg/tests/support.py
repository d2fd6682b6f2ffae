"""Shared test helpers: invariant checks, independent oracles, scripted RNG."""

from __future__ import annotations

from caresim import Credential, DoctorState, PatientState, RatingLedger
from caresim.classical import PERFECT_RATING
from caresim.infection import NEEDS_DOCTOR_THRESHOLD

WEIGHT_SUM_TOL = 1e-9


class StubRng:
    """Replays scripted draws per primitive; raises when a queue runs dry."""

    def __init__(self, uniform=(), random=(), sign=(), chance=(), choice_index=(), sample=()):
        self._uniform = list(uniform)
        self._random = list(random)
        self._sign = list(sign)
        self._chance = list(chance)
        self._choice_index = list(choice_index)
        self._sample = list(sample)

    def uniform(self, lo, hi):
        return self._uniform.pop(0)

    def random(self):
        return self._random.pop(0)

    def sign(self):
        return self._sign.pop(0)

    def chance(self, probability):
        return self._chance.pop(0)

    def index(self, n):
        return self._choice_index.pop(0)

    def choice(self, items):
        return items[self._choice_index.pop(0)]

    def sample(self, items, k):
        indices = self._sample.pop(0)
        assert len(indices) == k
        return [items[i] for i in indices]


def make_doctor(doctor_id=0, **overrides) -> DoctorState:
    doctor = DoctorState(
        doctor_id=doctor_id,
        research_ability=0.4,
        empathy=0.5,
        technological_resource_constraint=0.3,
        credential=Credential.MEDIUM,
    )
    for name, value in overrides.items():
        setattr(doctor, name, value)
    return doctor


def make_patient(patient_id=0, **overrides) -> PatientState:
    patient = PatientState(
        patient_id=patient_id,
        health_level=0.5,
        resilience=0.2,
        cred_weight=1 / 3,
        mean_rating_weight=1 / 3,
        past_rating_weight=1 / 3,
    )
    for name, value in overrides.items():
        setattr(patient, name, value)
    return patient


def check_doctor_invariants(doctor: DoctorState) -> None:
    assert 0.0 <= doctor.research_ability <= 1.0
    assert 0.0 <= doctor.empathy <= 1.0
    assert 0.0 <= doctor.weight_wmrat <= 1.0
    assert 0.0 <= doctor.weight_mwres <= 1.0
    assert doctor.personal_resource >= 0.0
    assert doctor.personal_resource_constraint == 0.8
    assert doctor.experience >= 0
    assert doctor.confidence >= 0.0
    assert isinstance(doctor.credential, Credential)
    for ties in (doctor.social_ties_doctors, doctor.social_ties_patients):
        for strength in ties.values():
            assert 0.0 <= strength <= 1.0
    for respect in doctor.respect_for_colleagues.values():
        assert respect >= 0.0


def check_patient_invariants(patient: PatientState) -> None:
    assert 0.0 <= patient.health_level <= 1.0
    assert 0.1 <= patient.resilience <= 0.4
    for weight in (patient.cred_weight, patient.mean_rating_weight, patient.past_rating_weight):
        assert 0.0 <= weight <= 1.0
    total = patient.cred_weight + patient.mean_rating_weight + patient.past_rating_weight
    assert abs(total - 1.0) <= WEIGHT_SUM_TOL
    if patient.is_infected:
        assert patient.infected_order is not None
    for level in patient.health_history:
        assert 0.0 <= level <= 1.0
    for ties in (patient.social_ties_doctors, patient.social_ties_patients):
        for strength in ties.values():
            assert 0.0 <= strength <= 1.0


def exhaustive_choose(
    patient: PatientState,
    doctors: list[DoctorState],
    ledger: RatingLedger,
    judge,
    needs_threshold: float = NEEDS_DOCTOR_THRESHOLD,
) -> int | None:
    """Brute-force reference for choose_doctor: score every candidate, pick
    the max by (judgment, lowest id), honoring the loyalty rule first."""
    if patient.health_level >= needs_threshold:
        return None
    free = [d for d in doctors if not d.is_busy]
    if not free:
        return None
    last = patient.last_doctor_id
    if last is not None and ledger.rating_by_patient(last, patient.patient_id) == PERFECT_RATING:
        if any(d.doctor_id == last for d in free):
            return last
        pool = [d for d in free if d.doctor_id != last] or free
    else:
        pool = free
    scored = [(judge(patient, d, ledger), -d.doctor_id, d.doctor_id) for d in pool]
    return max(scored)[2]
