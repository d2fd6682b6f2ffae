"""Classical-model care loop: treatment, credential progression, judgment,
doctor choice, health update, and integer rating.

Busy semantics: a doctor serves exactly one patient per round.  The busy
flag is set by :func:`treat_patient` and cleared only by the engine's
round-start reset, which is what makes the availability filter in
:func:`choose_doctor` meaningful.
"""

from __future__ import annotations

from typing import Callable

from .agents import Credential, DoctorState, PatientState
from .infection import NEEDS_DOCTOR_THRESHOLD, needs_doctor
from .ratings import RatingLedger

EFFECTIVENESS_CAP = 0.7
PERFECT_RATING_THRESHOLD = 0.8
PERFECT_RATING = 5

# Credential contribution to treatment effectiveness.
TREATMENT_FACTOR = {
    Credential.LOW: 0.1,
    Credential.MEDIUM: 0.2,
    Credential.HIGH: 0.3,
}

# Credential score patients use when judging a doctor.
JUDGMENT_SCORE = {
    Credential.LOW: 0.1,
    Credential.MEDIUM: 0.5,
    Credential.HIGH: 1.0,
}

JudgeFn = Callable[[PatientState, DoctorState, RatingLedger], float]


def treatment_effectiveness(doctor: DoctorState, cap: float = EFFECTIVENESS_CAP) -> float:
    raw = (TREATMENT_FACTOR[doctor.credential] + doctor.empathy) * (
        1.0 - doctor.technological_resource_constraint
    )
    return min(cap, raw)


def upgrade_credential(doctor: DoctorState) -> None:
    """Promote at most one credential step when research and experience allow."""
    if (
        doctor.credential is Credential.LOW
        and doctor.research_ability >= 0.5
        and doctor.experience >= 50
    ):
        doctor.credential = Credential.MEDIUM
    elif (
        doctor.credential is Credential.MEDIUM
        and doctor.research_ability >= 0.8
        and doctor.experience >= 80
    ):
        doctor.credential = Credential.HIGH


def treat_patient(doctor: DoctorState, cap: float = EFFECTIVENESS_CAP) -> float:
    """Deliver one treatment: marks the doctor busy for the rest of the
    round, gains experience, and may upgrade the credential.  A busy
    doctor treats nobody and returns zero effectiveness."""
    if doctor.is_busy:
        return 0.0
    doctor.is_busy = True
    effectiveness = treatment_effectiveness(doctor, cap)
    doctor.experience += 1
    upgrade_credential(doctor)
    return effectiveness


def judge_doctor(patient: PatientState, doctor: DoctorState, ledger: RatingLedger) -> float:
    past = ledger.rating_by_patient(doctor.doctor_id, patient.patient_id)
    return (
        patient.cred_weight * JUDGMENT_SCORE[doctor.credential]
        + patient.mean_rating_weight * ledger.mean_rating(doctor.doctor_id)
        + patient.past_rating_weight * (past if past is not None else 0.0)
    )


def choose_doctor(
    patient: PatientState,
    doctors: list[DoctorState],
    ledger: RatingLedger,
    judge: JudgeFn = judge_doctor,
    needs_threshold: float = NEEDS_DOCTOR_THRESHOLD,
) -> int | None:
    """Pick a doctor id for a patient who needs care, or None.

    Loyalty first: when the patient's last doctor carries their stored
    perfect rating of 5 and is free, that doctor is kept regardless of
    judgment scores.  Otherwise the free doctor with the highest judgment
    wins, excluding the loyalty-exhausted doctor while alternatives
    exist.  Score ties break toward the lowest doctor id.
    """
    if not needs_doctor(patient, needs_threshold):
        return None
    available = [d for d in doctors if not d.is_busy]
    if not available:
        return None
    last = patient.last_doctor_id
    loyal = last is not None and ledger.rating_by_patient(last, patient.patient_id) == PERFECT_RATING
    if loyal:
        for doctor in available:
            if doctor.doctor_id == last:
                return last
        candidates = [d for d in available if d.doctor_id != last] or available
    else:
        candidates = available
    best_id = None
    best_score = float("-inf")
    for doctor in sorted(candidates, key=lambda d: d.doctor_id):
        score = judge(patient, doctor, ledger)
        if score > best_score:
            best_id = doctor.doctor_id
            best_score = score
    return best_id


def update_health_level(patient: PatientState, effectiveness: float) -> None:
    patient.health_level = max(0.1, min(1.0, patient.health_level + effectiveness))
    patient.health_history.append(patient.health_level)


def rate_doctor(
    patient: PatientState,
    doctor: DoctorState,
    perfect_threshold: float = PERFECT_RATING_THRESHOLD,
) -> int:
    """Integer rating 0..5 from post-treatment health; remembers the doctor."""
    if patient.health_level >= perfect_threshold:
        rating = PERFECT_RATING
    else:
        rating = max(0, int(PERFECT_RATING * patient.health_level / perfect_threshold))
    patient.last_doctor_id = doctor.doctor_id
    return rating


def receive_treatment(
    patient: PatientState,
    doctor: DoctorState,
    ledger: RatingLedger,
    cap: float = EFFECTIVENESS_CAP,
    perfect_threshold: float = PERFECT_RATING_THRESHOLD,
) -> float:
    """Full treatment exchange; returns the rating the patient recorded."""
    effectiveness = treat_patient(doctor, cap) * (1.0 - patient.resilience)
    update_health_level(patient, effectiveness)
    patient.is_infected = False
    rating = rate_doctor(patient, doctor, perfect_threshold)
    ledger.add_rating(doctor.doctor_id, patient.patient_id, rating)
    return float(rating)
