"""Cognitive-social-system extensions to the care loop.

Directed tie strengths modulate everything a classical agent would take
at face value: colleague respect feeds doctor confidence, confidence
feeds treatment effectiveness, and patients judge and rate doctors
through their own tie strengths.  Ratings here are one-decimal reals.

The engine refreshes respect and confidence once per round for every
doctor before any treatment: first all respect maps are recomputed, then
all confidences, so every confidence reads the same round's committed
respect values.
"""

from __future__ import annotations

import math

from .agents import DoctorState, PatientState
from .classical import (
    EFFECTIVENESS_CAP,
    JUDGMENT_SCORE,
    PERFECT_RATING,
    PERFECT_RATING_THRESHOLD,
    TREATMENT_FACTOR,
    update_health_level,
    upgrade_credential,
)
from .ratings import RatingLedger

RATING_TIE_BONUS = 0.1


def round_to_tenth(value: float) -> float:
    """Round a non-negative value to one decimal, halves away from zero."""
    return math.floor(value * 10.0 + 0.5) / 10.0


def mean_weighted_respects(doctor: DoctorState, all_doctors: list[DoctorState]) -> float:
    """Average respect colleagues hold for this doctor, weighted by the
    doctor's own tie to each colleague; zero when all ties are zero."""
    weighted = 0.0
    strengths = 0.0
    for colleague in all_doctors:
        if colleague.doctor_id == doctor.doctor_id:
            continue
        respect = colleague.respect_for_colleagues.get(doctor.doctor_id, 0.0)
        strength = doctor.social_ties_doctors.get(colleague.doctor_id, 0.0)
        weighted += respect * strength
        strengths += strength
    if strengths > 0.0:
        return weighted / strengths
    return 0.0


def update_respect_for_colleagues(
    doctor: DoctorState,
    all_doctors: list[DoctorState],
    ledger: RatingLedger,
) -> None:
    """Recompute this doctor's respect for every colleague.

    Respect = own tie to the colleague x (colleague's treatment-factor
    credential score + the colleague's ratings weighted by own ties to
    the rating patients).  Reads no respect values, so a sweep over all
    doctors is order-independent.
    """
    for colleague in all_doctors:
        if colleague.doctor_id == doctor.doctor_id:
            continue
        valuation = ledger.weighted_valuation(colleague.doctor_id, doctor.social_ties_patients)
        credential_score = TREATMENT_FACTOR[colleague.credential]
        strength = doctor.social_ties_doctors.get(colleague.doctor_id, 0.0)
        doctor.respect_for_colleagues[colleague.doctor_id] = strength * (
            credential_score + valuation
        )


def update_confidence(
    doctor: DoctorState,
    ledger: RatingLedger,
    all_doctors: list[DoctorState],
) -> None:
    ratings_part = ledger.mean_weighted_ratings(doctor.doctor_id, doctor.social_ties_patients)
    respects_part = mean_weighted_respects(doctor, all_doctors)
    doctor.confidence = doctor.weight_wmrat * ratings_part + doctor.weight_mwres * respects_part


def treatment_effectiveness_css(doctor: DoctorState, cap: float = EFFECTIVENESS_CAP) -> float:
    raw = (TREATMENT_FACTOR[doctor.credential] + doctor.empathy + doctor.confidence) * (
        1.0 - doctor.technological_resource_constraint
    )
    return min(cap, raw)


def treat_patient_css(doctor: DoctorState, cap: float = EFFECTIVENESS_CAP) -> float:
    """Confidence-aware variant of the classical treatment step."""
    if doctor.is_busy:
        return 0.0
    doctor.is_busy = True
    effectiveness = treatment_effectiveness_css(doctor, cap)
    doctor.experience += 1
    upgrade_credential(doctor)
    return effectiveness


def judge_doctor_css(patient: PatientState, doctor: DoctorState, ledger: RatingLedger) -> float:
    """Tie-weighted judgment of a doctor.

    The credential score is scaled by the patient's tie to the doctor;
    the peer-rating term averages peers' stored ratings weighted by the
    patient's ties to those peers (aggregated over the doctor's raters,
    which sums the same terms as walking the tie map); the past-rating
    term is the patient's own stored rating, unweighted.
    """
    s_doc = patient.social_ties_doctors.get(doctor.doctor_id, 0.0)
    weighted = 0.0
    strengths = 0.0
    for rater_id, rating in ledger.ratings_for(doctor.doctor_id).items():
        if rater_id == patient.patient_id:
            continue
        strength = patient.social_ties_patients.get(rater_id, 0.0)
        weighted += rating * strength
        strengths += strength
    peers_part = weighted / strengths if strengths > 0.0 else 0.0
    past = ledger.rating_by_patient(doctor.doctor_id, patient.patient_id)
    return (
        patient.cred_weight * (JUDGMENT_SCORE[doctor.credential] * s_doc)
        + patient.mean_rating_weight * peers_part
        + patient.past_rating_weight * (past if past is not None else 0.0)
    )


def rate_doctor_css(
    patient: PatientState,
    doctor: DoctorState,
    perfect_threshold: float = PERFECT_RATING_THRESHOLD,
) -> float:
    """One-decimal rating boosted by the patient's tie to the doctor, capped at 5."""
    if patient.health_level >= perfect_threshold:
        base = float(PERFECT_RATING)
    else:
        base = max(0.0, PERFECT_RATING * patient.health_level / perfect_threshold)
    strength = patient.social_ties_doctors.get(doctor.doctor_id, 0.0)
    adjusted = base * (1.0 + RATING_TIE_BONUS * strength)
    rating = min(float(PERFECT_RATING), round_to_tenth(adjusted))
    patient.last_doctor_id = doctor.doctor_id
    return rating


def receive_treatment_css(
    patient: PatientState,
    doctor: DoctorState,
    all_doctors: list[DoctorState],
    ledger: RatingLedger,
    cap: float = EFFECTIVENESS_CAP,
    perfect_threshold: float = PERFECT_RATING_THRESHOLD,
) -> float:
    """Full treatment exchange under tie-modulated perception.

    Effectiveness uses the confidence committed by the pre-round sweep;
    ``all_doctors`` is accepted for interface parity but not re-read here.
    """
    del all_doctors
    effectiveness = treat_patient_css(doctor, cap) * (1.0 - patient.resilience)
    update_health_level(patient, effectiveness)
    patient.is_infected = False
    rating = rate_doctor_css(patient, doctor, perfect_threshold)
    ledger.add_rating(doctor.doctor_id, patient.patient_id, rating)
    return rating
