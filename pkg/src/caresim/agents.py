"""Agent state types and seeded initialization.

Doctors and patients are plain mutable dataclasses.  Social ties are
directed: each agent holds its own strength maps toward peers, and A's
tie to B is drawn independently of B's tie to A.  Classical-model agents
simply carry empty tie maps; every tie-weighted aggregation then reads
as zero.

Initialization draw order (one :class:`~caresim.rng.RngStream` per run):

* doctor: research ability U(0.2, 0.6), empathy U(0.2, 0.7),
  technological resource constraint U(0.2, 0.5), credential uniform over
  {low, medium, high}; css only: one U(0, 1) tie per peer doctor in the
  order given, then one per patient in the order given.
* patient: health U(0.5, 1.0), resilience U(0.1, 0.4), raw judgment
  weights U(0, 1), U(0, 1), U(0, 2) normalized to sum 1; css only: one
  U(0, 1) tie per doctor, then one per peer patient, in the order given.

The past-rating weight is drawn on a doubled range so its expected
normalized share is about one half, twice the other two weights.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .config import ModelKind
from .rng import RngStream


class Credential(str, Enum):
    LOW = "low"
    MEDIUM = "medium"
    HIGH = "high"

    @property
    def rank(self) -> int:
        return _CREDENTIAL_RANK[self]


_CREDENTIAL_RANK = {Credential.LOW: 0, Credential.MEDIUM: 1, Credential.HIGH: 2}

PERSONAL_RESOURCE_CONSTRAINT = 0.8


@dataclass
class DoctorState:
    doctor_id: int
    experience: int = 0
    research_ability: float = 0.0
    empathy: float = 0.0
    personal_resource_constraint: float = PERSONAL_RESOURCE_CONSTRAINT
    personal_resource: float = 1.0 - PERSONAL_RESOURCE_CONSTRAINT
    technological_resource_constraint: float = 0.2
    credential: Credential = Credential.LOW
    is_busy: bool = False
    social_ties_doctors: dict[int, float] = field(default_factory=dict)
    social_ties_patients: dict[int, float] = field(default_factory=dict)
    respect_for_colleagues: dict[int, float] = field(default_factory=dict)
    confidence: float = 0.0
    weight_wmrat: float = 0.5
    weight_mwres: float = 0.5

    @property
    def agent_id(self) -> int:
        return self.doctor_id


@dataclass
class PatientState:
    patient_id: int
    health_level: float = 1.0
    resilience: float = 0.1
    cred_weight: float = 1 / 3
    mean_rating_weight: float = 1 / 3
    past_rating_weight: float = 1 / 3
    is_infected: bool = False
    infected_order: int | None = None
    last_doctor_id: int | None = None
    health_history: list[float] = field(default_factory=list)
    social_ties_doctors: dict[int, float] = field(default_factory=dict)
    social_ties_patients: dict[int, float] = field(default_factory=dict)

    @property
    def agent_id(self) -> int:
        return self.patient_id


def init_doctor(
    doctor_id: int,
    rng: RngStream,
    model: ModelKind,
    peer_doctor_ids: list[int],
    patient_ids: list[int],
) -> DoctorState:
    """Draw a fresh doctor.  ``peer_doctor_ids`` must not contain ``doctor_id``."""
    if doctor_id in peer_doctor_ids:
        raise ValueError(f"duplicate doctor id {doctor_id}")
    doctor = DoctorState(
        doctor_id=doctor_id,
        research_ability=rng.uniform(0.2, 0.6),
        empathy=rng.uniform(0.2, 0.7),
        technological_resource_constraint=rng.uniform(0.2, 0.5),
        credential=rng.choice((Credential.LOW, Credential.MEDIUM, Credential.HIGH)),
    )
    if model is ModelKind.CSS:
        doctor.social_ties_doctors = {peer: rng.uniform(0.0, 1.0) for peer in peer_doctor_ids}
        doctor.social_ties_patients = {pid: rng.uniform(0.0, 1.0) for pid in patient_ids}
        doctor.respect_for_colleagues = {peer: 0.0 for peer in peer_doctor_ids}
    return doctor


def init_patient(
    patient_id: int,
    rng: RngStream,
    model: ModelKind,
    doctor_ids: list[int],
    peer_patient_ids: list[int],
) -> PatientState:
    """Draw a fresh patient.  ``peer_patient_ids`` must not contain ``patient_id``."""
    if patient_id in peer_patient_ids:
        raise ValueError(f"duplicate patient id {patient_id}")
    health = rng.uniform(0.5, 1.0)
    resilience = rng.uniform(0.1, 0.4)
    raw_cred = rng.uniform(0.0, 1.0)
    raw_mean = rng.uniform(0.0, 1.0)
    raw_past = rng.uniform(0.0, 2.0)
    total = raw_cred + raw_mean + raw_past
    patient = PatientState(
        patient_id=patient_id,
        health_level=health,
        resilience=resilience,
        cred_weight=raw_cred / total,
        mean_rating_weight=raw_mean / total,
        past_rating_weight=raw_past / total,
    )
    if model is ModelKind.CSS:
        patient.social_ties_doctors = {did: rng.uniform(0.0, 1.0) for did in doctor_ids}
        patient.social_ties_patients = {pid: rng.uniform(0.0, 1.0) for pid in peer_patient_ids}
    return patient
