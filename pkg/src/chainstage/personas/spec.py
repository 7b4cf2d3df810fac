"""The three simulated-student behavior profiles."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class PersonaKind(str, Enum):
    AGGRESSIVE = "aggressive"  # attacks the bully
    UPSTANDER = "upstander"  # supports the victim
    PASSIVE = "passive"  # ignores the bullying


class Stance(str, Enum):
    AGREE = "agree"
    DISAGREE = "disagree"


@dataclass(frozen=True)
class PersonaSpec:
    """One simulated student. Stance toward the chatbot follows from the kind:
    only the aggressive student tends to push back."""

    kind: PersonaKind
    student_name: str = "John"

    @property
    def stance(self) -> Stance:
        return Stance.DISAGREE if self.kind is PersonaKind.AGGRESSIVE else Stance.AGREE
