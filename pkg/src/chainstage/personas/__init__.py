"""Simulated-student personas that suggest comments and replies during testing."""

from chainstage.personas.sim import suggest_comment, suggest_reply
from chainstage.personas.spec import PersonaKind, PersonaSpec, Stance

__all__ = ["PersonaKind", "PersonaSpec", "Stance", "suggest_comment", "suggest_reply"]
