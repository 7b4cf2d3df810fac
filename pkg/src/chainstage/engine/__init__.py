"""Session state machine: classify each student message, generate the reply."""

from chainstage.engine.engine import ConversationEngine, EngineConfig
from chainstage.engine.session import (
    Position,
    PositionKind,
    SessionState,
    Speaker,
    StepMode,
    StepOutcome,
    Turn,
)

__all__ = [
    "ConversationEngine",
    "EngineConfig",
    "Position",
    "PositionKind",
    "SessionState",
    "Speaker",
    "StepMode",
    "StepOutcome",
    "Turn",
]
