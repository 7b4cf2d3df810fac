"""Value types for one live rehearsal session."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from enum import Enum

from chainstage.prompts.bundles import PromptBundle

# Non-node origins a chatbot turn may carry.
ORIGIN_FALLBACK = "FALLBACK"
ORIGIN_CONTINUATION = "CONTINUATION"


class Speaker(str, Enum):
    STUDENT = "student"
    CHATBOT = "chatbot"


class PositionKind(str, Enum):
    AWAITING_COMMENT = "awaiting_comment"
    AT_ROOT = "at_root"  # started but not yet routed past the root split
    AT_REACTION = "at_reaction"
    LEAF_CONTINUATION = "leaf_continuation"


@dataclass(frozen=True)
class Position:
    kind: PositionKind
    node_id: str | None = None

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "node_id": self.node_id}

    @classmethod
    def from_dict(cls, data: dict) -> "Position":
        return cls(kind=PositionKind(data["kind"]), node_id=data.get("node_id"))


class StepMode(str, Enum):
    ROUTED = "routed"
    FALLBACK = "fallback"
    CONTINUATION = "continuation"


@dataclass(frozen=True)
class Turn:
    speaker: Speaker
    text: str
    origin: str | None  # reaction node id, FALLBACK, CONTINUATION; None for students
    ts: datetime

    def to_dict(self) -> dict:
        return {
            "speaker": self.speaker.value,
            "text": self.text,
            "origin": self.origin,
            "ts": self.ts.astimezone(timezone.utc).isoformat().replace("+00:00", "Z"),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Turn":
        return cls(
            speaker=Speaker(data["speaker"]),
            text=data["text"],
            origin=data.get("origin"),
            ts=datetime.fromisoformat(data["ts"].replace("Z", "+00:00")),
        )

    def to_jsonl(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)


@dataclass(frozen=True)
class StepOutcome:
    """What one student message produced, including the prompts used."""

    reply: str
    route: str | None  # matched behavior label; None when unrouted
    mode: StepMode
    prompt_audit: tuple[PromptBundle, ...]

    def to_dict(self) -> dict:
        return {
            "reply": self.reply,
            "route": self.route,
            "mode": self.mode.value,
            "prompt_audit": [bundle.to_dict() for bundle in self.prompt_audit],
        }


@dataclass
class SessionState:
    """One rehearsal: tree position, transcript, fallback counter.

    Mutated only by the engine, and only after every provider call for a step
    has succeeded, so a failed step leaves the session untouched.
    """

    session_id: str
    design_id: str
    position: Position = field(
        default_factory=lambda: Position(PositionKind.AWAITING_COMMENT)
    )
    transcript: list[Turn] = field(default_factory=list)
    fallback_count: int = 0
    created_at: datetime = field(default_factory=lambda: datetime.now(timezone.utc))

    @property
    def started(self) -> bool:
        return self.position.kind is not PositionKind.AWAITING_COMMENT

    def student_turns(self) -> int:
        return sum(1 for t in self.transcript if t.speaker is Speaker.STUDENT)

    def transcript_jsonl(self) -> str:
        return "".join(turn.to_jsonl() + "\n" for turn in self.transcript)
