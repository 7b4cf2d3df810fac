"""Rendered prompts travel with their slot values for audit and golden tests."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

SlotValue = str | tuple[str, ...]


class PromptKind(str, Enum):
    BEHAVIOR_CLASSIFIER = "BEHAVIOR_CLASSIFIER"
    REACTION_GENERATOR = "REACTION_GENERATOR"
    PERSONA_COMMENT = "PERSONA_COMMENT"
    PERSONA_REPLY = "PERSONA_REPLY"


_EXPECTED_SLOTS: dict[PromptKind, frozenset[str]] = {
    PromptKind.BEHAVIOR_CLASSIFIER: frozenset(
        {"prompt_classes", "example_num", "example", "class_name", "student_message_to_classify"}
    ),
    PromptKind.REACTION_GENERATOR: frozenset(
        {"example_num", "context_example", "response", "student_message_to_answer"}
    ),
    PromptKind.PERSONA_COMMENT: frozenset({"general_context"}),
    PromptKind.PERSONA_REPLY: frozenset({"general_context", "comment", "messages"}),
}


def expected_slots(kind: PromptKind) -> frozenset[str]:
    """Slot names a bundle of this kind must carry."""
    return _EXPECTED_SLOTS[kind]


@dataclass(frozen=True)
class PromptBundle:
    """A fully rendered prompt plus the values interpolated into it.

    Repeated slots (one value per few-shot example) are stored as tuples.
    Invariants checked by tests: every slot value is a substring of
    `rendered`, the slot names cover the kind's template, and no literal
    `{name}` placeholder survives in `rendered`.
    """

    kind: PromptKind
    rendered: str
    slots: dict[str, SlotValue] = field(default_factory=dict)
    template_version: str = "1"

    def slot_values(self) -> list[str]:
        values: list[str] = []
        for value in self.slots.values():
            if isinstance(value, tuple):
                values.extend(value)
            else:
                values.append(value)
        return values

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "rendered": self.rendered,
            "slots": {
                name: list(value) if isinstance(value, tuple) else value
                for name, value in self.slots.items()
            },
            "template_version": self.template_version,
        }
