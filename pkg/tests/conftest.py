"""Shared fixtures: the ballet worked-example design and frozen prompt inputs."""

from __future__ import annotations

from pathlib import Path

import pytest

from chainstage.graph.model import BehaviorNode, DialogueDesign, ReactionNode
from chainstage.graph.serialization import deserialize_design

REPO_ROOT = Path(__file__).resolve().parent.parent
GOLDEN_DIR = REPO_ROOT / "testdata" / "golden"
BALLET_DESIGN_PATH = REPO_ROOT / "src" / "chainstage" / "data" / "ballet_design.json"

# Frozen inputs behind the golden files. Byte changes here require
# regenerating testdata/golden by hand.
OPENING_COMMENTS = {
    "aggressive": "Leslie, shut up. Nobody cares about your opinion.",
    "upstander": "Don't listen to Leslie, Alex. Your recital is going to be amazing!",
    "passive": "Can't wait to see the recital!",
}
CHATBOT_OPENERS = {
    "aggressive": "Do you think attacking Leslie is the best way to handle this situation?",
    "upstander": "That was really kind of you to stand up for Alex. How do you think your comment made Alex feel?",
    "passive": "It's nice that you are excited about the show. Did you notice Leslie's comment? How do you think Alex felt reading it?",
}


def load_ballet_design() -> DialogueDesign:
    return deserialize_design(BALLET_DESIGN_PATH.read_text(encoding="utf-8"))


def behavior_by_label(design: DialogueDesign, label: str) -> BehaviorNode:
    for node in design.nodes.values():
        if isinstance(node, BehaviorNode) and node.label == label:
            return node
    raise KeyError(label)


def reaction_by_label(design: DialogueDesign, instruction_label: str) -> ReactionNode:
    for node in design.nodes.values():
        if isinstance(node, ReactionNode) and node.instruction_label == instruction_label:
            return node
    raise KeyError(instruction_label)


def golden(name: str) -> str:
    return (GOLDEN_DIR / name).read_text(encoding="utf-8")


@pytest.fixture
def ballet_design() -> DialogueDesign:
    return load_ballet_design()


@pytest.fixture
def ballet_document() -> str:
    return BALLET_DESIGN_PATH.read_text(encoding="utf-8")
