"""Domain types for the dialogue tree a teacher authors.

The tree strictly alternates two node kinds: a behavior node names one
anticipated student behavior (and doubles as a classifier category), a
reaction node carries exemplary chatbot answers used as few-shot generation
examples. All types are immutable values; semantic rules live in
`validation`, not here, so that broken drafts stay representable and
validation can report violations as data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime, timezone

# Authoring bounds enforced at the schema level, keeping prompts bounded.
MAX_LABEL_LENGTH = 120
MAX_EXAMPLE_LENGTH = 500
MAX_TREE_DEPTH = 12  # alternations from a root behavior to the deepest node


@dataclass(frozen=True)
class Scenario:
    """The social-media stage every rehearsal plays on."""

    scenario_id: str
    post_text: str
    bully_comment: str
    victim_name: str = "Alex"
    bully_name: str = "Leslie"
    post_image_note: str | None = None


@dataclass(frozen=True)
class BehaviorNode:
    """One anticipated student behavior; its label is a classifier category."""

    node_id: str
    label: str
    examples: tuple[str, ...]
    reaction_child: str | None

    kind = "behavior"


@dataclass(frozen=True)
class ReactionNode:
    """How the chatbot should react: exemplary answers plus follow-up behaviors.

    An empty `behavior_children` list marks a leaf; past a leaf the engine
    keeps generating from this node's examples.
    """

    node_id: str
    instruction_label: str
    examples: tuple[str, ...]
    behavior_children: tuple[str, ...] = ()

    kind = "reaction"

    @property
    def is_leaf(self) -> bool:
        return not self.behavior_children


Node = BehaviorNode | ReactionNode


def _utcnow() -> datetime:
    return datetime.now(timezone.utc).replace(microsecond=0)


@dataclass(frozen=True)
class DialogueDesign:
    """A full teacher-authored design: scenario plus the alternating tree."""

    design_id: str
    title: str
    scenario: Scenario
    root_behaviors: tuple[str, ...]
    nodes: dict[str, Node]
    created_at: datetime = field(default_factory=_utcnow)
    updated_at: datetime = field(default_factory=_utcnow)

    def node(self, node_id: str) -> Node:
        return self.nodes[node_id]

    def behavior(self, node_id: str) -> BehaviorNode:
        node = self.nodes[node_id]
        if not isinstance(node, BehaviorNode):
            raise KeyError(f"{node_id} is not a behavior node")
        return node

    def reaction(self, node_id: str) -> ReactionNode:
        node = self.nodes[node_id]
        if not isinstance(node, ReactionNode):
            raise KeyError(f"{node_id} is not a reaction node")
        return node

    def parent_behavior_of(self, reaction_id: str) -> BehaviorNode | None:
        """The behavior whose reaction_child is this reaction, if any."""
        for node in self.nodes.values():
            if isinstance(node, BehaviorNode) and node.reaction_child == reaction_id:
                return node
        return None

    def reaction_ids(self) -> list[str]:
        return [n.node_id for n in self.nodes.values() if isinstance(n, ReactionNode)]
