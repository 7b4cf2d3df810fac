"""Random valid-design generator for round-trip and invariant testing."""

from __future__ import annotations

import random
from datetime import datetime, timedelta, timezone

from chainstage.graph.model import BehaviorNode, DialogueDesign, Node, ReactionNode, Scenario

_WORDS = (
    "ballet", "recital", "comment", "bully", "victim", "bystander", "kind",
    "mean", "post", "reply", "supports", "ignores", "attacks", "asks",
    "wonders", "laughs", "cheers", "摘要", "héros", "emoji😊",
)


def _text(rng: random.Random, max_words: int = 8) -> str:
    words = [rng.choice(_WORDS) for _ in range(rng.randint(1, max_words))]
    return " ".join(words)


def _examples(rng: random.Random, max_examples: int) -> tuple[str, ...]:
    return tuple(_text(rng) for _ in range(rng.randint(1, max_examples)))


def generate_design(
    rng: random.Random,
    *,
    max_depth: int = 5,
    max_branch: int = 4,
    max_examples: int = 6,
) -> DialogueDesign:
    """A structurally valid design: alternating tree, sibling-unique labels.

    max_depth counts behavior->reaction alternation pairs.
    """
    counter = [0]
    nodes: dict[str, Node] = {}

    def next_id(prefix: str) -> str:
        counter[0] += 1
        return f"{prefix}{counter[0]:04d}"

    def make_behavior(depth: int, sibling_index: int) -> str:
        behavior_id = next_id("b")
        reaction_id = next_id("r")
        child_count = 0
        if depth < max_depth:
            # decaying fan-out keeps generated trees a testable size
            weights = [3, 3, 2, 1, 1][: max_branch + 1]
            child_count = rng.choices(range(len(weights)), weights)[0]
        children = tuple(make_behavior(depth + 1, i) for i in range(child_count))
        nodes[reaction_id] = ReactionNode(
            node_id=reaction_id,
            instruction_label=_text(rng, 4),
            examples=_examples(rng, max_examples),
            behavior_children=children,
        )
        # A counter suffix keeps labels unique among siblings regardless of case.
        nodes[behavior_id] = BehaviorNode(
            node_id=behavior_id,
            label=f"{_text(rng, 4)} #{sibling_index}",
            examples=_examples(rng, max_examples),
            reaction_child=reaction_id,
        )
        return behavior_id

    roots = tuple(make_behavior(1, i) for i in range(rng.randint(1, max_branch)))
    stamp = datetime(2025, 1, 1, tzinfo=timezone.utc) + timedelta(
        seconds=rng.randint(0, 10_000_000)
    )
    return DialogueDesign(
        design_id=next_id("d"),
        title=_text(rng, 5),
        scenario=Scenario(
            scenario_id=next_id("s"),
            victim_name="Alex",
            bully_name="Leslie",
            post_text=_text(rng, 12),
            bully_comment=_text(rng, 12),
            post_image_note=_text(rng, 6) if rng.random() < 0.3 else None,
        ),
        root_behaviors=roots,
        nodes=nodes,
        created_at=stamp,
        updated_at=stamp,
    )
