"""Single-edit corruption catalog for the worked-example design.

Each entry mutates the parsed document dict in one place and names the
violation code validation must report at exactly that path.
"""

from __future__ import annotations

import copy
from dataclasses import dataclass
from typing import Callable

from chainstage.graph.validation import ViolationCode


def _node_id_by_label(doc: dict, label: str) -> str:
    for node_id, node in doc["nodes"].items():
        if node.get("label") == label or node.get("instruction_label") == label:
            return node_id
    raise KeyError(label)


@dataclass(frozen=True)
class Corruption:
    name: str
    expected_code: ViolationCode
    # mutates the document in place and returns the corrupted path
    apply: Callable[[dict], str]


def _drop_reaction_child(doc: dict) -> str:
    node_id = _node_id_by_label(doc, "If student agrees")
    doc["nodes"][node_id]["reaction_child"] = None
    return f"nodes.{node_id}.reaction_child"


def _dangling_reaction_child(doc: dict) -> str:
    node_id = _node_id_by_label(doc, "If student agrees")
    doc["nodes"][node_id]["reaction_child"] = "no-such-node"
    return f"nodes.{node_id}.reaction_child"


def _dangling_behavior_child(doc: dict) -> str:
    node_id = _node_id_by_label(doc, "ask student to reflect")
    doc["nodes"][node_id]["behavior_children"][1] = "no-such-node"
    return f"nodes.{node_id}.behavior_children[1]"


def _dangling_root(doc: dict) -> str:
    doc["root_behaviors"][2] = "no-such-node"
    return "root_behaviors[2]"


def _duplicate_root_label(doc: dict) -> str:
    node_id = _node_id_by_label(doc, "If student supports the victim")
    doc["nodes"][node_id]["label"] = "IF STUDENT BULLIES THE BULLY"
    return f"nodes.{node_id}.label"


def _duplicate_sibling_label(doc: dict) -> str:
    node_id = _node_id_by_label(doc, "If student pushes back")
    doc["nodes"][node_id]["label"] = "  if student agrees "
    return f"nodes.{node_id}.label"


def _empty_examples(doc: dict) -> str:
    node_id = _node_id_by_label(doc, "If student ignores the bullying")
    doc["nodes"][node_id]["examples"] = []
    return f"nodes.{node_id}.examples"


def _blank_example(doc: dict) -> str:
    node_id = _node_id_by_label(doc, "congratulates student")
    doc["nodes"][node_id]["examples"][1] = "   "
    return f"nodes.{node_id}.examples"


def _behavior_pointing_at_behavior(doc: dict) -> str:
    source = _node_id_by_label(doc, "If student ignores the bullying")
    target = _node_id_by_label(doc, "If student agrees")
    doc["nodes"][source]["reaction_child"] = target
    return f"nodes.{source}.reaction_child"


def _reaction_pointing_at_reaction(doc: dict) -> str:
    node_id = _node_id_by_label(doc, "ask student to reflect")
    target = _node_id_by_label(doc, "congratulates student")
    doc["nodes"][node_id]["behavior_children"][0] = target
    return f"nodes.{node_id}.behavior_children[0]"


def _root_pointing_at_reaction(doc: dict) -> str:
    doc["root_behaviors"][1] = _node_id_by_label(doc, "ask student to reflect")
    return "root_behaviors[1]"


def _introduce_cycle(doc: dict) -> str:
    leaf = _node_id_by_label(doc, "suggest supporting the victim")
    back_to = _node_id_by_label(doc, "If student bullies the bully")
    doc["nodes"][leaf]["behavior_children"] = [back_to]
    return f"nodes.{leaf}.behavior_children[0]"


def _orphan_node(doc: dict) -> str:
    doc["nodes"]["orphan-node-1"] = {
        "kind": "reaction",
        "node_id": "orphan-node-1",
        "instruction_label": "never wired in",
        "examples": ["Stray example."],
        "behavior_children": [],
    }
    return "nodes.orphan-node-1"


def _same_names(doc: dict) -> str:
    doc["scenario"]["bully_name"] = doc["scenario"]["victim_name"]
    return "scenario.bully_name"


def _blank_post(doc: dict) -> str:
    doc["scenario"]["post_text"] = ""
    return "scenario.post_text"


def _blank_bully_comment(doc: dict) -> str:
    doc["scenario"]["bully_comment"] = "  "
    return "scenario.bully_comment"


CATALOG: tuple[Corruption, ...] = (
    Corruption("drop_reaction_child", ViolationCode.MISSING_CHILD, _drop_reaction_child),
    Corruption("dangling_reaction_child", ViolationCode.DANGLING_REF, _dangling_reaction_child),
    Corruption("dangling_behavior_child", ViolationCode.DANGLING_REF, _dangling_behavior_child),
    Corruption("dangling_root", ViolationCode.DANGLING_REF, _dangling_root),
    Corruption("duplicate_root_label", ViolationCode.DUP_LABEL, _duplicate_root_label),
    Corruption("duplicate_sibling_label", ViolationCode.DUP_LABEL, _duplicate_sibling_label),
    Corruption("empty_examples", ViolationCode.EMPTY_EXAMPLES, _empty_examples),
    Corruption("blank_example", ViolationCode.EMPTY_EXAMPLES, _blank_example),
    Corruption("behavior_to_behavior", ViolationCode.BAD_ALTERNATION, _behavior_pointing_at_behavior),
    Corruption("reaction_to_reaction", ViolationCode.BAD_ALTERNATION, _reaction_pointing_at_reaction),
    Corruption("root_to_reaction", ViolationCode.BAD_ALTERNATION, _root_pointing_at_reaction),
    Corruption("introduce_cycle", ViolationCode.CYCLE, _introduce_cycle),
    Corruption("orphan_node", ViolationCode.ORPHAN, _orphan_node),
    Corruption("same_names", ViolationCode.BAD_SCENARIO, _same_names),
    Corruption("blank_post", ViolationCode.BAD_SCENARIO, _blank_post),
    Corruption("blank_bully_comment", ViolationCode.BAD_SCENARIO, _blank_bully_comment),
)


def corrupt(doc: dict, corruption: Corruption) -> tuple[dict, str]:
    mutated = copy.deepcopy(doc)
    path = corruption.apply(mutated)
    return mutated, path
