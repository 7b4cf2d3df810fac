"""Structural validation of dialogue designs.

Violations are data, not exceptions: a broken draft produces a report the
builder UI can pin to the offending node, and only storage refuses it.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from chainstage.graph.model import (
    MAX_TREE_DEPTH,
    BehaviorNode,
    DialogueDesign,
    ReactionNode,
    Scenario,
)


class ViolationCode(str, Enum):
    CYCLE = "CYCLE"
    ORPHAN = "ORPHAN"
    BAD_ALTERNATION = "BAD_ALTERNATION"
    MISSING_CHILD = "MISSING_CHILD"
    DUP_LABEL = "DUP_LABEL"
    EMPTY_EXAMPLES = "EMPTY_EXAMPLES"
    DANGLING_REF = "DANGLING_REF"
    BAD_SCENARIO = "BAD_SCENARIO"
    # Extensions beyond the core catalog: a node referenced from two places
    # breaks tree shape without being a cycle, and authoring depth is capped.
    MULTI_PARENT = "MULTI_PARENT"
    MAX_DEPTH = "MAX_DEPTH"


@dataclass(frozen=True)
class Violation:
    code: ViolationCode
    path: str
    detail: str

    def to_dict(self) -> dict[str, str]:
        return {"code": self.code.value, "path": self.path, "detail": self.detail}


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def at_path(self, path: str) -> list[Violation]:
        return [v for v in self.violations if v.path == path]

    def codes(self) -> set[ViolationCode]:
        return {v.code for v in self.violations}

    def to_dict(self) -> dict:
        return {"violations": [v.to_dict() for v in self.violations]}


def scenario_violations(scenario: Scenario, path: str = "scenario") -> list[Violation]:
    """BAD_SCENARIO checks, shared with the persona simulator's precondition."""
    found = []

    def bad(field: str, detail: str) -> None:
        found.append(Violation(ViolationCode.BAD_SCENARIO, f"{path}.{field}", detail))

    if not scenario.victim_name.strip():
        bad("victim_name", "victim name is empty")
    if not scenario.bully_name.strip():
        bad("bully_name", "bully name is empty")
    if (
        scenario.victim_name.strip()
        and scenario.victim_name.strip() == scenario.bully_name.strip()
    ):
        bad("bully_name", "victim and bully share a name")
    if not scenario.post_text.strip():
        bad("post_text", "post text is empty")
    if not scenario.bully_comment.strip():
        bad("bully_comment", "bully comment is empty")
    return found


def _examples_violation(node_path: str, examples: tuple[str, ...]) -> Violation | None:
    if not examples:
        return Violation(ViolationCode.EMPTY_EXAMPLES, f"{node_path}.examples", "no examples")
    for i, example in enumerate(examples):
        if not example.strip():
            return Violation(
                ViolationCode.EMPTY_EXAMPLES,
                f"{node_path}.examples",
                f"example {i} is blank",
            )
    return None


def _dup_label_violations(
    design: DialogueDesign, sibling_ids: tuple[str, ...], group: str
) -> list[Violation]:
    """Case-insensitive label uniqueness within one sibling group."""
    found = []
    seen: dict[str, str] = {}
    for node_id in sibling_ids:
        node = design.nodes.get(node_id)
        if not isinstance(node, BehaviorNode):
            continue
        key = node.label.strip().casefold()
        if key in seen:
            found.append(
                Violation(
                    ViolationCode.DUP_LABEL,
                    f"nodes.{node_id}.label",
                    f"label duplicates sibling {seen[key]} in {group}",
                )
            )
        else:
            seen[key] = node_id
    return found


def validate_design(
    design: DialogueDesign, *, max_depth: int = MAX_TREE_DEPTH
) -> ValidationReport:
    """Check every tree invariant; an empty report means the design is sound."""
    violations: list[Violation] = []
    nodes = design.nodes

    violations.extend(scenario_violations(design.scenario))

    # Per-node local checks plus an incoming-reference count for tree shape.
    incoming: dict[str, int] = {node_id: 0 for node_id in nodes}

    def check_ref(ref: str, ref_path: str, expected_kind: str) -> None:
        target = nodes.get(ref)
        if target is None:
            violations.append(
                Violation(ViolationCode.DANGLING_REF, ref_path, f"unknown node {ref}")
            )
            return
        incoming[ref] += 1
        if target.kind != expected_kind:
            violations.append(
                Violation(
                    ViolationCode.BAD_ALTERNATION,
                    ref_path,
                    f"expected a {expected_kind} node, {ref} is a {target.kind}",
                )
            )

    for i, root_id in enumerate(design.root_behaviors):
        check_ref(root_id, f"root_behaviors[{i}]", "behavior")

    for node_id, node in nodes.items():
        node_path = f"nodes.{node_id}"
        ex = _examples_violation(node_path, node.examples)
        if ex is not None:
            violations.append(ex)
        if isinstance(node, BehaviorNode):
            if node.reaction_child is None:
                violations.append(
                    Violation(
                        ViolationCode.MISSING_CHILD,
                        f"{node_path}.reaction_child",
                        "behavior has no reaction",
                    )
                )
            else:
                check_ref(node.reaction_child, f"{node_path}.reaction_child", "reaction")
        else:
            for j, child_id in enumerate(node.behavior_children):
                check_ref(child_id, f"{node_path}.behavior_children[{j}]", "behavior")

    violations.extend(_dup_label_violations(design, design.root_behaviors, "root"))
    for node in nodes.values():
        if isinstance(node, ReactionNode) and node.behavior_children:
            violations.extend(
                _dup_label_violations(design, node.behavior_children, node.node_id)
            )

    for node_id, count in incoming.items():
        if count > 1:
            violations.append(
                Violation(
                    ViolationCode.MULTI_PARENT,
                    f"nodes.{node_id}",
                    f"referenced from {count} places",
                )
            )

    # Depth-first walk from the roots: cycles, reachability, depth cap.
    # States: 1 = on the current stack, 2 = fully explored.
    state: dict[str, int] = {}

    def children_of(node_id: str) -> list[tuple[str, str]]:
        node = nodes.get(node_id)
        if isinstance(node, BehaviorNode):
            if node.reaction_child in nodes:
                return [(node.reaction_child, f"nodes.{node_id}.reaction_child")]
            return []
        if isinstance(node, ReactionNode):
            return [
                (child, f"nodes.{node_id}.behavior_children[{j}]")
                for j, child in enumerate(node.behavior_children)
                if child in nodes
            ]
        return []

    def walk(node_id: str, depth: int) -> None:
        if state.get(node_id) == 2:
            return
        if depth == max_depth + 1:  # report once, at the crossing node only
            violations.append(
                Violation(
                    ViolationCode.MAX_DEPTH,
                    f"nodes.{node_id}",
                    f"node sits {depth} alternations deep (cap {max_depth})",
                )
            )
        state[node_id] = 1
        for child_id, edge_path in children_of(node_id):
            if state.get(child_id) == 1:
                violations.append(
                    Violation(ViolationCode.CYCLE, edge_path, f"cycle through {child_id}")
                )
                continue
            walk(child_id, depth + 1)
        state[node_id] = 2

    for root_id in design.root_behaviors:
        if root_id in nodes and state.get(root_id) != 2:
            walk(root_id, 1)

    for node_id in nodes:
        if state.get(node_id) != 2:
            violations.append(
                Violation(
                    ViolationCode.ORPHAN,
                    f"nodes.{node_id}",
                    "not reachable from any root behavior",
                )
            )

    return ValidationReport(tuple(violations))
