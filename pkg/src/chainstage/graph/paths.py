"""Root-to-leaf path enumeration over a valid design (branch coverage input)."""

from __future__ import annotations

from chainstage.graph.model import BehaviorNode, DialogueDesign, ReactionNode


def enumerate_paths(design: DialogueDesign) -> list[list[str]]:
    """Every root-to-leaf node-id sequence, in document order.

    Expects a design that passes validation; each leaf reaction appears in
    exactly one path.
    """
    paths: list[list[str]] = []

    def descend(node_id: str, trail: list[str]) -> None:
        node = design.nodes[node_id]
        trail = trail + [node_id]
        if isinstance(node, BehaviorNode):
            if node.reaction_child is None:
                raise ValueError(f"behavior {node_id} has no reaction child")
            descend(node.reaction_child, trail)
        elif isinstance(node, ReactionNode):
            if node.is_leaf:
                paths.append(trail)
            else:
                for child_id in node.behavior_children:
                    descend(child_id, trail)

    for root_id in design.root_behaviors:
        descend(root_id, [])
    return paths
