"""Teacher-authored dialogue trees: domain types, validation, canonical JSON."""

from chainstage.graph.model import (
    BehaviorNode,
    DialogueDesign,
    Node,
    ReactionNode,
    Scenario,
)
from chainstage.graph.paths import enumerate_paths
from chainstage.graph.serialization import deserialize_design, serialize_design
from chainstage.graph.validation import (
    ValidationReport,
    Violation,
    ViolationCode,
    scenario_violations,
    validate_design,
)

__all__ = [
    "BehaviorNode",
    "DialogueDesign",
    "Node",
    "ReactionNode",
    "Scenario",
    "ValidationReport",
    "Violation",
    "ViolationCode",
    "deserialize_design",
    "enumerate_paths",
    "scenario_violations",
    "serialize_design",
    "validate_design",
]
