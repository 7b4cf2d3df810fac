"""Turn raw classifier completions back into routing decisions.

Parsing is total: anything that does not normalize to a known category label
degrades to "no match", which the engine treats as its fallback signal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from chainstage.errors import PromptInputError
from chainstage.prompts.templates import NONE_CATEGORY

_EDGE_CHARS = "'\"`‘’“”."


@dataclass(frozen=True)
class ClassDecision:
    """matched is one of the candidate labels, or None for the 'none' route."""

    matched: str | None
    raw: str


def _normalize(text: str) -> str:
    previous = None
    while text != previous:
        previous = text
        text = text.strip().strip(_EDGE_CHARS)
    return text.casefold()


def parse_class_decision(raw: str, candidates: Sequence[str]) -> ClassDecision:
    if not candidates:
        raise PromptInputError("no candidate labels", code="EMPTY_CANDIDATES")
    normalized = _normalize(raw)
    if normalized != NONE_CATEGORY:
        for label in candidates:
            if _normalize(label) == normalized:
                return ClassDecision(matched=label, raw=raw)
    return ClassDecision(matched=None, raw=raw)
