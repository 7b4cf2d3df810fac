"""File-backed stores: one canonical document per design, one append-only
event log per session.

Writes are atomic (temp file + rename) or append-with-flush, so a crashed
process leaves committed state readable. Sessions embed a snapshot of their
design at start, which is what pins a running session to the design version
it opened with even if the design is edited afterwards.
"""

from __future__ import annotations

import json
import os
import threading
from pathlib import Path

from chainstage.errors import NotFoundError, VersionConflictError
from chainstage.engine.session import Position, PositionKind, SessionState, Turn
from chainstage.graph.model import DialogueDesign
from chainstage.graph.serialization import deserialize_design, serialize_design


def _atomic_write(path: Path, data: bytes) -> None:
    tmp = path.with_suffix(path.suffix + ".tmp")
    with open(tmp, "wb") as handle:
        handle.write(data)
        handle.flush()
        os.fsync(handle.fileno())
    os.replace(tmp, path)


class _LockMap:
    def __init__(self):
        self._guard = threading.Lock()
        self._locks: dict[str, threading.Lock] = {}

    def get(self, key: str) -> threading.Lock:
        with self._guard:
            if key not in self._locks:
                self._locks[key] = threading.Lock()
            return self._locks[key]


class DesignStore:
    """Canonical design documents with a version counter per design."""

    def __init__(self, data_dir: Path):
        self.root = Path(data_dir) / "designs"
        self.root.mkdir(parents=True, exist_ok=True)
        self._locks = _LockMap()

    def _doc_path(self, design_id: str) -> Path:
        return self.root / f"{design_id}.json"

    def _meta_path(self, design_id: str) -> Path:
        return self.root / f"{design_id}.meta.json"

    def put(
        self, design: DialogueDesign, expected_version: int | None = None
    ) -> tuple[int, bool, bool]:
        """Store the canonical form; returns (version, created, changed).

        An identical document with a matching precondition is a no-op that
        keeps the current version.
        """
        canonical = serialize_design(design).encode("utf-8")
        with self._locks.get(design.design_id):
            doc_path = self._doc_path(design.design_id)
            exists = doc_path.exists()
            current = self._read_version(design.design_id) if exists else 0
            if expected_version is not None and expected_version != current:
                raise VersionConflictError(
                    f"design {design.design_id} is at version {current}, "
                    f"precondition was {expected_version}"
                )
            if exists and doc_path.read_bytes() == canonical:
                return current, False, False
            version = current + 1
            _atomic_write(doc_path, canonical)
            _atomic_write(
                self._meta_path(design.design_id),
                json.dumps({"version": version}).encode("utf-8"),
            )
            return version, not exists, True

    def _read_version(self, design_id: str) -> int:
        meta_path = self._meta_path(design_id)
        if not meta_path.exists():
            return 1  # document without meta: first version
        return int(json.loads(meta_path.read_text(encoding="utf-8"))["version"])

    def get_bytes(self, design_id: str) -> tuple[bytes, int]:
        with self._locks.get(design_id):
            doc_path = self._doc_path(design_id)
            if not doc_path.exists():
                raise NotFoundError(f"design {design_id} not found", code="DESIGN_NOT_FOUND")
            return doc_path.read_bytes(), self._read_version(design_id)

    def get(self, design_id: str) -> tuple[DialogueDesign, int]:
        raw, version = self.get_bytes(design_id)
        return deserialize_design(raw), version

    def delete(self, design_id: str) -> None:
        with self._locks.get(design_id):
            doc_path = self._doc_path(design_id)
            if not doc_path.exists():
                raise NotFoundError(f"design {design_id} not found", code="DESIGN_NOT_FOUND")
            doc_path.unlink()
            self._meta_path(design_id).unlink(missing_ok=True)

    def list(self) -> list[dict]:
        out = []
        for doc_path in sorted(self.root.glob("*.json")):
            if doc_path.name.endswith(".meta.json"):
                continue
            design = deserialize_design(doc_path.read_bytes())
            out.append(
                {
                    "design_id": design.design_id,
                    "title": design.title,
                    "version": self._read_version(design.design_id),
                    "updated_at": design.updated_at,
                }
            )
        return out


class SessionRecord:
    """A live session plus the design snapshot it was opened with."""

    def __init__(self, state: SessionState, design: DialogueDesign, design_version: int):
        self.state = state
        self.design = design
        self.design_version = design_version
        self.lock = threading.Lock()


class SessionStore:
    """Append-only JSONL event logs, replayed on first access after restart."""

    def __init__(self, data_dir: Path):
        self.root = Path(data_dir) / "sessions"
        self.root.mkdir(parents=True, exist_ok=True)
        self._guard = threading.Lock()
        self._records: dict[str, SessionRecord] = {}

    def _log_path(self, session_id: str) -> Path:
        return self.root / f"{session_id}.jsonl"

    def _append(self, session_id: str, event: dict) -> None:
        line = json.dumps(event, ensure_ascii=False) + "\n"
        with open(self._log_path(session_id), "a", encoding="utf-8") as handle:
            handle.write(line)
            handle.flush()
            os.fsync(handle.fileno())

    def create(self, record: SessionRecord) -> None:
        state = record.state
        with self._guard:
            self._records[state.session_id] = record
        self._append(
            state.session_id,
            {
                "event": "created",
                "session_id": state.session_id,
                "design_id": state.design_id,
                "design_version": record.design_version,
                "design_document": serialize_design(record.design),
                "created_at": state.created_at.isoformat(),
            },
        )

    def log_step(self, record: SessionRecord, mode: str, route: str | None) -> None:
        state = record.state
        self._append(
            state.session_id,
            {
                "event": "step",
                "turns": [t.to_dict() for t in state.transcript[-2:]],
                "position": state.position.to_dict(),
                "fallback_count": state.fallback_count,
                "mode": mode,
                "route": route,
            },
        )

    def log_reset(self, record: SessionRecord) -> None:
        self._append(record.state.session_id, {"event": "reset"})

    def get(self, session_id: str) -> SessionRecord:
        with self._guard:
            record = self._records.get(session_id)
        if record is not None:
            return record
        record = self._replay(session_id)
        with self._guard:
            return self._records.setdefault(session_id, record)

    def exists(self, session_id: str) -> bool:
        with self._guard:
            if session_id in self._records:
                return True
        return self._log_path(session_id).exists()

    def _replay(self, session_id: str) -> SessionRecord:
        log_path = self._log_path(session_id)
        if not log_path.exists():
            raise NotFoundError(f"session {session_id} not found", code="SESSION_NOT_FOUND")
        record: SessionRecord | None = None
        for line in log_path.read_text(encoding="utf-8").splitlines():
            if not line.strip():
                continue
            try:
                event = json.loads(line)
            except json.JSONDecodeError:
                break  # torn tail from a crash mid-append; committed prefix stands
            kind = event.get("event")
            if kind == "created":
                from datetime import datetime

                state = SessionState(
                    session_id=event["session_id"],
                    design_id=event["design_id"],
                    created_at=datetime.fromisoformat(event["created_at"]),
                )
                record = SessionRecord(
                    state,
                    deserialize_design(event["design_document"]),
                    event["design_version"],
                )
            elif kind == "step" and record is not None:
                record.state.transcript.extend(
                    Turn.from_dict(t) for t in event["turns"]
                )
                record.state.position = Position.from_dict(event["position"])
                record.state.fallback_count = event["fallback_count"]
            elif kind == "reset" and record is not None:
                record.state.transcript.clear()
                record.state.position = Position(PositionKind.AWAITING_COMMENT)
                record.state.fallback_count = 0
        if record is None:
            raise NotFoundError(
                f"session {session_id} log is unreadable", code="SESSION_NOT_FOUND"
            )
        return record
