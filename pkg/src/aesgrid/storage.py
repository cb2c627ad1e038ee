"""File-based persistence: study documents and append-only session logs.

Layout under the data directory:

    studies/<study-id>.json     study document (elements embedded)
    sessions/<session-id>.jsonl one JSON event per line, append-only
    elements/<element-id>.svg   verbatim SVG payloads of image elements

There is no database: study-scale data is tens of sessions, and flat files
archive cleanly for research audit.  Loading a session replays its log.
"""

from __future__ import annotations

import json
import threading
from pathlib import Path
from typing import Any, Iterator

from .model import canonical_json
from .rgt import Element, RgtError, Session, Study


class NotFoundError(RgtError):
    code = "not_found"


class Store:
    """Single-process store: files on disk plus live session objects.

    Mutations on one session are serialized by a per-session lock; reads of
    other sessions never block.
    """

    def __init__(self, data_dir: str | Path):
        self.root = Path(data_dir)
        self.studies_dir = self.root / "studies"
        self.sessions_dir = self.root / "sessions"
        self.elements_dir = self.root / "elements"
        for d in (self.studies_dir, self.sessions_dir, self.elements_dir):
            d.mkdir(parents=True, exist_ok=True)
        self._sessions: dict[str, Session] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._registry_lock = threading.Lock()
        self.idempotency: dict[str, Any] = {}

    # -- studies -------------------------------------------------------------

    def save_study(self, study: Study) -> None:
        path = self.studies_dir / f"{study.id}.json"
        path.write_text(json.dumps(study.to_dict(), indent=2, sort_keys=True))
        for element in study.elements:
            self._store_element_blob(element)

    def load_study(self, study_id: str) -> Study:
        path = self.studies_dir / f"{study_id}.json"
        if not path.exists():
            raise NotFoundError(f"unknown study {study_id}")
        return Study.from_dict(json.loads(path.read_text()))

    def list_studies(self) -> list[str]:
        return sorted(p.stem for p in self.studies_dir.glob("*.json"))

    # -- sessions ------------------------------------------------------------

    def _session_path(self, session_id: str) -> Path:
        return self.sessions_dir / f"{session_id}.jsonl"

    def _appender(self, session_id: str):
        path = self._session_path(session_id)

        def append(event: dict[str, Any]) -> None:
            with path.open("a") as fh:
                fh.write(canonical_json(event) + "\n")

        return append

    def start_session(self, study_id: str, participant: str, seed: int) -> Session:
        study = self.load_study(study_id)
        session = Session(study, participant, seed)
        existing = self._session_path(session.id)
        if session.id in self._sessions or existing.exists():
            return self.session(session.id)  # same (study, participant, seed)
        append = self._appender(session.id)
        for event in session.events:
            append(event)
        session._on_event = append
        with self._registry_lock:
            self._sessions[session.id] = session
            self._locks[session.id] = threading.Lock()
        return session

    def session(self, session_id: str) -> Session:
        with self._registry_lock:
            if session_id in self._sessions:
                return self._sessions[session_id]
        session = self._load_session(session_id)
        with self._registry_lock:
            self._sessions.setdefault(session_id, session)
            self._locks.setdefault(session_id, threading.Lock())
            return self._sessions[session_id]

    def _load_session(self, session_id: str) -> Session:
        path = self._session_path(session_id)
        if not path.exists():
            raise NotFoundError(f"unknown session {session_id}")
        events = [json.loads(line) for line in path.read_text().splitlines() if line]
        study = self.load_study(events[0]["study"])
        return Session.replay(study, events, on_event=self._appender(session_id))

    def list_sessions(self, study_id: str | None = None) -> list[str]:
        ids = sorted(p.stem for p in self.sessions_dir.glob("*.jsonl"))
        if study_id is None:
            return ids
        return [sid for sid in ids if self.session(sid).study.id == study_id]

    def session_lock(self, session_id: str) -> threading.Lock:
        with self._registry_lock:
            if session_id not in self._locks:
                self._locks[session_id] = threading.Lock()
            return self._locks[session_id]

    # -- elements ------------------------------------------------------------

    def _store_element_blob(self, element: Element) -> None:
        if element.kind == "image" and isinstance(element.payload, str):
            (self.elements_dir / f"{element.id}.svg").write_text(element.payload)

    def find_element(self, element_id: str) -> Element:
        """Look an element up across all studies and session pools."""
        for study_id in self.list_studies():
            for element in self.load_study(study_id).elements:
                if element.id == element_id:
                    return element
        for session_id in self.list_sessions():
            for element in self.session(session_id).elements:
                if element.id == element_id:
                    return element
        raise NotFoundError(f"unknown element {element_id}")

    def iter_exports(self, study_id: str | None = None) -> Iterator[dict[str, Any]]:
        for session_id in self.list_sessions(study_id):
            yield self.session(session_id).export()
