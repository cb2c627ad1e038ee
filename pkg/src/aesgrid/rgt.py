"""Repertory-grid interview engine.

A study fixes an element set (drawings, images, or labeled placeholders);
each session presents random triads of elements, captures bipolar constructs
(optionally laddered from an earlier construct), and stops after a
configurable number of consecutive triads that produced no new construct
(default 3).  Participants may contribute drawn elements mid-session; those
join the triad pool immediately.

Sessions are event-sourced: every mutation appends to an ordered event log,
and replaying the log reconstructs the identical session state, including
the triad-selection RNG.  There is no construct count limit, and no grid
rating step: the deliverable of a session is its construct list.

Construct novelty is decided by normalized pole comparison (case-folded,
trimmed, order-insensitive); the interviewer can override a false-new
synonym by marking it duplicate-of an earlier construct.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
import random
from typing import Any, Callable, Iterable

from .model import Drawing, content_hash, validate_drawing

DEFAULT_STRIKE_LIMIT = 3
DEFAULT_TRIAD_SIZE = 3

ORIGINS = ("generated", "participant_drawn", "placeholder")


class RgtError(Exception):
    """Engine error with a stable code for the API layer."""

    code = "bad_request"


class SessionFinishedError(RgtError):
    code = "session_finished"


class NoCurrentTriadError(RgtError):
    code = "no_current_triad"


class InvalidConstructError(RgtError):
    code = "invalid_construct"


class UnknownConstructError(RgtError):
    code = "unknown_construct"


class InvalidElementError(RgtError):
    code = "invalid_element"


class StudyError(RgtError):
    code = "invalid_study"


@dataclass(frozen=True)
class StudyConfig:
    strike_limit: int = DEFAULT_STRIKE_LIMIT
    triad_size: int = DEFAULT_TRIAD_SIZE

    def __post_init__(self) -> None:
        if self.strike_limit < 1:
            raise StudyError("strike_limit must be >= 1")
        if self.triad_size < 2:
            raise StudyError("triad_size must be >= 2")

    def to_dict(self) -> dict[str, Any]:
        return {"strike_limit": self.strike_limit, "triad_size": self.triad_size}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "StudyConfig":
        return cls(int(data["strike_limit"]), int(data["triad_size"]))


@dataclass(frozen=True)
class Element:
    """One interview stimulus: a drawing, an opaque image reference, or a
    labeled placeholder (e.g. an imagined ideal)."""

    id: str
    kind: str  # "drawing" | "image"
    payload: Any  # Drawing, or opaque image reference/markup string
    origin: str
    label: str = ""

    def to_dict(self) -> dict[str, Any]:
        payload = self.payload.to_dict() if isinstance(self.payload, Drawing) else self.payload
        return {
            "id": self.id,
            "kind": self.kind,
            "payload": payload,
            "origin": self.origin,
            "label": self.label,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Element":
        payload = data["payload"]
        if data["kind"] == "drawing":
            payload = Drawing.from_dict(payload)
        return cls(data["id"], data["kind"], payload, data["origin"], data.get("label", ""))


def make_element(payload: Drawing | str, origin: str = "generated", label: str = "") -> Element:
    """Build an element with a content-hash id; rejects malformed payloads."""
    if origin not in ORIGINS:
        raise InvalidElementError(f"unknown origin {origin!r}")
    if isinstance(payload, Drawing):
        violations = validate_drawing(payload)
        if violations:
            raise InvalidElementError("; ".join(violations))
        kind = "drawing"
        hashable: Any = payload.to_dict()
    elif isinstance(payload, str) and payload.strip():
        kind = "image"
        hashable = payload
    else:
        raise InvalidElementError("payload must be a Drawing or a non-empty image reference")
    element_id = content_hash({"kind": kind, "payload": hashable, "label": label, "origin": origin})
    return Element(element_id, kind, payload, origin, label)


@dataclass(frozen=True)
class Study:
    id: str
    elements: tuple[Element, ...]
    config: StudyConfig

    def element(self, element_id: str) -> Element:
        for e in self.elements:
            if e.id == element_id:
                return e
        raise InvalidElementError(f"unknown element {element_id}")

    def to_dict(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "elements": [e.to_dict() for e in self.elements],
            "config": self.config.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Study":
        return cls(
            data["id"],
            tuple(Element.from_dict(e) for e in data["elements"]),
            StudyConfig.from_dict(data["config"]),
        )


def create_study(
    elements: Iterable[Element | Drawing],
    config: StudyConfig = StudyConfig(),
) -> Study:
    """Assemble a study from elements (raw Drawings become generated elements).

    Ids are content hashes, so re-creating a study from identical inputs
    yields identical element and study ids.
    """
    built = tuple(
        e if isinstance(e, Element) else make_element(e, origin="generated")
        for e in elements
    )
    if len(built) < config.triad_size:
        raise StudyError(
            f"study needs at least {config.triad_size} elements, got {len(built)}"
        )
    ids = [e.id for e in built]
    if len(set(ids)) != len(ids):
        raise StudyError("duplicate element ids (identical content)")
    study_id = content_hash({"elements": ids, "config": config.to_dict()})
    return Study(study_id, built, config)


@dataclass(frozen=True)
class Construct:
    id: str
    session_id: str
    pole_a: str
    pole_b: str
    triad_id: str
    ladder_parent: str | None
    novelty: bool
    duplicate_of: str | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "session": self.session_id,
            "pole_a": self.pole_a,
            "pole_b": self.pole_b,
            "triad": self.triad_id,
            "ladder_parent": self.ladder_parent,
            "novelty": self.novelty,
            "duplicate_of": self.duplicate_of,
        }


def normalize_pole(text: str) -> str:
    return " ".join(text.split()).casefold()


def pole_pair_key(pole_a: str, pole_b: str) -> tuple[str, str]:
    a, b = normalize_pole(pole_a), normalize_pole(pole_b)
    return (a, b) if a <= b else (b, a)


@dataclass
class _Triad:
    id: str
    elements: tuple[str, ...]
    construct_ids: list[str] = field(default_factory=list)
    novel_count: int = 0
    completed: bool = False

    def to_dict(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "elements": list(self.elements),
            "construct_ids": list(self.construct_ids),
            "novel_count": self.novel_count,
            "completed": self.completed,
        }


class Session:
    """One participant's interview against a study.

    All mutations append to `events`; `Session.replay` rebuilds an identical
    session from the log.  An `on_event` callback (used by the persistence
    layer) observes appended events.
    """

    def __init__(
        self,
        study: Study,
        participant: str,
        seed: int,
        on_event: Callable[[dict[str, Any]], None] | None = None,
        _replaying: bool = False,
    ):
        self.study = study
        self.participant = participant
        self.seed = int(seed)
        self.id = content_hash(
            {"study": study.id, "participant": participant, "seed": self.seed}
        )
        self.state = "active"
        self.termination: str | None = None
        self.strikes = 0
        self.events: list[dict[str, Any]] = []
        self._on_event = on_event
        self._rng = random.Random(f"{self.id}:{self.seed}:triads")
        self._pool: list[Element] = list(study.elements)
        self._added: list[Element] = []
        self._shown: set[tuple[str, ...]] = set()
        self._triads: list[_Triad] = []
        self._current: _Triad | None = None
        self._constructs: list[Construct] = []
        self._constructs_by_id: dict[str, Construct] = {}
        self._seen_pairs: set[tuple[str, str]] = set()
        if not _replaying:
            self._emit(
                {
                    "event": "started",
                    "session": self.id,
                    "study": study.id,
                    "participant": participant,
                    "seed": self.seed,
                }
            )

    # -- event plumbing ----------------------------------------------------

    def _emit(self, event: dict[str, Any]) -> None:
        event["seq"] = len(self.events)
        self.events.append(event)
        if self._on_event is not None:
            self._on_event(event)

    # -- state guards ------------------------------------------------------

    def _require_active(self) -> None:
        if self.state != "active":
            raise SessionFinishedError(f"session {self.id} is finished")

    # -- element pool ------------------------------------------------------

    @property
    def elements(self) -> list[Element]:
        return list(self._pool)

    def element(self, element_id: str) -> Element:
        for e in self._pool:
            if e.id == element_id:
                return e
        raise InvalidElementError(f"unknown element {element_id}")

    def add_element(
        self,
        payload: Drawing | str,
        label: str = "",
        origin: str = "participant_drawn",
    ) -> str:
        """Add a participant-drawn (or placeholder) element to this session's
        pool; it becomes eligible for all subsequent triads."""
        self._require_active()
        element = make_element(payload, origin=origin, label=label)
        if any(e.id == element.id for e in self._pool):
            raise InvalidElementError("element already present (identical content)")
        self._pool.append(element)
        self._added.append(element)
        self._emit({"event": "element_added", "element": element.to_dict()})
        return element.id

    # -- triads ------------------------------------------------------------

    def current_triad(self) -> _Triad | None:
        return self._current

    def next_triad(self) -> tuple[str, ...] | None:
        """The current triad, drawing a fresh one if none is open.

        Returns None once the session is finished (the stop signal).  Triples
        never repeat until all combinations over the current pool have been
        shown.
        """
        if self.state != "active":
            return None
        if self._current is not None:
            return self._current.elements
        triple = self._draw_triple()
        triad = _Triad(id=f"t{len(self._triads):04d}", elements=triple)
        self._triads.append(triad)
        self._current = triad
        self._emit({"event": "triad", "triad": triad.id, "elements": list(triple)})
        return triple

    def _draw_triple(self) -> tuple[str, ...]:
        ids = sorted(e.id for e in self._pool)
        triples = list(combinations(ids, self.study.config.triad_size))
        unseen = [t for t in triples if t not in self._shown]
        if not unseen:
            self._shown.clear()
            unseen = triples
        choice = unseen[self._rng.randrange(len(unseen))]
        self._shown.add(choice)
        return choice

    # -- constructs ----------------------------------------------------------

    def record_construct(
        self,
        pole_a: str,
        pole_b: str,
        ladder_parent: str | None = None,
        duplicate_of: str | None = None,
    ) -> Construct:
        """Record a bipolar construct against the current triad.

        Novelty is true iff the normalized pole pair is unseen in this
        session and no duplicate-of override is given.
        """
        self._require_active()
        if self._current is None:
            raise NoCurrentTriadError("no triad is open; call next_triad first")
        pole_a = pole_a.strip()
        pole_b = pole_b.strip()
        if not pole_a or not pole_b:
            raise InvalidConstructError("poles must be non-empty")
        if normalize_pole(pole_a) == normalize_pole(pole_b):
            raise InvalidConstructError("poles must be distinct")
        if ladder_parent is not None and ladder_parent not in self._constructs_by_id:
            raise UnknownConstructError(f"unknown ladder parent {ladder_parent}")
        if duplicate_of is not None and duplicate_of not in self._constructs_by_id:
            raise UnknownConstructError(f"unknown duplicate-of target {duplicate_of}")
        key = pole_pair_key(pole_a, pole_b)
        novelty = key not in self._seen_pairs and duplicate_of is None
        self._seen_pairs.add(key)
        construct = Construct(
            id=f"c{len(self._constructs):04d}",
            session_id=self.id,
            pole_a=pole_a,
            pole_b=pole_b,
            triad_id=self._current.id,
            ladder_parent=ladder_parent,
            novelty=novelty,
            duplicate_of=duplicate_of,
        )
        self._constructs.append(construct)
        self._constructs_by_id[construct.id] = construct
        self._current.construct_ids.append(construct.id)
        if novelty:
            self._current.novel_count += 1
        self._emit({"event": "construct", **construct.to_dict()})
        return construct

    def construct(self, construct_id: str) -> Construct:
        try:
            return self._constructs_by_id[construct_id]
        except KeyError:
            raise UnknownConstructError(f"unknown construct {construct_id}") from None

    @property
    def constructs(self) -> list[Construct]:
        return list(self._constructs)

    def ladder_depth(self, construct_id: str) -> int:
        depth = 1
        current = self.construct(construct_id)
        while current.ladder_parent is not None:
            current = self.construct(current.ladder_parent)
            depth += 1
        return depth

    # -- stop criterion ------------------------------------------------------

    def complete_triad(self) -> str:
        """Close the current triad, update the strike counter, and return the
        session state.  A triad with zero novel constructs is a strike;
        reaching the strike limit finishes the session."""
        self._require_active()
        if self._current is None:
            raise NoCurrentTriadError("no triad is open")
        triad = self._current
        triad.completed = True
        self._current = None
        if triad.novel_count == 0:
            self.strikes += 1
        else:
            self.strikes = 0
        self._emit(
            {
                "event": "triad_completed",
                "triad": triad.id,
                "novel_count": triad.novel_count,
                "strikes": self.strikes,
            }
        )
        if self.strikes >= self.study.config.strike_limit:
            self._finish("stop_criterion")
        return self.state

    def terminate(self, reason: str = "interviewer") -> None:
        """Explicit early termination by the interviewer (flagged as such)."""
        self._require_active()
        self._current = None
        self._finish(reason)

    def _finish(self, reason: str) -> None:
        self.state = "finished"
        self.termination = reason
        self._emit({"event": "finished", "reason": reason})

    # -- progress / export ---------------------------------------------------

    @property
    def triads_completed(self) -> int:
        return sum(1 for t in self._triads if t.completed)

    def progress(self) -> dict[str, Any]:
        """Participant-safe progress: no strikes, no construct history."""
        return {"state": self.state, "triads_completed": self.triads_completed}

    def export(self) -> dict[str, Any]:
        """Complete, ordered session record (constructs with triad and ladder
        provenance, strike/termination state, and the full event log)."""
        return {
            "session": self.id,
            "study": self.study.id,
            "participant": self.participant,
            "seed": self.seed,
            "state": self.state,
            "termination": self.termination,
            "strikes": self.strikes,
            "triads": [t.to_dict() for t in self._triads],
            "constructs": [c.to_dict() for c in self._constructs],
            "added_elements": [e.to_dict() for e in self._added],
            "events": [dict(e) for e in self.events],
        }

    # -- reconstruction ------------------------------------------------------

    @classmethod
    def replay(
        cls,
        study: Study,
        events: list[dict[str, Any]],
        on_event: Callable[[dict[str, Any]], None] | None = None,
    ) -> "Session":
        """Rebuild a session from its event log.

        Triad draws re-run through the RNG and are checked against the log,
        so the rebuilt session continues exactly where the original left off.
        """
        if not events or events[0].get("event") != "started":
            raise RgtError("event log must begin with a started event")
        head = events[0]
        if head["study"] != study.id:
            raise RgtError("event log belongs to a different study")
        session = cls(
            study, head["participant"], head["seed"], on_event=None, _replaying=True
        )
        session.events.append(dict(head))
        for event in events[1:]:
            kind = event["event"]
            if kind == "triad":
                drawn = session.next_triad()
                if drawn is None or list(drawn) != list(event["elements"]):
                    raise RgtError(f"replay diverged at triad {event['triad']}")
            elif kind == "construct":
                session.record_construct(
                    event["pole_a"],
                    event["pole_b"],
                    ladder_parent=event.get("ladder_parent"),
                    duplicate_of=event.get("duplicate_of"),
                )
            elif kind == "triad_completed":
                session.complete_triad()
            elif kind == "element_added":
                element = Element.from_dict(event["element"])
                session.add_element(element.payload, element.label, element.origin)
            elif kind == "finished":
                if session.state == "active":  # interviewer termination
                    session.terminate(event["reason"])
            else:
                raise RgtError(f"unknown event type {kind!r}")
        # The replayed history must be byte-identical to the original log.
        session.events = [dict(e) for e in events]
        session._on_event = on_event
        return session

    @classmethod
    def import_export(cls, study: Study, export_doc: dict[str, Any]) -> "Session":
        return cls.replay(study, export_doc["events"])


def start_session(
    study: Study,
    participant: str,
    seed: int,
    on_event: Callable[[dict[str, Any]], None] | None = None,
) -> Session:
    return Session(study, participant, seed, on_event=on_event)


def add_participant_element(session: Session, payload: Drawing | str, label: str = "") -> str:
    """Append a participant-drawn element to the session's pool."""
    return session.add_element(payload, label=label, origin="participant_drawn")


def session_export(session: Session) -> dict[str, Any]:
    """The session's complete construct record with provenance."""
    return session.export()


class ParticipantView:
    """The participant-facing surface of a live session.

    Every read available here is construct-history-free: previously recorded
    constructs of the live session are never returned (participants who can
    see their earlier constructs start avoiding repetition or hunting for
    synonyms).  Submission acknowledgements carry only the new construct id.
    """

    def __init__(self, session: Session):
        self._session = session

    def current_triad(self) -> dict[str, Any] | None:
        triple = self._session.next_triad()
        if triple is None:
            return None
        return {
            "triad": self._session.current_triad().id,  # type: ignore[union-attr]
            "elements": list(triple),
        }

    def submit_construct(
        self,
        pole_a: str,
        pole_b: str,
        ladder_parent: str | None = None,
        duplicate_of: str | None = None,
    ) -> dict[str, Any]:
        construct = self._session.record_construct(
            pole_a, pole_b, ladder_parent=ladder_parent, duplicate_of=duplicate_of
        )
        return {"construct": construct.id}

    def complete_triad(self) -> dict[str, Any]:
        self._session.complete_triad()
        return self._session.progress()

    def add_drawn_element(self, drawing: Drawing, label: str = "") -> dict[str, Any]:
        element_id = self._session.add_element(drawing, label=label)
        return {"element": element_id}

    def progress(self) -> dict[str, Any]:
        return self._session.progress()
