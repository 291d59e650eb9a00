"""HTTP/JSON session service.

Sessions are named belief sequences with per-session defaults for k and
mode. Mutations (revise, pop, reset) are serialized per session and, when a
store directory is configured, appended to a per-session operation log; on
restart the logs replay to the same state, so an export before a crash and
after a restart are byte-identical. Queries are pure reads.
"""

from __future__ import annotations

import threading
import uuid
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from fastapi import FastAPI, HTTPException
from fastapi.responses import PlainTextResponse
from pydantic import BaseModel

from .formulas import Formula, ParseError, parse, render
from .sequences import (
    LIBERAL,
    STRICT,
    BeliefSequence,
    QueryContext,
    sequence_from_text,
    sequence_to_text,
)
from .wire import query_payload, relevance_payload, sequence_json


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


@dataclass
class Session:
    id: str
    seq: BeliefSequence
    k: int
    mode: str
    created: str
    updated: str
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def view(self) -> dict:
        return {
            "id": self.id,
            "k": self.k,
            "mode": self.mode,
            "created": self.created,
            "updated": self.updated,
            "length": len(self.seq),
            "sequence": sequence_json(self.seq),
        }


class SessionStore:
    """In-memory session map, optionally backed by append-only logs.

    The log format is one operation per line: a `defaults k=N mode=M`
    header, then `revise <formula>`, `pop`, or `reset` in arrival order.
    """

    def __init__(self, root: Path | str | None = None) -> None:
        self.root = Path(root) if root is not None else None
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()
        if self.root is not None:
            self.root.mkdir(parents=True, exist_ok=True)
            for log in sorted(self.root.glob("*.log")):
                session = self._replay(log)
                self._sessions[session.id] = session

    def _replay(self, log: Path) -> Session:
        lines = log.read_text().splitlines()
        if not lines or not lines[0].startswith("defaults "):
            raise ValueError(f"corrupt session log {log}: missing defaults header")
        header = lines[0].split()
        fields = dict(part.split("=", 1) for part in header[1:])
        k = int(fields["k"])
        mode = fields["mode"]
        if mode not in (LIBERAL, STRICT):
            raise ValueError(f"corrupt session log {log}: bad mode {mode!r}")
        seq = BeliefSequence()
        for line in lines[1:]:
            if line.startswith("revise "):
                seq = seq.revise(parse(line[len("revise "):]))
            elif line == "pop":
                seq = seq.pop()
            elif line == "reset":
                seq = BeliefSequence()
            elif line.strip():
                raise ValueError(f"corrupt session log {log}: {line!r}")
        now = _now()
        return Session(id=log.stem, seq=seq, k=k, mode=mode, created=now, updated=now)

    def _append(self, session: Session, line: str) -> None:
        if self.root is None:
            return
        with (self.root / f"{session.id}.log").open("a") as handle:
            handle.write(line + "\n")

    def create(self, k: int = 0, mode: str = LIBERAL, sequence_text: str | None = None) -> Session:
        if mode not in (LIBERAL, STRICT):
            raise ValueError(f"unknown mode {mode!r}")
        if k < 0:
            raise ValueError("k must be >= 0")
        seq = sequence_from_text(sequence_text) if sequence_text else BeliefSequence()
        now = _now()
        session = Session(
            id=uuid.uuid4().hex, seq=seq, k=k, mode=mode, created=now, updated=now
        )
        with self._lock:
            self._sessions[session.id] = session
        self._append(session, f"defaults k={k} mode={mode}")
        for formula in seq.formulas():
            self._append(session, f"revise {render(formula)}")
        return session

    def get(self, session_id: str) -> Session:
        with self._lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise KeyError(session_id)
        return session

    def ids(self) -> list[str]:
        with self._lock:
            return sorted(self._sessions)

    def revise(self, session_id: str, formula: Formula) -> tuple[Session, int]:
        session = self.get(session_id)
        with session.lock:
            session.seq = session.seq.revise(formula)
            session.updated = _now()
            index = session.seq.entries[-1][0]
            self._append(session, f"revise {render(formula)}")
        return session, index

    def pop(self, session_id: str) -> Session:
        session = self.get(session_id)
        with session.lock:
            session.seq = session.seq.pop()
            session.updated = _now()
            self._append(session, "pop")
        return session

    def reset(self, session_id: str) -> Session:
        session = self.get(session_id)
        with session.lock:
            session.seq = BeliefSequence()
            session.updated = _now()
            self._append(session, "reset")
        return session


class CreateBody(BaseModel):
    k: int = 0
    mode: str = LIBERAL
    sequence: str | None = None


class ReviseBody(BaseModel):
    formula: str


class QueryBody(BaseModel):
    formula: str
    k: int | None = None
    mode: str | None = None
    query_language: list[str] | None = None


def _bad_request(message: str, position: int | None = None) -> HTTPException:
    detail: dict = {"message": message}
    if position is not None:
        detail["position"] = position
    return HTTPException(status_code=400, detail=detail)


def _parse(text: str) -> Formula:
    try:
        return parse(text)
    except ParseError as error:
        raise _bad_request(str(error), error.position) from error


def create_app(store: SessionStore | None = None) -> FastAPI:
    store = store if store is not None else SessionStore()
    app = FastAPI(title="beliefseq sessions")
    app.state.store = store

    def fetch(session_id: str) -> Session:
        try:
            return store.get(session_id)
        except KeyError:
            raise HTTPException(status_code=404, detail={"message": "unknown session"})

    @app.post("/sessions", status_code=201)
    def create_session(body: CreateBody) -> dict:
        try:
            session = store.create(body.k, body.mode, body.sequence)
        except ParseError as error:
            raise _bad_request(str(error), error.position) from error
        except ValueError as error:
            raise _bad_request(str(error)) from error
        return session.view()

    @app.get("/sessions")
    def list_sessions() -> dict:
        return {"sessions": store.ids()}

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str) -> dict:
        return fetch(session_id).view()

    @app.post("/sessions/{session_id}/revise")
    def revise(session_id: str, body: ReviseBody) -> dict:
        fetch(session_id)
        formula = _parse(body.formula)
        session, index = store.revise(session_id, formula)
        return {"index": index, **session.view()}

    @app.post("/sessions/{session_id}/query")
    def query(session_id: str, body: QueryBody) -> dict:
        session = fetch(session_id)
        formula = _parse(body.formula)
        try:
            ctx = QueryContext(
                formula,
                k=body.k if body.k is not None else session.k,
                mode=body.mode if body.mode is not None else session.mode,
                query_language=(
                    frozenset(body.query_language)
                    if body.query_language is not None
                    else None
                ),
            )
        except ValueError as error:
            raise _bad_request(str(error)) from error
        return query_payload(session.seq, ctx)

    @app.get("/sessions/{session_id}/relevance")
    def relevance(session_id: str, formula: str) -> dict:
        session = fetch(session_id)
        return relevance_payload(session.seq, _parse(formula))

    @app.post("/sessions/{session_id}/pop")
    def pop(session_id: str) -> dict:
        session = fetch(session_id)
        try:
            session = store.pop(session_id)
        except ValueError as error:
            raise _bad_request(str(error)) from error
        return session.view()

    @app.post("/sessions/{session_id}/reset")
    def reset(session_id: str) -> dict:
        fetch(session_id)
        return store.reset(session_id).view()

    @app.get("/sessions/{session_id}/export")
    def export(session_id: str) -> PlainTextResponse:
        session = fetch(session_id)
        return PlainTextResponse(sequence_to_text(session.seq))

    return app
