"""Session-oriented HTTP advisor around the resumable strategy engine.

A session holds one live search: the service recommends the next query
node, accepts observed yes/no answers, and previews both hypothetical
next states without committing.  Sessions persist as JSON documents in a
state directory (or in memory with ``--ephemeral``); a session document
stores the poset, the budget, and the answer history, and the search
state is rebuilt by replaying that history through the step engine.

HTTP+JSON endpoints::

    POST   /sessions                 {"poset": {...}, "k": int} -> 201
    GET    /sessions/{id}            state + transcript
    POST   /sessions/{id}/answer     {"node": int, "positive": bool}
    GET    /sessions/{id}/whatif     {"yes": preview, "no": preview}
    DELETE /sessions/{id}

Environment: ADVISOR_PORT (default 8787), ADVISOR_STATE_DIR, and
ADVISOR_STATIC_DIR to also serve a directory of static UI files.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import threading
import time
import uuid
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .errors import IdealSearchError, InvalidParameter, NotPointed
from .oracle import Transcript
from .poset import Poset
from .strategy import (
    SearchState,
    apply_answer,
    next_decision,
    resolve_conclusion,
    start_search,
)


class AdvisorError(Exception):
    def __init__(self, status: int, kind: str, message: str):
        super().__init__(message)
        self.status = status
        self.kind = kind


def _now() -> str:
    return time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())


class Session:
    """A persisted search: poset, budget, and the committed answers."""

    def __init__(self, sid: str, poset_obj: dict, k: int, created: str | None = None):
        self.id = sid
        self.poset_obj = poset_obj
        self.poset = Poset.from_json_obj(poset_obj)
        self.k = k
        self.answers: list[tuple[int, bool]] = []
        self.created = created or _now()
        self.updated = self.created
        self.lock = threading.Lock()

    def state(self) -> SearchState:
        state = start_search(self.poset, self.k)
        for node, positive in self.answers:
            state = apply_answer(state, node, positive)
        return state

    def to_doc(self) -> dict:
        return {
            "id": self.id,
            "poset": self.poset_obj,
            "k": self.k,
            "answers": [[node, positive] for node, positive in self.answers],
            "created": self.created,
            "updated": self.updated,
        }

    @classmethod
    def from_doc(cls, doc: dict) -> "Session":
        s = cls(doc["id"], doc["poset"], int(doc["k"]), created=doc.get("created"))
        s.answers = [(int(n), bool(b)) for n, b in doc.get("answers", [])]
        s.updated = doc.get("updated", s.created)
        return s


def _state_payload(session: Session, state: SearchState) -> dict:
    concluded = state.is_terminal()
    result = resolve_conclusion(state) if concluded else None
    transcript = Transcript(k0=session.k, entries=state.entries, result=result)
    if concluded:
        # resolve against the original poset; the raw flow block could
        # disagree after an order-inconsistent human answer
        decision = {"kind": "conclude", "result": result.to_json_obj()}
    else:
        decision = next_decision(state).to_json_obj()
    return {
        "id": session.id,
        "status": "concluded" if concluded else "active",
        "k0": session.k,
        "budget": state.budget,
        "alive": list(state.alive_nodes()),
        "last_positive": state.last_positive,
        "decision": decision,
        "transcript": transcript.to_json_obj(),
        "created": session.created,
        "updated": session.updated,
    }


def _preview(session: Session, state: SearchState, answer: bool) -> dict:
    node = next_decision(state).node
    hypothetical = apply_answer(state, node, answer)
    alive = list(hypothetical.alive_nodes())
    height = 0
    if alive:
        _, height, _, _, _ = hypothetical.original.masked_profile(
            hypothetical.alive, hypothetical.ordered
        )
    if hypothetical.is_terminal():
        decision = {
            "kind": "conclude",
            "result": resolve_conclusion(hypothetical).to_json_obj(),
        }
    else:
        decision = next_decision(hypothetical).to_json_obj()
    return {
        "alive": alive,
        "height": height,
        "budget": hypothetical.budget,
        "decision": decision,
    }


class SessionStore:
    """Thread-safe session registry with optional directory persistence."""

    def __init__(self, state_dir: str | None = None):
        self.state_dir = state_dir
        self.sessions: dict[str, Session] = {}
        self.lock = threading.Lock()
        if state_dir:
            os.makedirs(state_dir, exist_ok=True)

    def _persist(self, session: Session) -> None:
        if not self.state_dir:
            return
        path = os.path.join(self.state_dir, f"{session.id}.json")
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(session.to_doc(), fh, sort_keys=True)

    def _drop_persisted(self, sid: str) -> None:
        if not self.state_dir:
            return
        path = os.path.join(self.state_dir, f"{sid}.json")
        if os.path.exists(path):
            os.remove(path)

    def _load(self, sid: str) -> Session | None:
        if not self.state_dir or not re.fullmatch(r"[0-9a-f]{32}", sid):
            return None
        path = os.path.join(self.state_dir, f"{sid}.json")
        if not os.path.exists(path):
            return None
        with open(path, "r", encoding="utf-8") as fh:
            return Session.from_doc(json.load(fh))

    def create(self, poset_obj, k) -> dict:
        if not isinstance(poset_obj, dict):
            raise AdvisorError(400, "invalid_poset", "poset must be a JSON object")
        if not isinstance(k, int) or isinstance(k, bool) or k < 1:
            raise AdvisorError(400, "bad_k", "k must be an integer >= 1")
        try:
            session = Session(uuid.uuid4().hex, poset_obj, k)
            state = session.state()
        except NotPointed as exc:
            raise AdvisorError(400, "not_pointed", str(exc))
        except InvalidParameter as exc:
            raise AdvisorError(400, "bad_k", str(exc))
        except (IdealSearchError, ValueError, KeyError, TypeError) as exc:
            raise AdvisorError(400, "invalid_poset", str(exc))
        with self.lock:
            self.sessions[session.id] = session
        self._persist(session)
        return _state_payload(session, state)

    def _get(self, sid: str) -> Session:
        with self.lock:
            session = self.sessions.get(sid)
            if session is None:
                session = self._load(sid)
                if session is not None:
                    self.sessions[sid] = session
        if session is None:
            raise AdvisorError(404, "unknown_session", f"no session {sid}")
        return session

    def get_payload(self, sid: str) -> dict:
        session = self._get(sid)
        with session.lock:
            return _state_payload(session, session.state())

    def answer(self, sid: str, node, positive) -> dict:
        session = self._get(sid)
        if not isinstance(node, int) or isinstance(node, bool):
            raise AdvisorError(400, "bad_request", "node must be an integer")
        if not isinstance(positive, bool):
            raise AdvisorError(400, "bad_request", "positive must be a boolean")
        with session.lock:
            state = session.state()
            if state.is_terminal():
                raise AdvisorError(410, "session_concluded", "session already concluded")
            pending = next_decision(state)
            if pending.node != node:
                raise AdvisorError(
                    409, "node_mismatch",
                    f"pending query is node {pending.node}, not {node}",
                )
            state = apply_answer(state, node, positive)
            session.answers.append((node, positive))
            session.updated = _now()
            self._persist(session)
            return _state_payload(session, state)

    def whatif(self, sid: str) -> dict:
        session = self._get(sid)
        with session.lock:
            state = session.state()
            if state.is_terminal():
                raise AdvisorError(410, "session_concluded", "session already concluded")
            return {
                "yes": _preview(session, state, True),
                "no": _preview(session, state, False),
            }

    def delete(self, sid: str) -> None:
        self._get(sid)
        with self.lock:
            self.sessions.pop(sid, None)
        self._drop_persisted(sid)


_SESSION_RE = re.compile(r"^/sessions/([0-9a-f]{32})$")
_ANSWER_RE = re.compile(r"^/sessions/([0-9a-f]{32})/answer$")
_WHATIF_RE = re.compile(r"^/sessions/([0-9a-f]{32})/whatif$")

_CONTENT_TYPES = {
    ".html": "text/html; charset=utf-8",
    ".js": "text/javascript; charset=utf-8",
    ".css": "text/css; charset=utf-8",
    ".json": "application/json",
    ".svg": "image/svg+xml",
    ".map": "application/json",
}


class AdvisorHandler(BaseHTTPRequestHandler):
    server_version = "idealsearch-advisor/0.1"

    @property
    def store(self) -> SessionStore:
        return self.server.store  # type: ignore[attr-defined]

    def log_message(self, fmt, *args):  # quiet by default
        if os.environ.get("ADVISOR_LOG"):
            super().log_message(fmt, *args)

    def _send_json(self, status: int, obj) -> None:
        body = json.dumps(obj, sort_keys=True, separators=(",", ":")).encode()
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def _read_json(self):
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b""
        if not raw:
            raise AdvisorError(400, "bad_request", "missing request body")
        try:
            return json.loads(raw)
        except json.JSONDecodeError as exc:
            raise AdvisorError(400, "bad_request", f"invalid JSON: {exc}")

    def _dispatch(self, method: str) -> None:
        try:
            self._route(method)
        except AdvisorError as exc:
            self._send_json(exc.status, {"error": exc.kind, "message": str(exc)})
        except Exception as exc:  # pragma: no cover - defensive
            self._send_json(500, {"error": "internal", "message": str(exc)})

    def _route(self, method: str) -> None:
        path = self.path.split("?", 1)[0]
        if method == "POST" and path == "/sessions":
            body = self._read_json()
            payload = self.store.create(body.get("poset"), body.get("k"))
            self._send_json(201, payload)
            return
        m = _ANSWER_RE.match(path)
        if m and method == "POST":
            body = self._read_json()
            payload = self.store.answer(m.group(1), body.get("node"), body.get("positive"))
            self._send_json(200, payload)
            return
        m = _WHATIF_RE.match(path)
        if m and method == "GET":
            self._send_json(200, self.store.whatif(m.group(1)))
            return
        m = _SESSION_RE.match(path)
        if m:
            if method == "GET":
                self._send_json(200, self.store.get_payload(m.group(1)))
                return
            if method == "DELETE":
                self.store.delete(m.group(1))
                self.send_response(204)
                self.send_header("Content-Length", "0")
                self.end_headers()
                return
        if method == "GET" and self._serve_static(path):
            return
        raise AdvisorError(404, "not_found", f"{method} {path}")

    def _serve_static(self, path: str) -> bool:
        root = getattr(self.server, "static_dir", None)
        if not root:
            return False
        rel = path.lstrip("/") or "index.html"
        full = os.path.realpath(os.path.join(root, rel))
        if not full.startswith(os.path.realpath(root) + os.sep) and full != os.path.realpath(
            os.path.join(root, "index.html")
        ):
            return False
        if os.path.isdir(full):
            full = os.path.join(full, "index.html")
        if not os.path.isfile(full):
            return False
        ext = os.path.splitext(full)[1]
        with open(full, "rb") as fh:
            body = fh.read()
        self.send_response(200)
        self.send_header("Content-Type", _CONTENT_TYPES.get(ext, "application/octet-stream"))
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)
        return True

    def do_GET(self):
        self._dispatch("GET")

    def do_POST(self):
        self._dispatch("POST")

    def do_DELETE(self):
        self._dispatch("DELETE")


def make_server(
    port: int = 8787, state_dir: str | None = None, static_dir: str | None = None
) -> ThreadingHTTPServer:
    server = ThreadingHTTPServer(("127.0.0.1", port), AdvisorHandler)
    server.store = SessionStore(state_dir)  # type: ignore[attr-defined]
    server.static_dir = static_dir  # type: ignore[attr-defined]
    return server


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description="Hidden-ideal search advisor service.")
    parser.add_argument("--port", type=int, default=None)
    parser.add_argument("--state-dir", default=None)
    parser.add_argument("--static-dir", default=None)
    parser.add_argument(
        "--ephemeral", action="store_true", help="keep sessions in memory only"
    )
    args = parser.parse_args(argv)
    port = args.port if args.port is not None else int(os.environ.get("ADVISOR_PORT", "8787"))
    state_dir = None if args.ephemeral else (
        args.state_dir or os.environ.get("ADVISOR_STATE_DIR") or None
    )
    static_dir = args.static_dir or os.environ.get("ADVISOR_STATIC_DIR") or None
    server = make_server(port, state_dir, static_dir)
    host, bound_port = server.server_address[:2]
    print(f"advisor listening on http://{host}:{bound_port}", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0


if __name__ == "__main__":
    sys.exit(main())
