import threading

import pytest
from fastapi.testclient import TestClient

from beliefseq.api import SessionStore, create_app
from beliefseq.formulas import parse
from beliefseq.sequences import BeliefSequence, QueryContext
from beliefseq.wire import query_payload


@pytest.fixture()
def client():
    app = create_app(SessionStore())
    with TestClient(app) as c:
        yield c


def make_session(client, formulas=(), **kwargs):
    body = dict(kwargs)
    response = client.post("/sessions", json=body)
    assert response.status_code == 201
    sid = response.json()["id"]
    for formula in formulas:
        assert client.post(f"/sessions/{sid}/revise", json={"formula": formula}).status_code == 200
    return sid


def test_create_and_get_session(client):
    sid = make_session(client, k=2, mode="strict")
    data = client.get(f"/sessions/{sid}").json()
    assert data["k"] == 2
    assert data["mode"] == "strict"
    assert data["sequence"] == []
    assert data["length"] == 0
    assert data["created"] <= data["updated"]


def test_distinct_ids(client):
    assert make_session(client) != make_session(client)


def test_create_validates_inputs(client):
    assert client.post("/sessions", json={"mode": "bold"}).status_code == 400
    assert client.post("/sessions", json={"k": -1}).status_code == 400
    bad = client.post("/sessions", json={"sequence": "p &\n"})
    assert bad.status_code == 400
    assert bad.json()["detail"]["position"] == 3


def test_revise_returns_new_index(client):
    sid = make_session(client)
    first = client.post(f"/sessions/{sid}/revise", json={"formula": "p"}).json()
    second = client.post(f"/sessions/{sid}/revise", json={"formula": "~p"}).json()
    assert first["index"] == 0
    assert second["index"] == 1
    assert [e["formula"] for e in second["sequence"]] == ["p", "~p"]


def test_revise_parse_error_keeps_state(client):
    sid = make_session(client, ["p"])
    response = client.post(f"/sessions/{sid}/revise", json={"formula": "p &"})
    assert response.status_code == 400
    assert response.json()["detail"]["position"] == 3
    assert client.get(f"/sessions/{sid}").json()["length"] == 1


def test_unknown_session_404(client):
    for call in [
        lambda: client.get("/sessions/nope"),
        lambda: client.post("/sessions/nope/revise", json={"formula": "p"}),
        lambda: client.post("/sessions/nope/query", json={"formula": "p"}),
        lambda: client.get("/sessions/nope/relevance", params={"formula": "p"}),
        lambda: client.post("/sessions/nope/pop"),
        lambda: client.post("/sessions/nope/reset"),
        lambda: client.get("/sessions/nope/export"),
    ]:
        assert call().status_code == 404


def test_query_restoration_battery(client):
    sid = make_session(client, ["p", "~p & ~q", "p | q"])
    data = client.post(f"/sessions/{sid}/query", json={"formula": "p"}).json()
    assert data["answer"] == "yes"
    assert data["k_used"] == 0
    assert data["mode"] == "liberal"
    assert [g["formula"] for g in data["gamma"]] == ["p | q", "p"]
    assert [t["decision"] for t in data["trace"]] == [
        "accepted",
        "rejected_inconsistent",
        "accepted",
    ]


def test_query_matches_library_payload(client):
    formulas = ["p & q", "r & ~q", "q | r"]
    sid = make_session(client, formulas)
    seq = BeliefSequence.from_formulas(parse(f) for f in formulas)
    for text, k in [("p", 0), ("p", 1), ("r", 0), ("~q", 2)]:
        via_api = client.post(
            f"/sessions/{sid}/query", json={"formula": text, "k": k}
        ).json()
        direct = query_payload(seq, QueryContext(parse(text), k=k))
        assert via_api == direct


def test_query_uses_session_defaults_and_overrides(client):
    sid = make_session(client, ["p & q", "r & ~q"], k=1)
    assert client.post(f"/sessions/{sid}/query", json={"formula": "p"}).json()["k_used"] == 1
    forced = client.post(f"/sessions/{sid}/query", json={"formula": "p", "k": 0}).json()
    assert forced["k_used"] == 0
    strict = client.post(
        f"/sessions/{sid}/query", json={"formula": "p", "mode": "strict"}
    ).json()
    assert strict["mode"] == "strict"


def test_query_language_override(client):
    sid = make_session(client, ["~p", "q", "p | ~q"])
    literal = client.post(
        f"/sessions/{sid}/query", json={"formula": "(p | q) & (p | ~q)"}
    ).json()
    widened = client.post(
        f"/sessions/{sid}/query",
        json={"formula": "(p | q) & (p | ~q)", "query_language": ["p", "q"]},
    ).json()
    assert literal["answer"] == "no"
    assert widened["answer"] == "yes"
    shrunk = client.post(
        f"/sessions/{sid}/query", json={"formula": "p & q", "query_language": ["p"]}
    )
    assert shrunk.status_code == 400


def test_query_is_pure(client):
    sid = make_session(client, ["p", "~p & ~q", "p | q"])
    before = client.get(f"/sessions/{sid}/export").text
    first = client.post(f"/sessions/{sid}/query", json={"formula": "p"}).json()
    client.get(f"/sessions/{sid}/relevance", params={"formula": "p"})
    second = client.post(f"/sessions/{sid}/query", json={"formula": "p"}).json()
    assert first == second
    assert client.get(f"/sessions/{sid}/export").text == before


def test_query_invalid_mode_and_k(client):
    sid = make_session(client)
    assert (
        client.post(f"/sessions/{sid}/query", json={"formula": "p", "mode": "bold"}).status_code
        == 400
    )
    assert (
        client.post(f"/sessions/{sid}/query", json={"formula": "p", "k": -2}).status_code
        == 400
    )


def test_relevance_endpoint(client):
    sid = make_session(client, ["p & q", "r & ~q"])
    data = client.get(f"/sessions/{sid}/relevance", params={"formula": "p"}).json()
    assert data["formula"] == "p"
    assert [(e["index"], e["rel"]) for e in data["profile"]] == [(0, 0), (1, 1)]
    assert data["edges"] == [[0, 1]]
    assert data["saturation_level"] == 1

    empty = make_session(client)
    data = client.get(f"/sessions/{empty}/relevance", params={"formula": "p"}).json()
    assert data["profile"] == [] and data["edges"] == []


def test_relevance_infinity_serialization(client):
    sid = make_session(client, ["p"])
    data = client.get(f"/sessions/{sid}/relevance", params={"formula": "true"}).json()
    assert data["profile"] == [{"index": 0, "formula": "p", "rel": "infinity"}]


def test_pop_and_reset(client):
    sid = make_session(client, ["p", "q"])
    assert client.post(f"/sessions/{sid}/pop").json()["length"] == 1
    assert client.post(f"/sessions/{sid}/reset").json()["length"] == 0
    assert client.post(f"/sessions/{sid}/pop").status_code == 400


def test_export_format(client):
    sid = make_session(client, ["p", "~p & ~q"])
    response = client.get(f"/sessions/{sid}/export")
    assert response.headers["content-type"].startswith("text/plain")
    assert response.text == "p\n~p & ~q\n"


def test_create_with_sequence_text(client):
    response = client.post(
        "/sessions", json={"sequence": "# saved earlier\np & q\nr & ~q\n"}
    )
    assert response.status_code == 201
    sid = response.json()["id"]
    assert [e["formula"] for e in response.json()["sequence"]] == ["p & q", "r & ~q"]
    answer = client.post(f"/sessions/{sid}/query", json={"formula": "r"}).json()
    assert answer["answer"] == "yes"


def test_import_export_round_trip(client):
    sid = make_session(client, ["p", "~p & ~q", "p | q"])
    exported = client.get(f"/sessions/{sid}/export").text
    clone = client.post("/sessions", json={"sequence": exported}).json()
    assert [e["formula"] for e in clone["sequence"]] == [
        "p",
        "~p & ~q",
        "p | q",
    ]


def test_persistence_replay_byte_identical(tmp_path):
    store = SessionStore(tmp_path)
    with TestClient(create_app(store)) as c:
        sid = make_session(c, ["p", "q", "p & q"], k=1, mode="strict")
        c.post(f"/sessions/{sid}/pop")
        c.post(f"/sessions/{sid}/revise", json={"formula": "~r"})
        other = make_session(c, ["p | q"])
        c.post(f"/sessions/{other}/reset")
        c.post(f"/sessions/{other}/revise", json={"formula": "~p"})
        exported = c.get(f"/sessions/{sid}/export").text
        other_exported = c.get(f"/sessions/{other}/export").text

    # simulated crash: fresh store over the same directory
    revived = SessionStore(tmp_path)
    with TestClient(create_app(revived)) as c:
        assert c.get(f"/sessions/{sid}/export").text == exported
        assert c.get(f"/sessions/{other}/export").text == other_exported
        session = c.get(f"/sessions/{sid}").json()
        assert session["k"] == 1 and session["mode"] == "strict"
        # the revived session keeps working
        assert (
            c.post(f"/sessions/{sid}/revise", json={"formula": "r"}).status_code == 200
        )


def test_corrupt_log_rejected(tmp_path):
    (tmp_path / "bad.log").write_text("revise p\n")
    with pytest.raises(ValueError):
        SessionStore(tmp_path)


def test_concurrent_revisions_all_land(client):
    sid = make_session(client)
    errors = []

    def hammer(formula):
        app_client = client  # shared: per-session lock must serialize writes
        for _ in range(20):
            response = app_client.post(f"/sessions/{sid}/revise", json={"formula": formula})
            if response.status_code != 200:
                errors.append(response.status_code)

    threads = [threading.Thread(target=hammer, args=(text,)) for text in ("p", "q", "r")]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert not errors
    data = client.get(f"/sessions/{sid}").json()
    assert data["length"] == 60
    assert [e["index"] for e in data["sequence"]] == list(range(60))
