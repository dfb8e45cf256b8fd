import json

import pytest
from fastapi.testclient import TestClient

from lemlev.report import DEFAULT_PALETTE, annotate_document, emit_json, stats
from lemlev.service import MAX_BODY_BYTES, create_app
from lemlev.resources import ServiceConfig
from lemlev.textproc import LOOKUP_PROFILE, normalize, word_body

EXPECTED_COUNTS = {
    "prefixes": 18,
    "stems": 94,
    "suffixes": 20,
    "compat_ab": 24,
    "compat_bc": 14,
    "compat_ac": 21,
    "lexicon": 74,
    "freq": 73,
    "relations": 16,
}


@pytest.fixture(scope="module")
def client(res):
    with TestClient(create_app(resources=res)) as client:
        yield client


class TestHealth:
    def test_503_before_resources_load(self):
        # no context manager: lifespan never runs, state stays empty
        cold = TestClient(create_app())
        resp = cold.get("/v1/health")
        assert resp.status_code == 503
        assert resp.json() == {"status": "loading"}
        assert cold.post("/v1/analyze", json={"text": "كتب"}).status_code == 503

    def test_ok_with_counts(self, client):
        resp = client.get("/v1/health")
        assert resp.status_code == 200
        body = resp.json()
        assert body["status"] == "ok"
        assert body["resources"] == EXPECTED_COUNTS
        assert body["palette"] == DEFAULT_PALETTE
        assert body["profile"] == "default"

    def test_palette_override_from_config(self, res):
        config = ServiceConfig(palette={"5": "#000000"})
        with TestClient(create_app(config, resources=res)) as client:
            palette = client.get("/v1/health").json()["palette"]
        assert palette["5"] == "#000000"
        assert palette["1"] == DEFAULT_PALETTE["1"]

    def test_lifespan_loads_bundled_resources(self):
        with TestClient(create_app()) as client:
            body = client.get("/v1/health").json()
        assert body["status"] == "ok"
        assert body["resources"] == EXPECTED_COUNTS


class TestAnalyze:
    def test_matches_library_bytes(self, client, res):
        text = "#٥#كتب أحمد في بيتها"
        resp = client.post("/v1/analyze", json={"text": text})
        assert resp.status_code == 200
        doc = annotate_document(text, res.db, res.freq, res.lex)
        assert resp.content == emit_json(doc, stats(doc.annotations))

    def test_empty_text_ok(self, client):
        resp = client.post("/v1/analyze", json={"text": ""})
        assert resp.status_code == 200
        assert resp.json()["words"] == []

    def test_conservation(self, client, corpus_text):
        body = client.post("/v1/analyze", json={"text": corpus_text}).json()
        token_sum = sum(body["stats"]["tokens"].values())
        assert token_sum == len(body["words"]) == 200
        distinct = {
            normalize(word_body(word["surface"]), LOOKUP_PROFILE)
            for word in body["words"]
        }
        assert sum(body["stats"]["types"].values()) == len(distinct)

    def test_missing_text_field(self, client):
        assert client.post("/v1/analyze", json={}).status_code == 400
        assert client.post("/v1/analyze", json={"text": 42}).status_code == 400

    def test_invalid_json(self, client):
        resp = client.post(
            "/v1/analyze",
            content=b"not json{",
            headers={"content-type": "application/json"},
        )
        assert resp.status_code == 400

    def test_non_object_json(self, client):
        resp = client.post(
            "/v1/analyze",
            content=b'["text"]',
            headers={"content-type": "application/json"},
        )
        assert resp.status_code == 400

    def test_oversized_body(self, client):
        blob = json.dumps({"text": "a" * (MAX_BODY_BYTES + 10)}).encode()
        resp = client.post(
            "/v1/analyze", content=blob, headers={"content-type": "application/json"}
        )
        assert resp.status_code == 413

    def test_stateless_repeats(self, client):
        first = client.post("/v1/analyze", json={"text": "فردها كتب"}).content
        for _ in range(3):
            assert client.post("/v1/analyze", json={"text": "فردها كتب"}).content == first


class TestWord:
    def test_ambiguous_word_groups(self, client):
        body = client.get("/v1/word/فردها").json()
        assert body["surface"] == "فردها"
        assert body["n_analyses"] == 4
        levels = [g["level"] for g in body["groups"]]
        assert levels == ["2", "3", "4"]
        by_level = {g["level"]: g["analyses"] for g in body["groups"]}
        assert [(a["lemma"], a["pos"]) for a in by_level["2"]] == [
            ("رَدّ", "verb"),
            ("فَرْد", "noun"),
        ]
        assert [(a["lemma"], a["pos"]) for a in by_level["3"]] == [("رَدّ", "noun")]
        assert [(a["lemma"], a["pos"]) for a in by_level["4"]] == [("فَرَّد", "verb")]

    def test_suggestions_from_most_likely(self, client):
        body = client.get("/v1/word/انحلت").json()
        syn = body["suggestions"]["synonym"]
        assert [(s["lemma"], s["level"]) for s in syn] == [("ذابَ", "2"), ("تَفَكَّك", "3")]
        assert [s["lemma"] for s in body["suggestions"]["antonym"]] == ["اِتَّحَد"]
        assert body["suggestions"]["hypernym"] == []

    def test_oov_word(self, client):
        body = client.get("/v1/word/غثصثق").json()
        assert body["n_analyses"] == 0
        assert body["groups"] == []
        assert body["suggestions"] == {
            "synonym": [],
            "antonym": [],
            "hypernym": [],
            "hyponym": [],
        }

    def test_blank_surface_400(self, client):
        assert client.get("/v1/word/%20").status_code == 400

    def test_diacritized_surface(self, client):
        body = client.get("/v1/word/كَتَبَ").json()
        assert body["n_analyses"] >= 1
        assert any(
            a["lemma"] == "كَتَبَ" for g in body["groups"] for a in g["analyses"]
        )


class TestMarkup:
    def test_show(self, client):
        resp = client.post("/v1/markup", json={"text": "كتب أحمد", "mode": "show"})
        assert resp.status_code == 200
        body = resp.json()
        assert body["text"] == "#١#كتب أحمد"
        assert "spans" not in body

    def test_delete(self, client):
        body = client.post(
            "/v1/markup", json={"text": "#٥#كتب #٣#بيت", "mode": "delete"}
        ).json()
        assert body["text"] == "كتب بيت"

    def test_hide_spans_metadata(self, client):
        body = client.post(
            "/v1/markup", json={"text": "#١#كتب #٥#بيت", "mode": "hide"}
        ).json()
        # agreeing run vanished, disagreeing run stayed and got metadata
        assert body["text"] == "كتب #٥#بيت"
        assert [s["level"] for s in body["spans"]] == [5]

    def test_minimize_returns_spans(self, client):
        body = client.post(
            "/v1/markup", json={"text": "#٥#كتب", "mode": "minimize"}
        ).json()
        assert body["text"] == "#٥#كتب"
        (span,) = body["spans"]
        assert span["style"] == "minimized"
        assert span["text"] == "#٥#"
        assert body["text"][span["start"] : span["end"]] == "#٥#"

    def test_unknown_mode_400(self, client):
        resp = client.post("/v1/markup", json={"text": "كتب", "mode": "explode"})
        assert resp.status_code == 400
        assert client.post("/v1/markup", json={"text": "كتب"}).status_code == 400


class TestAssign:
    def test_by_occurrence(self, client):
        body = client.post(
            "/v1/assign",
            json={"text": "كتب بيت", "level": 4, "target": {"occurrence_index": 1}},
        ).json()
        assert body["text"] == "كتب #٤#بيت"

    def test_occurrence_out_of_range_404(self, client):
        resp = client.post(
            "/v1/assign",
            json={"text": "كتب", "level": 4, "target": {"occurrence_index": 5}},
        )
        assert resp.status_code == 404

    def test_by_surface_all(self, client):
        body = client.post(
            "/v1/assign",
            json={
                "text": "كتب بيت كتب",
                "level": 2,
                "target": {"surface": "كتب", "all": True},
            },
        ).json()
        assert body["text"] == "#٢#كتب بيت #٢#كتب"

    def test_bad_level_400(self, client):
        for level in (0, 6, "3", True, None, 2.5):
            resp = client.post(
                "/v1/assign",
                json={"text": "كتب", "level": level, "target": {"occurrence_index": 0}},
            )
            assert resp.status_code == 400, level

    def test_bad_target_400(self, client):
        for target in (None, "كتب", {}, {"surface": "كتب"}, {"surface": "كتب", "all": False}):
            resp = client.post(
                "/v1/assign", json={"text": "كتب", "level": 3, "target": target}
            )
            assert resp.status_code == 400, target

    def test_assign_then_analyze_round_trip(self, client):
        out = client.post(
            "/v1/assign",
            json={"text": "كتب", "level": 3, "target": {"occurrence_index": 0}},
        ).json()["text"]
        word = client.post("/v1/analyze", json={"text": out}).json()["words"][0]
        assert word["effective_level"] == "3"
        assert word["computed_level"] == "1"
