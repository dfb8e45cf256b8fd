"""Regenerate tests/fixtures.json from the running engine.

The UI test suite replays these canned service responses instead of
talking to a live server, so the fixtures must come from the real
endpoints. Run from frontend/: python3 scripts/gen_fixtures.py
"""
import json
from pathlib import Path

from fastapi.testclient import TestClient

from lemlev.service import create_app
from lemlev.resources import load_resources

DEMO = "#٥#كتب أحمد هذا الكتاب في بيتها كتب"
THREE = "كتب بيت كتب مدرسة كتب"
KB = "كتب بيت"

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures.json"


def main() -> None:
    client = TestClient(create_app(resources=load_resources()))
    with client:
        def analyze(text):
            return client.post("/v1/analyze", json={"text": text}).json()

        def markup(text, mode):
            return client.post("/v1/markup", json={"text": text, "mode": mode}).json()

        def assign(text, level, target):
            return client.post(
                "/v1/assign", json={"text": text, "level": level, "target": target}
            ).json()

        kb5 = assign(KB, 5, {"occurrence_index": 0})["text"]
        three_all = assign(THREE, 2, {"surface": "كتب", "all": True})["text"]
        demo_shown = markup(DEMO, "show")["text"]
        demo_hidden = markup(DEMO, "hide")["text"]
        demo_deleted = markup(DEMO, "delete")["text"]

        texts = sorted(
            {DEMO, THREE, KB, "", kb5, three_all, demo_shown, demo_hidden, demo_deleted}
        )
        fixtures = {
            "health": client.get("/v1/health").json(),
            "analyze": {t: analyze(t) for t in texts},
            "clean": {t: markup(t, "delete")["text"] for t in texts},
            "markup": {DEMO: {m: markup(DEMO, m) for m in ("show", "hide", "delete", "minimize")}},
            "word": {s: client.get(f"/v1/word/{s}").json() for s in ("فردها", "غثصثق", "كتب")},
            "assign": {
                f"{KB}|5|occ:0": {"text": kb5},
                f"{THREE}|2|all:كتب": {"text": three_all},
            },
        }
    OUT.write_text(
        json.dumps(fixtures, ensure_ascii=False, sort_keys=True, indent=1) + "\n",
        encoding="utf-8",
    )
    print(f"wrote {OUT} ({OUT.stat().st_size} bytes, {len(texts)} canned texts)")


if __name__ == "__main__":
    main()
