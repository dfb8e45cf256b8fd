import raw from "./fixtures.json";
import type {
  AnalyzeResponse,
  HealthResponse,
  MarkupResponse,
  WordResponse,
} from "../src/types.js";

interface Fixtures {
  health: HealthResponse;
  analyze: Record<string, AnalyzeResponse>;
  clean: Record<string, string>;
  markup: Record<string, Record<string, MarkupResponse>>;
  word: Record<string, WordResponse>;
  assign: Record<string, { text: string }>;
}

export const fixtures = raw as unknown as Fixtures;

// Canned documents; must match scripts/gen_fixtures.py.
export const DEMO = "#٥#كتب أحمد هذا الكتاب في بيتها كتب";
export const THREE = "كتب بيت كتب مدرسة كتب";
export const KB = "كتب بيت";

for (const text of [DEMO, THREE, KB, ""]) {
  if (!(text in fixtures.analyze)) {
    throw new Error(`fixtures.json missing analyze entry; regenerate (${text})`);
  }
}

function json(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}

function need<T>(value: T | undefined, what: string): T {
  if (value === undefined) throw new Error(`no fixture for ${what}`);
  return value;
}

/** fetch stand-in that replays canned engine responses. Unknown requests
 * throw so a test can't silently drift from the fixtures. */
export function fixtureFetch(): typeof fetch {
  return async (input, init) => {
    const url = typeof input === "string" ? input : input instanceof URL ? input.href : input.url;
    const path = url.replace(/^[a-z]+:\/\/[^/]+/, "");
    if (path === "/v1/health") return json(fixtures.health);
    if (path.startsWith("/v1/word/")) {
      const surface = decodeURIComponent(path.slice("/v1/word/".length));
      return json(need(fixtures.word[surface], `word ${surface}`));
    }
    const body = JSON.parse(String(init?.body ?? "{}")) as Record<string, unknown>;
    const text = String(body.text ?? "");
    if (path === "/v1/analyze") {
      return json(need(fixtures.analyze[text], `analyze ${text}`));
    }
    if (path === "/v1/markup") {
      const mode = String(body.mode);
      if (mode === "delete") {
        return json({ text: need(fixtures.clean[text], `clean ${text}`) });
      }
      return json(need(fixtures.markup[text]?.[mode], `markup ${mode} ${text}`));
    }
    if (path === "/v1/assign") {
      const target = body.target as Record<string, unknown>;
      const key =
        target.all === true
          ? `${text}|${body.level}|all:${target.surface}`
          : `${text}|${body.level}|occ:${target.occurrence_index}`;
      return json(need(fixtures.assign[key], `assign ${key}`));
    }
    throw new Error(`unexpected request: ${path}`);
  };
}

/** fetch stand-in that always fails with the given HTTP error. */
export function failingFetch(status: number, detail: string): typeof fetch {
  return async () => json({ detail }, status);
}
