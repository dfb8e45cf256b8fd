import type {
  AnalyzeResponse,
  AssignTarget,
  HealthResponse,
  MarkupMode,
  MarkupResponse,
  WordResponse,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

async function asJson<T>(resp: Response): Promise<T> {
  if (!resp.ok) {
    let detail = resp.statusText || `HTTP ${resp.status}`;
    try {
      const body = (await resp.json()) as { detail?: string };
      if (body && typeof body.detail === "string") detail = body.detail;
    } catch {
      // non-JSON error body; keep the status text
    }
    throw new ApiError(resp.status, detail);
  }
  return (await resp.json()) as T;
}

export interface ApiClient {
  health(): Promise<HealthResponse>;
  analyze(text: string): Promise<AnalyzeResponse>;
  word(surface: string): Promise<WordResponse>;
  markup(text: string, mode: MarkupMode): Promise<MarkupResponse>;
  assign(text: string, level: number, target: AssignTarget): Promise<{ text: string }>;
}

/** Thin typed client over the /v1 endpoints. `base` is "" for same-origin. */
export function createApi(base = "", fetchFn: typeof fetch = fetch): ApiClient {
  const post = <T>(path: string, body: unknown): Promise<T> =>
    fetchFn(base + path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    }).then((r) => asJson<T>(r));

  return {
    health: () => fetchFn(`${base}/v1/health`).then((r) => asJson<HealthResponse>(r)),
    analyze: (text) => post("/v1/analyze", { text }),
    word: (surface) =>
      fetchFn(`${base}/v1/word/${encodeURIComponent(surface)}`).then((r) =>
        asJson<WordResponse>(r),
      ),
    markup: (text, mode) => post("/v1/markup", { text, mode }),
    assign: (text, level, target) => post("/v1/assign", { text, level, target }),
  };
}

/** Serializes racing async tasks: only the most recently started one
 * gets to deliver a result; superseded runs resolve to null. */
export class LatestWins<T> {
  private seq = 0;

  async run(task: () => Promise<T>): Promise<T | null> {
    const id = ++this.seq;
    const value = await task();
    return id === this.seq ? value : null;
  }
}
