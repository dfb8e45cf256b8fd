import { describe, expect, it } from "vitest";

import { renderDocument } from "../src/render.js";
import type { UiDocState } from "../src/state.js";
import { ALL_TOKENS, type AnalyzeResponse } from "../src/types.js";
import { DEMO, fixtures } from "./mock.js";

function stateFor(text: string, extra: Partial<UiDocState> = {}): UiDocState {
  return {
    rawText: text,
    analysis: fixtures.analyze[text]!,
    cleanText: fixtures.clean[text]!,
    selected: null,
    mode: null,
    palette: fixtures.health.palette ?? {},
    ...extra,
  };
}

function render(state: UiDocState): HTMLElement {
  const root = document.createElement("div");
  renderDocument(state, root);
  return root;
}

describe("document view", () => {
  it("wraps every word token in a span", () => {
    const state = stateFor(DEMO);
    const root = render(state);
    const spans = root.querySelectorAll(".w");
    expect(spans.length).toBe(state.analysis!.words.length);
    expect(spans.length).toBe(7);
  });

  it("is right-to-left and reproduces the clean text", () => {
    const state = stateFor(DEMO);
    const doc = render(state).querySelector<HTMLElement>(".doc")!;
    expect(doc.dir).toBe("rtl");
    // badge text aside, the visible text is exactly the clean document
    for (const run of doc.querySelectorAll(".run")) run.remove();
    expect(doc.textContent).toBe(state.cleanText);
  });

  it("colors spans by effective level", () => {
    const root = render(stateFor(DEMO));
    const first = root.querySelector<HTMLElement>('.w[data-index="0"]')!;
    expect(first.dataset.level).toBe("5");
    expect(first.style.background).toBe("rgb(229, 57, 53)");
  });

  it("shows an override badge only on overridden words", () => {
    const root = render(stateFor(DEMO));
    const runs = root.querySelectorAll(".run");
    expect(runs.length).toBe(1);
    expect(runs[0]!.textContent).toBe("#٥#");
    expect(runs[0]!.classList.contains("min")).toBe(false);
  });

  it("minimize mode shrinks the badges", () => {
    const root = render(stateFor(DEMO, { mode: "minimize" }));
    expect(root.querySelectorAll(".run.min").length).toBe(1);
  });

  it("marks the selected span", () => {
    const root = render(stateFor(DEMO, { selected: 2 }));
    expect(root.querySelector('.w[data-index="2"]')!.classList.contains("sel")).toBe(true);
    expect(root.querySelectorAll(".w.sel").length).toBe(1);
  });

  it("bar values equal the statistics payload exactly", () => {
    const state = stateFor(DEMO);
    const root = render(state);
    for (const group of ["tokens", "types"] as const) {
      for (const token of ALL_TOKENS) {
        const bar = root.querySelector<HTMLElement>(
          `.bar[data-group="${group}"][data-level="${token}"]`,
        )!;
        expect(bar.dataset.count).toBe(String(state.analysis!.stats[group][token] ?? 0));
      }
    }
  });

  it("bar totals equal the rendered span count", () => {
    const state = stateFor(DEMO);
    const root = render(state);
    const total = [...root.querySelectorAll('.bar[data-group="tokens"]')].reduce(
      (n, bar) => n + Number((bar as HTMLElement).dataset.count),
      0,
    );
    expect(total).toBe(root.querySelectorAll(".w").length);
    expect(root.querySelector(".banner")).toBeNull();
  });

  it("renders an empty document as no spans and zero-height bars", () => {
    const root = render(stateFor(""));
    expect(root.querySelectorAll(".w").length).toBe(0);
    const bars = root.querySelectorAll<HTMLElement>(".bar");
    expect(bars.length).toBe(2 * ALL_TOKENS.length);
    for (const bar of bars) {
      expect(bar.dataset.count).toBe("0");
      expect(bar.style.height).toBe("0px");
    }
  });

  it("renders nothing before the first analysis", () => {
    const root = render(stateFor(DEMO, { analysis: null }));
    expect(root.children.length).toBe(0);
  });

  it("shows an error banner on a malformed response", () => {
    const broken = { words: 17, stats: null } as unknown as AnalyzeResponse;
    const root = render(stateFor(DEMO, { analysis: broken }));
    expect(root.querySelector(".banner.error")).not.toBeNull();
    expect(root.querySelectorAll(".w").length).toBe(0);
  });

  it("flags statistics that disagree with the word list", () => {
    const analysis = structuredClone(fixtures.analyze[DEMO]!);
    analysis.stats.tokens["1"] = 99;
    const root = render(stateFor(DEMO, { analysis }));
    expect(root.querySelector(".banner.error")!.textContent).toContain("disagree");
  });
});
