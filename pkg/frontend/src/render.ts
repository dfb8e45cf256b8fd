import type { UiDocState } from "./state.js";
import {
  ALL_TOKENS,
  LEVEL_LABELS,
  runLiteral,
  type AnalyzeResponse,
  type Palette,
} from "./types.js";

const BAR_MAX_PX = 120;

function el(tag: string, className?: string): HTMLElement {
  const node = document.createElement(tag);
  if (className) node.className = className;
  return node;
}

function banner(message: string): HTMLElement {
  const node = el("div", "banner error");
  node.textContent = message;
  return node;
}

function wellFormed(analysis: AnalyzeResponse): boolean {
  return (
    Array.isArray(analysis.words) &&
    typeof analysis.stats === "object" &&
    analysis.stats !== null &&
    typeof analysis.stats.tokens === "object" &&
    typeof analysis.stats.types === "object"
  );
}

function renderBars(
  counts: Record<string, number>,
  palette: Palette,
  group: string,
  title: string,
): HTMLElement {
  const wrap = el("div", "chart-group");
  const heading = el("h3");
  heading.textContent = title;
  const bars = el("div", "bars");
  const peak = Math.max(0, ...ALL_TOKENS.map((t) => counts[t] ?? 0));
  for (const token of ALL_TOKENS) {
    const count = counts[token] ?? 0;
    const col = el("div", "bar-col");
    const num = el("span", "bar-count");
    num.textContent = String(count);
    const bar = el("div", "bar");
    bar.dataset.group = group;
    bar.dataset.level = token;
    bar.dataset.count = String(count);
    bar.style.height = `${peak === 0 ? 0 : Math.round((BAR_MAX_PX * count) / peak)}px`;
    bar.style.background = palette[token] ?? "";
    const label = el("span", "bar-label");
    label.textContent = LEVEL_LABELS[token] ?? token;
    col.append(num, bar, label);
    bars.append(col);
  }
  wrap.append(heading, bars);
  return wrap;
}

/** Document view: clean text with each word wrapped in a colored span,
 * override runs rendered as badges, plus token/type distribution bars. */
export function renderDocument(state: UiDocState, root: HTMLElement): void {
  root.textContent = "";
  const { analysis, palette } = state;
  if (analysis === null) return;
  if (!wellFormed(analysis)) {
    root.append(banner("malformed analysis response"));
    return;
  }

  const doc = el("div", "doc");
  doc.dir = "rtl";
  doc.lang = "ar";
  let pos = 0;
  analysis.words.forEach((word, index) => {
    if (word.start > pos) {
      doc.append(document.createTextNode(state.cleanText.slice(pos, word.start)));
    }
    if (word.override_level !== null) {
      const run = el("span", state.mode === "minimize" ? "run min" : "run");
      run.textContent = runLiteral(word.override_level);
      doc.append(run);
    }
    const span = el("span", "w");
    span.dataset.index = String(index);
    span.dataset.level = word.effective_level;
    span.style.background = palette[word.effective_level] ?? "";
    span.title = `${word.lemma ?? "?"} · ${LEVEL_LABELS[word.effective_level] ?? ""}`;
    span.textContent = word.surface;
    if (index === state.selected) span.classList.add("sel");
    doc.append(span);
    pos = word.end;
  });
  doc.append(document.createTextNode(state.cleanText.slice(pos)));
  root.append(doc);

  // cross-check: bar totals must equal what we just rendered
  const tokenTotal = ALL_TOKENS.reduce((n, t) => n + (analysis.stats.tokens[t] ?? 0), 0);
  if (tokenTotal !== analysis.words.length) {
    root.append(banner("statistics disagree with rendered words"));
  }

  const chart = el("div", "chart");
  chart.append(
    renderBars(analysis.stats.tokens, palette, "tokens", "Word tokens"),
    renderBars(analysis.stats.types, palette, "types", "Word types"),
  );
  root.append(chart);
}
