import { ApiError, LatestWins, type ApiClient } from "./api.js";
import type { AnalyzeResponse, AssignTarget, MarkupMode, Palette } from "./types.js";

/** Whole-document UI state. The raw text is the single source of truth:
 * level overrides live inside it as `#i#` runs, and every mutation goes
 * through the service and comes back as new text. */
export interface UiDocState {
  rawText: string;
  analysis: AnalyzeResponse | null;
  cleanText: string;
  selected: number | null;
  mode: MarkupMode | null;
  palette: Palette;
}

export type Listener = (state: UiDocState, error: string | null) => void;

export class App {
  readonly state: UiDocState;
  private listeners: Listener[] = [];
  private refreshGate = new LatestWins<[AnalyzeResponse, string]>();

  constructor(
    private api: ApiClient,
    palette: Palette = {},
  ) {
    this.state = {
      rawText: "",
      analysis: null,
      cleanText: "",
      selected: null,
      mode: null,
      palette,
    };
  }

  subscribe(listener: Listener): void {
    this.listeners.push(listener);
  }

  private notify(error: string | null = null): void {
    for (const listener of this.listeners) listener(this.state, error);
  }

  private fail(err: unknown): void {
    const message = err instanceof ApiError ? err.message : String(err);
    this.notify(message);
  }

  /** Replace the document text and re-derive everything from the service.
   * Raced calls resolve latest-wins, so stale responses never land. */
  async setText(text: string): Promise<void> {
    this.state.rawText = text;
    let result: [AnalyzeResponse, string] | null;
    try {
      result = await this.refreshGate.run(() =>
        Promise.all([
          this.api.analyze(text),
          this.api.markup(text, "delete").then((r) => r.text),
        ]),
      );
    } catch (err) {
      this.fail(err);
      return;
    }
    if (result === null) return; // a newer setText superseded this one
    const [analysis, cleanText] = result;
    this.state.analysis = analysis;
    this.state.cleanText = cleanText;
    if (this.state.selected !== null && this.state.selected >= analysis.words.length) {
      this.state.selected = null;
    }
    this.notify();
  }

  select(index: number | null): void {
    const words = this.state.analysis?.words ?? [];
    this.state.selected = index !== null && index >= 0 && index < words.length ? index : null;
    this.notify();
  }

  /** Run a whole-document markup transform and adopt its output text. */
  async applyMode(mode: MarkupMode): Promise<void> {
    let text: string;
    try {
      text = (await this.api.markup(this.state.rawText, mode)).text;
    } catch (err) {
      this.fail(err);
      return;
    }
    this.state.mode = mode;
    await this.setText(text);
  }

  private async assignWith(level: number, target: AssignTarget): Promise<void> {
    let text: string;
    try {
      text = (await this.api.assign(this.state.rawText, level, target)).text;
    } catch (err) {
      this.fail(err);
      return;
    }
    await this.setText(text);
  }

  /** Pin the selected word to a level (inserts/replaces its `#i#` run). */
  async assign(level: number): Promise<void> {
    if (this.state.selected === null) return;
    await this.assignWith(level, { occurrence_index: this.state.selected });
  }

  /** Pin every occurrence of the selected word's surface. */
  async assignAll(level: number): Promise<void> {
    const words = this.state.analysis?.words ?? [];
    const selected = this.state.selected;
    if (selected === null) return;
    const word = words[selected];
    if (!word) return;
    await this.assignWith(level, { surface: word.surface, all: true });
  }
}
