/** Wire types for the /v1 endpoints. Level tokens are "1".."5",
 * "proper_noun", or "unknown"; colors key off the same tokens. */

export type LevelToken = string;
export type Palette = Record<LevelToken, string>;

export interface WordInfo {
  surface: string;
  start: number;
  end: number;
  lemma: string | null;
  pos: string | null;
  diac: string | null;
  gloss: string | null;
  computed_level: LevelToken;
  override_level: LevelToken | null;
  effective_level: LevelToken;
  n_analyses: number;
}

export interface AnalyzeResponse {
  words: WordInfo[];
  stats: {
    tokens: Record<LevelToken, number>;
    types: Record<LevelToken, number>;
  };
}

export interface AnalysisEntry {
  lemma: string;
  pos: string;
  diac: string;
  gloss: string | null;
}

export interface WordResponse {
  surface: string;
  n_analyses: number;
  groups: { level: LevelToken; analyses: AnalysisEntry[] }[];
  suggestions: Record<string, { lemma: string; pos: string; level: LevelToken }[]>;
}

export type MarkupMode = "show" | "minimize" | "hide" | "delete";

export interface RunSpan {
  start: number;
  end: number;
  level: number;
  style: string;
  text: string;
}

export interface MarkupResponse {
  text: string;
  spans?: RunSpan[];
}

export type AssignTarget =
  | { occurrence_index: number }
  | { surface: string; all: true };

export interface HealthResponse {
  status: string;
  resources?: Record<string, number>;
  palette?: Palette;
  profile?: string;
}

export const GRADED_TOKENS: LevelToken[] = ["1", "2", "3", "4", "5"];
export const ALL_TOKENS: LevelToken[] = [...GRADED_TOKENS, "proper_noun", "unknown"];

export const LEVEL_LABELS: Record<LevelToken, string> = {
  "1": "Level 1",
  "2": "Level 2",
  "3": "Level 3",
  "4": "Level 4",
  "5": "Level 5",
  proper_noun: "Proper noun",
  unknown: "Unknown",
};

const ARABIC_INDIC = ["٠", "١", "٢", "٣", "٤", "٥", "٦", "٧", "٨", "٩"];

/** `#i#` literal for a graded level token, Arabic-Indic digits. */
export function runLiteral(levelToken: LevelToken): string {
  const digits = [...levelToken].map((ch) => {
    const n = ch.charCodeAt(0) - 0x30;
    return n >= 0 && n <= 9 ? ARABIC_INDIC[n] : ch;
  });
  return `#${digits.join("")}#`;
}
