import {
  GRADED_TOKENS,
  LEVEL_LABELS,
  type Palette,
  type WordResponse,
} from "./types.js";

export interface SidebarActions {
  onAssign(level: number): void;
  onAssignAll(level: number): void;
}

const RELATIONS = ["synonym", "antonym", "hypernym", "hyponym"];

function el(tag: string, className?: string): HTMLElement {
  const node = document.createElement(tag);
  if (className) node.className = className;
  return node;
}

/** Per-word side panel: readings grouped by level (easiest first), graded
 * substitution candidates, and the Assign / Assign All actions. */
export function wordSidebar(
  word: WordResponse,
  actions: SidebarActions,
  root: HTMLElement,
  palette: Palette = {},
): void {
  root.textContent = "";
  const title = el("h2", "sidebar-word");
  title.dir = "rtl";
  title.textContent = word.surface;
  root.append(title);

  if (word.n_analyses === 0) {
    const empty = el("p", "empty");
    empty.textContent = "no analyses";
    root.append(empty);
  }

  for (const group of word.groups) {
    const section = el("section", "group");
    section.dataset.level = group.level;
    const heading = el("h3");
    heading.textContent = LEVEL_LABELS[group.level] ?? group.level;
    const swatch = el("span", "swatch");
    swatch.style.background = palette[group.level] ?? "";
    heading.append(swatch);
    section.append(heading);
    for (const entry of group.analyses) {
      const row = el("div", "analysis");
      row.dir = "rtl";
      row.textContent = `${entry.lemma} · ${entry.pos} · ${entry.diac}${
        entry.gloss ? ` · ${entry.gloss}` : ""
      }`;
      section.append(row);
    }
    root.append(section);
  }

  const suggestionsWrap = el("section", "suggestions-wrap");
  for (const relation of RELATIONS) {
    const section = el("div", "suggestions");
    section.dataset.relation = relation;
    const heading = el("h4");
    heading.textContent = relation;
    const list = el("ul");
    for (const item of word.suggestions[relation] ?? []) {
      const li = el("li", "suggestion");
      li.dir = "rtl";
      li.dataset.level = item.level;
      li.textContent = `${item.lemma} (${LEVEL_LABELS[item.level] ?? item.level})`;
      list.append(li);
    }
    section.append(heading, list);
    suggestionsWrap.append(section);
  }
  root.append(suggestionsWrap);

  const controls = el("div", "assign-controls");
  const picker = el("div", "level-picker");
  let picked = 3;
  const buttons: HTMLButtonElement[] = [];
  for (const token of GRADED_TOKENS) {
    const btn = document.createElement("button");
    btn.className = "level-pick";
    btn.dataset.level = token;
    btn.textContent = token;
    btn.style.background = palette[token] ?? "";
    btn.addEventListener("click", () => {
      picked = Number(token);
      for (const other of buttons) other.classList.toggle("active", other === btn);
    });
    if (token === "3") btn.classList.add("active");
    buttons.push(btn);
    picker.append(btn);
  }
  const assignBtn = document.createElement("button");
  assignBtn.className = "assign";
  assignBtn.textContent = "Assign";
  assignBtn.addEventListener("click", () => actions.onAssign(picked));
  const assignAllBtn = document.createElement("button");
  assignAllBtn.className = "assign-all";
  assignAllBtn.textContent = "Assign All";
  assignAllBtn.addEventListener("click", () => actions.onAssignAll(picked));
  controls.append(picker, assignBtn, assignAllBtn);
  root.append(controls);
}
