import type { MarkupMode } from "./types.js";

const MODES: MarkupMode[] = ["show", "minimize", "hide", "delete"];

/** Markup mode toolbar; highlights the last applied transform. */
export function markupControls(
  active: MarkupMode | null,
  onMode: (mode: MarkupMode) => void,
  root: HTMLElement,
): void {
  root.textContent = "";
  for (const mode of MODES) {
    const btn = document.createElement("button");
    btn.className = "mode";
    btn.dataset.mode = mode;
    btn.textContent = mode;
    if (mode === active) btn.classList.add("active");
    btn.addEventListener("click", () => onMode(mode));
    root.append(btn);
  }
}
