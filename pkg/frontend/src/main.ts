import { createApi } from "./api.js";
import { markupControls } from "./controls.js";
import { renderDocument } from "./render.js";
import { wordSidebar } from "./sidebar.js";
import { App } from "./state.js";
import { toast } from "./toast.js";
import type { MarkupMode, Palette } from "./types.js";

const SAMPLE = "#٥#كتب أحمد هذا الكتاب في بيتها";

async function boot(): Promise<void> {
  const mount = document.getElementById("app");
  if (!mount) return;

  // ?api=http://host:port points the UI at a non-same-origin service
  const base = new URLSearchParams(location.search).get("api") ?? "";
  const api = createApi(base);

  let palette: Palette = {};
  try {
    palette = (await api.health()).palette ?? {};
  } catch {
    toast("service unreachable; colors unavailable");
  }

  mount.innerHTML = `
    <header>
      <h1>lemlev</h1>
      <nav class="modes"></nav>
    </header>
    <section class="input">
      <textarea dir="rtl" rows="4" spellcheck="false"></textarea>
      <button class="analyze">Analyze</button>
    </section>
    <main>
      <div class="view"></div>
      <aside class="sidebar"></aside>
    </main>
  `;
  const modesEl = mount.querySelector<HTMLElement>(".modes")!;
  const viewEl = mount.querySelector<HTMLElement>(".view")!;
  const sidebarEl = mount.querySelector<HTMLElement>(".sidebar")!;
  const textarea = mount.querySelector<HTMLTextAreaElement>("textarea")!;
  const analyzeBtn = mount.querySelector<HTMLButtonElement>(".analyze")!;

  const app = new App(api, palette);

  const onMode = (mode: MarkupMode) => void app.applyMode(mode);

  app.subscribe((state, error) => {
    if (error !== null) {
      toast(error, mount);
      return;
    }
    textarea.value = state.rawText;
    renderDocument(state, viewEl);
    markupControls(state.mode, onMode, modesEl);
  });

  viewEl.addEventListener("click", (event) => {
    const target = (event.target as HTMLElement).closest<HTMLElement>(".w");
    if (!target || target.dataset.index === undefined) return;
    const index = Number(target.dataset.index);
    app.select(index);
    const word = app.state.analysis?.words[index];
    if (!word) return;
    api
      .word(word.surface)
      .then((data) =>
        wordSidebar(
          data,
          {
            onAssign: (level) => void app.assign(level),
            onAssignAll: (level) => void app.assignAll(level),
          },
          sidebarEl,
          app.state.palette,
        ),
      )
      .catch((err) => toast(String(err instanceof Error ? err.message : err), mount));
  });

  analyzeBtn.addEventListener("click", () => void app.setText(textarea.value));
  markupControls(null, onMode, modesEl);
  textarea.value = SAMPLE;
  void app.setText(SAMPLE);
}

void boot();
