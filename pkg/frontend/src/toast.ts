const TOAST_MS = 4000;

/** Transient error notice in the corner; stacks and self-dismisses. */
export function toast(message: string, parent: HTMLElement = document.body): void {
  let stack = parent.querySelector<HTMLElement>(".toast-stack");
  if (!stack) {
    stack = document.createElement("div");
    stack.className = "toast-stack";
    parent.append(stack);
  }
  const note = document.createElement("div");
  note.className = "toast";
  note.setAttribute("role", "alert");
  note.textContent = message;
  note.addEventListener("click", () => note.remove());
  stack.append(note);
  setTimeout(() => note.remove(), TOAST_MS);
}
