// Page bootstrap: gallery picker, file upload, role selection, hash-based
// session restore so a refresh lands back on the same board.

import { ApiClient } from "./api.js";
import { App, AppElements } from "./app.js";
import { GALLERY } from "./gallery.js";
import type { InstanceJson } from "./types.js";

function need(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node;
}

export function bootstrap(apiBase = ""): App {
  const ui: AppElements = {
    board: need("board"),
    banner: need("banner"),
    phase: need("phase"),
    log: need("log"),
    hintOutput: need("hint-output"),
    toast: need("toast"),
  };
  const gallery = need("gallery") as HTMLSelectElement;
  const role = need("role") as HTMLSelectElement;
  const newGame = need("new-game") as HTMLButtonElement;
  const hint = need("hint") as HTMLButtonElement;
  const file = need("file") as HTMLInputElement;

  for (const entry of GALLERY) {
    const option = document.createElement("option");
    option.value = entry.key;
    option.textContent = `${entry.title}: ${entry.blurb}`;
    gallery.appendChild(option);
  }

  const app = new App(new ApiClient(apiBase), ui, (id) => {
    window.location.hash = id ? `#${id}` : "";
  });

  let uploaded: InstanceJson | null = null;

  newGame.addEventListener("click", () => {
    const chosenRole = role.value === "adversary" ? "adversary" : "fugitive";
    if (gallery.value === "(upload)" && uploaded) {
      void app.loadInstance(uploaded, chosenRole);
      return;
    }
    const entry = GALLERY.find((e) => e.key === gallery.value) ?? GALLERY[0]!;
    void app.loadInstance(entry.instance, chosenRole);
  });

  hint.addEventListener("click", () => void app.hint());

  file.addEventListener("change", async () => {
    const chosen = file.files?.[0];
    if (!chosen) return;
    try {
      uploaded = JSON.parse(await chosen.text()) as InstanceJson;
      const option = document.createElement("option");
      option.value = "(upload)";
      option.textContent = `uploaded: ${chosen.name}`;
      gallery.appendChild(option);
      gallery.value = "(upload)";
    } catch {
      ui.toast.textContent = "could not parse the uploaded file";
      ui.toast.classList.add("visible");
    }
  });

  const existing = window.location.hash.replace(/^#/, "");
  if (existing) {
    void app.restore(existing);
  }
  return app;
}

if (typeof document !== "undefined" && document.getElementById("board")) {
  bootstrap();
}
