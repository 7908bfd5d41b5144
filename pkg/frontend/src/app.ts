// Session state machine. All legality is server-authoritative: clicks are
// checked against the last served legal_moves list and anything else is a
// no-op toast; a 409 response re-syncs the board from the server.

import { ApiClient, ApiError } from "./api.js";
import { describeMove, edgeKey, legalDeletions, legalStepTargets, renderBoard } from "./board.js";
import type { GameView, InstanceJson, MoveJson } from "./types.js";

export interface AppElements {
  board: HTMLElement;
  banner: HTMLElement;
  phase: HTMLElement;
  log: HTMLElement;
  hintOutput: HTMLElement;
  toast: HTMLElement;
}

export class App {
  view: GameView | null = null;
  private pending: Promise<void> = Promise.resolve();

  constructor(
    private api: ApiClient,
    private ui: AppElements,
    private onSession: (id: string | null) => void = () => {},
  ) {}

  whenIdle(): Promise<void> {
    return this.pending;
  }

  private enqueue(work: () => Promise<void>): Promise<void> {
    this.pending = this.pending.then(work, work);
    return this.pending;
  }

  loadInstance(instance: InstanceJson, role: "fugitive" | "adversary"): Promise<void> {
    return this.enqueue(async () => {
      try {
        const view = await this.api.createGame(instance, role);
        this.view = view;
        this.onSession(view.id);
        this.ui.hintOutput.textContent = "";
        this.render();
        if (view.engine_move) this.toast(`engine: ${describeMove(view.engine_move)}`);
      } catch (err) {
        this.fail(err);
      }
    });
  }

  restore(id: string): Promise<void> {
    return this.enqueue(async () => {
      try {
        this.view = await this.api.getGame(id);
        this.onSession(id);
        this.render();
      } catch (err) {
        this.onSession(null);
        this.fail(err);
      }
    });
  }

  clickVertex(id: string): Promise<void> {
    return this.enqueue(async () => {
      if (!this.view) return;
      const targets = legalStepTargets(this.view);
      if (!this.humanTurn() || !targets.has(id)) {
        this.toast("not a legal move");
        return;
      }
      await this.submit({ t: "step", to: id });
    });
  }

  clickEdge(u: string, v: string): Promise<void> {
    return this.enqueue(async () => {
      if (!this.view) return;
      const deletions = legalDeletions(this.view);
      if (!this.humanTurn() || !deletions.has(edgeKey(u, v))) {
        this.toast("not a legal move");
        return;
      }
      const [a, b] = u <= v ? [u, v] : [v, u];
      await this.submit({ t: "del", u: a, v: b });
    });
  }

  hint(): Promise<void> {
    return this.enqueue(async () => {
      if (!this.view) return;
      try {
        const hint = await this.api.getHint(this.view.id);
        const parts: string[] = [];
        if (hint.winner_from_here) {
          parts.push(`winner from here: ${hint.winner_from_here}`);
        }
        if (hint.value !== undefined && hint.value !== null) {
          parts.push(`cat survives ${hint.value} more rounds`);
        }
        if (hint.suggested_move) {
          parts.push(`suggested: ${describeMove(hint.suggested_move)}`);
        }
        if (!hint.exact) parts.push("(heuristic, budget exhausted)");
        this.ui.hintOutput.textContent = parts.join(" · ") || "no hint available";
      } catch (err) {
        this.fail(err);
      }
    });
  }

  private async submit(move: MoveJson): Promise<void> {
    if (!this.view) return;
    try {
      const view = await this.api.postMove(this.view.id, move);
      this.view = view;
      this.render();
      if (view.engine_move) this.toast(`engine: ${describeMove(view.engine_move)}`);
    } catch (err) {
      if (err instanceof ApiError && err.status === 409) {
        this.toast(`rejected: ${err.message}`);
        if (err.state) {
          this.view = err.state;
          this.render();
        } else if (this.view) {
          try {
            this.view = await this.api.getGame(this.view.id);
            this.render();
          } catch (inner) {
            this.fail(inner);
          }
        }
        return;
      }
      this.fail(err);
    }
  }

  humanTurn(): boolean {
    if (!this.view || this.view.status.kind !== "ongoing") return false;
    return (
      (this.view.phase === "fugitive_to_move") === (this.view.human_role === "fugitive")
    );
  }

  render(): void {
    const view = this.view;
    if (!view) return;
    renderBoard(this.ui.board, view, {
      onVertexClick: (id) => void this.clickVertex(id),
      onEdgeClick: (u, v) => void this.clickEdge(u, v),
    });
    this.ui.banner.textContent = bannerText(view);
    this.ui.banner.dataset.status = view.status.kind;
    this.ui.phase.textContent = phaseText(view, this.humanTurn());
    const entries = view.history.map(
      (m, i) => `${Math.floor(i / 2) + 1}${i % 2 ? "b" : "a"}. ${describeMove(m)}`,
    );
    this.ui.log.replaceChildren(
      ...entries.map((text) => {
        const li = document.createElement("li");
        li.textContent = text;
        return li;
      }),
    );
  }

  private toast(message: string): void {
    this.ui.toast.textContent = message;
    this.ui.toast.classList.add("visible");
    setTimeout(() => this.ui.toast.classList.remove("visible"), 2500);
  }

  private fail(err: unknown): void {
    const message = err instanceof Error ? err.message : String(err);
    this.toast(`error: ${message}`);
  }
}

export function bannerText(view: GameView): string {
  const human = view.human_role;
  switch (view.status.kind) {
    case "fugitive_won": {
      const who = human === "fugitive" ? "you win" : "you lose";
      return `The fugitive escapes on round ${view.status.round}: ${who}!`;
    }
    case "adversary_won": {
      const who = human === "adversary" ? "you win" : "you lose";
      return `The fugitive is trapped: ${who}!`;
    }
    case "trapped": {
      const who = human === "adversary" ? "you win" : "you lose";
      return `The cat is caught on round ${view.status.round}: ${who}!`;
    }
    default:
      return view.variant === "catherding" ? "The chase is on." : "The escape is on.";
  }
}

function phaseText(view: GameView, humanTurn: boolean): string {
  if (view.status.kind !== "ongoing") return `finished in ${view.status.round} rounds`;
  const mover = view.phase === "fugitive_to_move" ? "fugitive to move" : "adversary to delete";
  return `round ${view.round} · ${mover} · ${humanTurn ? "your turn" : "engine thinking"}`;
}
