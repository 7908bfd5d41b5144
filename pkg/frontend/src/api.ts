// Thin fetch client for the game service; every method resolves to the
// parsed JSON body or throws ApiError with the server's message.

import type { GameView, HintView, InstanceJson, MoveJson } from "./types.js";

export class ApiError extends Error {
  constructor(
    public status: number,
    message: string,
    public state?: GameView,
  ) {
    super(message);
  }
}

async function parseOrThrow<T>(res: Response): Promise<T> {
  const body = await res.json().catch(() => ({}));
  if (!res.ok) {
    throw new ApiError(res.status, body.error ?? res.statusText, body.state);
  }
  return body as T;
}

export class ApiClient {
  constructor(private base: string = "") {}

  async createGame(
    instance: InstanceJson,
    role: "fugitive" | "adversary",
    budget?: number,
  ): Promise<GameView> {
    const res = await fetch(`${this.base}/games`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ instance, role, ...(budget ? { budget } : {}) }),
    });
    return parseOrThrow<GameView>(res);
  }

  async getGame(id: string): Promise<GameView> {
    return parseOrThrow<GameView>(await fetch(`${this.base}/games/${id}`));
  }

  async postMove(id: string, move: MoveJson): Promise<GameView> {
    const res = await fetch(`${this.base}/games/${id}/moves`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ move }),
    });
    return parseOrThrow<GameView>(res);
  }

  async getHint(id: string): Promise<HintView> {
    return parseOrThrow<HintView>(await fetch(`${this.base}/games/${id}/hint`));
  }

  async deleteGame(id: string): Promise<void> {
    await fetch(`${this.base}/games/${id}`, { method: "DELETE" });
  }
}
