// Spawns the real game service for the end-to-end tests.

import { spawn, type ChildProcess } from "node:child_process";

export const SERVICE_PORT = 8841;
export const SERVICE_BASE = `http://127.0.0.1:${SERVICE_PORT}`;

let child: ChildProcess | undefined;

async function waitUntilUp(): Promise<void> {
  for (let attempt = 0; attempt < 120; attempt++) {
    try {
      const res = await fetch(`${SERVICE_BASE}/games/absent`);
      if (res.status === 404) return;
    } catch {
      // not listening yet
    }
    await new Promise((r) => setTimeout(r, 250));
  }
  throw new Error("game service did not come up");
}

export async function setup(): Promise<void> {
  child = spawn(
    "python3",
    ["-m", "nemesis.cli", "serve", "--host", "127.0.0.1", "--port", String(SERVICE_PORT)],
    { cwd: new URL("../..", import.meta.url).pathname, stdio: "ignore" },
  );
  await waitUntilUp();
}

export async function teardown(): Promise<void> {
  child?.kill("SIGTERM");
}
