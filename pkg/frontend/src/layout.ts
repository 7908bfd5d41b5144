// Board coordinates: server layout hints when available, otherwise a small
// deterministic force layout (circle start, spring iterations).

import type { GameView } from "./types.js";

export interface Point {
  x: number;
  y: number;
}

export const BOARD = { width: 760, height: 520, margin: 48 };

function normalize(raw: Map<string, Point>): Map<string, Point> {
  const xs = [...raw.values()].map((p) => p.x);
  const ys = [...raw.values()].map((p) => p.y);
  const minX = Math.min(...xs);
  const maxX = Math.max(...xs);
  const minY = Math.min(...ys);
  const maxY = Math.max(...ys);
  const spanX = maxX - minX || 1;
  const spanY = maxY - minY || 1;
  const out = new Map<string, Point>();
  for (const [id, p] of raw) {
    out.set(id, {
      x: BOARD.margin + ((p.x - minX) / spanX) * (BOARD.width - 2 * BOARD.margin),
      y: BOARD.margin + ((p.y - minY) / spanY) * (BOARD.height - 2 * BOARD.margin),
    });
  }
  return out;
}

export function computeLayout(view: GameView): Map<string, Point> {
  const ids = view.vertices.map((v) => v.id);
  const hinted = view.layout ?? {};
  if (ids.every((id) => hinted[id] !== undefined)) {
    const raw = new Map<string, Point>();
    for (const id of ids) {
      const [x, y] = hinted[id]!;
      raw.set(id, { x, y });
    }
    return normalize(raw);
  }
  return normalize(forceLayout(view));
}

function forceLayout(view: GameView): Map<string, Point> {
  const ids = [...view.vertices.map((v) => v.id)].sort();
  const pos = new Map<string, Point>();
  const n = ids.length;
  ids.forEach((id, i) => {
    const angle = (2 * Math.PI * i) / n;
    pos.set(id, { x: Math.cos(angle), y: Math.sin(angle) });
  });
  if (n <= 2) return pos;
  const edges = view.edges.map((e) => [e.u, e.v] as const);
  const spring = 0.6;
  const ideal = Math.sqrt(4.0 / n);
  for (let iter = 0; iter < 250; iter++) {
    const force = new Map<string, Point>(ids.map((id) => [id, { x: 0, y: 0 }]));
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        const a = pos.get(ids[i]!)!;
        const b = pos.get(ids[j]!)!;
        let dx = a.x - b.x;
        let dy = a.y - b.y;
        const d2 = dx * dx + dy * dy || 1e-6;
        const rep = (ideal * ideal) / d2;
        dx *= rep;
        dy *= rep;
        const fa = force.get(ids[i]!)!;
        const fb = force.get(ids[j]!)!;
        fa.x += dx;
        fa.y += dy;
        fb.x -= dx;
        fb.y -= dy;
      }
    }
    for (const [u, v] of edges) {
      const a = pos.get(u)!;
      const b = pos.get(v)!;
      const dx = b.x - a.x;
      const dy = b.y - a.y;
      const d = Math.sqrt(dx * dx + dy * dy) || 1e-3;
      const pull = (spring * (d - ideal)) / d;
      const fa = force.get(u)!;
      const fb = force.get(v)!;
      fa.x += dx * pull;
      fa.y += dy * pull;
      fb.x -= dx * pull;
      fb.y -= dy * pull;
    }
    const step = 0.05 * (1 - iter / 260);
    for (const id of ids) {
      const p = pos.get(id)!;
      const f = force.get(id)!;
      p.x += Math.max(-0.2, Math.min(0.2, f.x * step));
      p.y += Math.max(-0.2, Math.min(0.2, f.y * step));
    }
  }
  return pos;
}
