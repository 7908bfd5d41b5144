// SVG board rendering. The board is a pure function of the server view:
// no client-side rule logic beyond highlighting the moves the server listed.

import { computeLayout } from "./layout.js";
import type { GameView, MoveJson } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface BoardCallbacks {
  onVertexClick(id: string): void;
  onEdgeClick(u: string, v: string): void;
}

function el(name: string, attrs: Record<string, string>): SVGElement {
  const node = document.createElementNS(SVG_NS, name);
  for (const [k, v] of Object.entries(attrs)) {
    node.setAttribute(k, v);
  }
  return node;
}

export function legalStepTargets(view: GameView): Set<string> {
  const out = new Set<string>();
  for (const m of view.legal_moves) {
    if (m.t === "step") out.add(m.to);
  }
  return out;
}

export function legalDeletions(view: GameView): Set<string> {
  const out = new Set<string>();
  for (const m of view.legal_moves) {
    if (m.t === "del") out.add(edgeKey(m.u, m.v));
  }
  return out;
}

export function edgeKey(u: string, v: string): string {
  return u <= v ? `${u}|${v}` : `${v}|${u}`;
}

export function renderBoard(
  container: HTMLElement,
  view: GameView,
  callbacks: BoardCallbacks,
): void {
  const layout = computeLayout(view);
  const svg = el("svg", {
    viewBox: `0 0 760 520`,
    class: "board",
    role: "img",
  });
  const humanTurn =
    (view.phase === "fugitive_to_move") === (view.human_role === "fugitive");
  const steps = legalStepTargets(view);
  const deletions = legalDeletions(view);
  const unbreakableAt = view.vertices.length;

  for (const edge of view.edges) {
    const a = layout.get(edge.u)!;
    const b = layout.get(edge.v)!;
    const key = edgeKey(edge.u, edge.v);
    const classes = ["edge"];
    if (edge.remaining === 0) classes.push("exhausted");
    if (edge.remaining >= unbreakableAt) classes.push("unbreakable");
    if (edge.remaining > 0 && edge.remaining < edge.initial) classes.push("damaged");
    if (humanTurn && deletions.has(key)) classes.push("deletable");
    const group = el("g", { class: classes.join(" "), "data-edge": key });
    const line = el("line", {
      x1: String(a.x),
      y1: String(a.y),
      x2: String(b.x),
      y2: String(b.y),
      "stroke-width": String(Math.min(1.5 + edge.remaining, 6)),
    });
    group.appendChild(line);
    // wide invisible hit area so edges are clickable
    const hit = el("line", {
      x1: String(a.x),
      y1: String(a.y),
      x2: String(b.x),
      y2: String(b.y),
      class: "hit",
      "stroke-width": "14",
    });
    group.appendChild(hit);
    if (edge.remaining > 1 || edge.remaining < edge.initial) {
      const badge = el("g", { class: "badge" });
      const mx = (a.x + b.x) / 2;
      const my = (a.y + b.y) / 2;
      badge.appendChild(el("circle", { cx: String(mx), cy: String(my), r: "9" }));
      const label = el("text", { x: String(mx), y: String(my + 3) });
      label.textContent =
        edge.remaining >= unbreakableAt ? "∞" : String(edge.remaining);
      badge.appendChild(label);
      group.appendChild(badge);
    }
    group.addEventListener("click", () => callbacks.onEdgeClick(edge.u, edge.v));
    svg.appendChild(group);
  }

  for (const vertex of view.vertices) {
    const p = layout.get(vertex.id)!;
    const classes = ["vertex", vertex.kind];
    if (vertex.id === view.position) classes.push("fugitive");
    if (view.visited.includes(vertex.id) && vertex.id !== view.position) {
      classes.push("visited");
    }
    if (humanTurn && steps.has(vertex.id)) classes.push("legal-target");
    const group = el("g", { class: classes.join(" "), "data-vertex": vertex.id });
    if (vertex.id === view.position) {
      group.appendChild(
        el("circle", { cx: String(p.x), cy: String(p.y), r: "19", class: "marker" }),
      );
    }
    group.appendChild(el("circle", { cx: String(p.x), cy: String(p.y), r: "13" }));
    const label = el("text", { x: String(p.x), y: String(p.y - 18) });
    label.textContent = vertex.id;
    group.appendChild(label);
    group.addEventListener("click", () => callbacks.onVertexClick(vertex.id));
    svg.appendChild(group);
  }

  container.replaceChildren(svg);
}

export function describeMove(move: MoveJson): string {
  if (move.t === "step") return `step → ${move.to}`;
  if (move.t === "del") return `delete ${move.u}–${move.v}`;
  return "pass";
}
