import { beforeEach, describe, expect, it, vi } from "vitest";

import { renderBoard } from "../src/board.js";
import type { GameView } from "../src/types.js";

function view(): GameView {
  return {
    id: "g",
    variant: "nemesis",
    name: "I3-like",
    human_role: "fugitive",
    position: "s",
    phase: "fugitive_to_move",
    round: 0,
    status: { kind: "ongoing", round: 0 },
    vertices: [
      { id: "s", kind: "regular" },
      { id: "x", kind: "exit" },
      { id: "w", kind: "regular" },
    ],
    edges: [
      { u: "s", v: "x", remaining: 2, initial: 2 },
      { u: "s", v: "w", remaining: 5, initial: 5 },
      { u: "w", v: "x", remaining: 0, initial: 1 },
    ],
    visited: ["s"],
    legal_moves: [{ t: "step", to: "x" }],
    history: [],
    layout: { s: [0, 0], x: [1, 0], w: [0.5, 1] },
    instance_digest: "d",
  };
}

describe("renderBoard", () => {
  let container: HTMLElement;

  beforeEach(() => {
    document.body.innerHTML = '<div id="board"></div>';
    container = document.getElementById("board")!;
  });

  it("marks exits, the fugitive, and legal step targets", () => {
    renderBoard(container, view(), { onVertexClick: () => {}, onEdgeClick: () => {} });
    const exit = container.querySelector('[data-vertex="x"]')!;
    expect(exit.getAttribute("class")).toContain("exit");
    expect(exit.getAttribute("class")).toContain("legal-target");
    const start = container.querySelector('[data-vertex="s"]')!;
    expect(start.getAttribute("class")).toContain("fugitive");
    expect(start.querySelector(".marker")).not.toBeNull();
  });

  it("badges multiplicities and styles unbreakable and exhausted edges", () => {
    renderBoard(container, view(), { onVertexClick: () => {}, onEdgeClick: () => {} });
    const sx = container.querySelector('[data-edge="s|x"]')!;
    expect(sx.querySelector(".badge text")!.textContent).toBe("2");
    const sw = container.querySelector('[data-edge="s|w"]')!;
    // remaining 5 >= vertex count 3: rendered as effectively infinite
    expect(sw.getAttribute("class")).toContain("unbreakable");
    expect(sw.querySelector(".badge text")!.textContent).toBe("∞");
    const wx = container.querySelector('[data-edge="w|x"]')!;
    expect(wx.getAttribute("class")).toContain("exhausted");
  });

  it("routes clicks through the callbacks", () => {
    const onVertexClick = vi.fn();
    const onEdgeClick = vi.fn();
    renderBoard(container, view(), { onVertexClick, onEdgeClick });
    (container.querySelector('[data-vertex="x"]') as SVGElement).dispatchEvent(
      new Event("click", { bubbles: true }),
    );
    expect(onVertexClick).toHaveBeenCalledWith("x");
    (container.querySelector('[data-edge="s|x"]') as SVGElement).dispatchEvent(
      new Event("click", { bubbles: true }),
    );
    expect(onEdgeClick).toHaveBeenCalledWith("s", "x");
  });
});
