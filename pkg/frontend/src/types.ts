// Wire types mirroring the game service's JSON views.

export type MoveJson =
  | { t: "step"; to: string }
  | { t: "del"; u: string; v: string }
  | { t: "pass" };

export interface VertexView {
  id: string;
  kind: "regular" | "exit";
}

export interface EdgeView {
  u: string;
  v: string;
  remaining: number;
  initial: number;
}

export interface StatusView {
  kind: "ongoing" | "fugitive_won" | "adversary_won" | "trapped";
  round: number;
}

export interface GameView {
  id: string;
  variant: "nemesis" | "blizzard" | "catherding";
  name: string;
  human_role: "fugitive" | "adversary";
  position: string;
  phase: "fugitive_to_move" | "adversary_to_delete";
  round: number;
  status: StatusView;
  vertices: VertexView[];
  edges: EdgeView[];
  visited: string[];
  legal_moves: MoveJson[];
  history: MoveJson[];
  layout: Record<string, [number, number]> | null;
  instance_digest: string;
  engine_move?: MoveJson;
}

export interface HintView {
  winner_from_here: string | null;
  suggested_move: MoveJson | null;
  exact: boolean;
  value?: number;
}

export interface InstanceJson {
  variant?: string;
  start: string;
  vertices: { id: string; kind?: string }[];
  edges?: { u: string; v: string; mult?: number }[];
  layout?: Record<string, [number, number]>;
  name?: string;
}

export interface GalleryEntry {
  key: string;
  title: string;
  blurb: string;
  instance: InstanceJson;
}
