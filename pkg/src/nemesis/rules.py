"""Referee: legal moves, state transitions, terminal detection, match loop.

The fugitive moves first each round; the adversary then deletes one edge
copy.  In Blizzard the deletion must be incident with the fugitive's current
vertex.  Cat herding has no exits: the game ends when the cat is isolated.
A Pass is only legal when the variant leaves the adversary nothing to delete.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Callable, Iterable, Optional

from .graph import Edge, Instance, Variant, edge_key, instance_digest


class Phase(Enum):
    FUGITIVE = "fugitive_to_move"
    ADVERSARY = "adversary_to_delete"


@dataclass(frozen=True)
class Step:
    to: str


@dataclass(frozen=True)
class Delete:
    u: str
    v: str

    def __post_init__(self) -> None:
        a, b = edge_key(self.u, self.v)
        object.__setattr__(self, "u", a)
        object.__setattr__(self, "v", b)

    @property
    def edge(self) -> Edge:
        return (self.u, self.v)


@dataclass(frozen=True)
class Pass:
    pass


Move = Step | Delete | Pass


class Winner(Enum):
    NONE = "none"
    FUGITIVE = "fugitive"
    ADVERSARY = "adversary"


@dataclass(frozen=True)
class Status:
    kind: str  # ongoing | fugitive_won | adversary_won | trapped
    round: int = 0

    @property
    def ongoing(self) -> bool:
        return self.kind == "ongoing"

    @property
    def winner(self) -> Winner:
        if self.kind == "fugitive_won":
            return Winner.FUGITIVE
        if self.kind in ("adversary_won", "trapped"):
            return Winner.ADVERSARY
        return Winner.NONE


class IllegalMove(Exception):
    pass


@dataclass(frozen=True)
class GameState:
    """Immutable game position.

    `remaining` is a tuple of multiplicities aligned with
    `instance.graph.edge_list()`; `round` counts completed fugitive moves.
    """

    instance: Instance
    position: str
    remaining: tuple[int, ...]
    phase: Phase
    round: int
    visited: frozenset[str]
    history: tuple[Move, ...] = ()

    def edge_list(self) -> list[Edge]:
        return self.instance.graph.edge_list()

    def remaining_map(self) -> dict[Edge, int]:
        return {e: m for e, m in zip(self.edge_list(), self.remaining) if m > 0}

    def multiplicity(self, u: str, v: str) -> int:
        idx = self.instance.graph.edge_index().get(edge_key(u, v))
        return 0 if idx is None else self.remaining[idx]


def initial_state(inst: Instance) -> GameState:
    edges = inst.graph.edge_list()
    return GameState(
        instance=inst,
        position=inst.start,
        remaining=tuple(inst.graph.edges[e] for e in edges),
        phase=Phase.FUGITIVE,
        round=0,
        visited=frozenset({inst.start}),
    )


def _live_adjacency(state: GameState, v: str) -> list[tuple[str, int]]:
    g = state.instance.graph
    index = g.edge_index()
    out = []
    for w in g.neighbors(v):
        m = state.remaining[index[edge_key(v, w)]]
        if m > 0:
            out.append((w, m))
    return out


def game_status(state: GameState) -> Status:
    """Evaluate terminal conditions on the remaining graph."""
    g = state.instance.graph
    if state.instance.variant is Variant.CATHERDING:
        if not _live_adjacency(state, state.position):
            return Status("trapped", state.round)
        return Status("ongoing", state.round)
    if g.is_exit(state.position):
        return Status("fugitive_won", state.round)
    if 0 not in state.remaining:
        # nothing exhausted: connectivity is that of the initial graph
        reaches = state.position in g.exit_reaching_set()
    else:
        index = g.edge_index()
        seen = {state.position}
        stack = [state.position]
        reaches = False
        while stack and not reaches:
            u = stack.pop()
            for w in g.neighbors(u):
                if w in seen or state.remaining[index[edge_key(u, w)]] <= 0:
                    continue
                if g.is_exit(w):
                    reaches = True
                    break
                seen.add(w)
                stack.append(w)
    if not reaches:
        return Status("adversary_won", state.round)
    return Status("ongoing", state.round)


def legal_moves(state: GameState, no_revisit: bool = False) -> list[Move]:
    """All legal moves in deterministic order; empty in a terminal state."""
    if not game_status(state).ongoing:
        return []
    if state.phase is Phase.FUGITIVE:
        targets = [
            w
            for w, _ in _live_adjacency(state, state.position)
            if not (no_revisit and w in state.visited)
        ]
        return [Step(w) for w in targets]
    deletes = _deletable_edges(state)
    if not deletes:
        return [Pass()]
    return [Delete(u, v) for (u, v) in deletes]


def _deletable_edges(state: GameState) -> list[Edge]:
    edges = state.edge_list()
    out = []
    for e, m in zip(edges, state.remaining):
        if m <= 0:
            continue
        if state.instance.variant is Variant.BLIZZARD and state.position not in e:
            continue
        out.append(e)
    return out


def apply_move(state: GameState, move: Move) -> GameState:
    """Pure transition; raises IllegalMove with a reason for bad moves.

    Legality here is structural (phase, edge presence, variant restriction).
    The optional no-revisit rule is a referee/search concern, not a rule of
    the base game, so a revisiting Step is accepted.
    """
    if not game_status(state).ongoing:
        raise IllegalMove("game is over")
    index = state.instance.graph.edge_index()
    if isinstance(move, Step):
        if state.phase is not Phase.FUGITIVE:
            raise IllegalMove("not the fugitive's turn")
        key = edge_key(state.position, move.to)
        if key not in index or state.remaining[index[key]] < 1:
            raise IllegalMove(f"no remaining edge from {state.position} to {move.to}")
        return replace(
            state,
            position=move.to,
            phase=Phase.ADVERSARY,
            round=state.round + 1,
            visited=state.visited | {move.to},
            history=state.history + (move,),
        )
    if isinstance(move, Delete):
        if state.phase is not Phase.ADVERSARY:
            raise IllegalMove("not the adversary's turn")
        key = move.edge
        if key not in index:
            raise IllegalMove(f"unknown edge {key}")
        idx = index[key]
        if state.remaining[idx] < 1:
            raise IllegalMove(f"edge {key} already exhausted")
        if state.instance.variant is Variant.BLIZZARD and state.position not in key:
            raise IllegalMove(f"blizzard deletion {key} not incident with {state.position}")
        remaining = list(state.remaining)
        remaining[idx] -= 1
        return replace(
            state,
            remaining=tuple(remaining),
            phase=Phase.FUGITIVE,
            history=state.history + (move,),
        )
    if isinstance(move, Pass):
        if state.phase is not Phase.ADVERSARY:
            raise IllegalMove("not the adversary's turn")
        if _deletable_edges(state):
            raise IllegalMove("pass is only legal when nothing is deletable")
        return replace(state, phase=Phase.FUGITIVE, history=state.history + (move,))
    raise IllegalMove(f"unknown move {move!r}")


# ---------------------------------------------------------------------------
# Match execution
# ---------------------------------------------------------------------------

Strategy = Callable[[GameState], Optional[Move]]


@dataclass
class MatchResult:
    status: Status
    final_state: GameState
    transcript: list[Move]
    forfeited_by: str | None = None  # "fugitive" | "adversary" | None
    note: str = ""

    @property
    def winner(self) -> Winner:
        if self.forfeited_by == "fugitive":
            return Winner.ADVERSARY
        if self.forfeited_by == "adversary":
            return Winner.FUGITIVE
        return self.status.winner


def default_round_cap(inst: Instance) -> int:
    return inst.graph.total_multiplicity() + len(inst.graph.vertices)


def run_match(
    inst: Instance,
    fugitive: Strategy,
    adversary: Strategy,
    cap: int | None = None,
) -> MatchResult:
    """Alternate half-turns until a terminal status or the round cap.

    At the cap the match is adjudicated for the adversary: a winning fugitive
    never needs more rounds than there are vertices.  A strategy returning an
    illegal move (or None) forfeits.
    """
    if cap is None:
        cap = default_round_cap(inst)
    state = initial_state(inst)
    transcript: list[Move] = []
    while True:
        status = game_status(state)
        if not status.ongoing:
            return MatchResult(status, state, transcript)
        if state.phase is Phase.FUGITIVE and state.round >= cap:
            return MatchResult(
                Status("adversary_won", state.round),
                state,
                transcript,
                note="round cap reached; adjudicated for the adversary",
            )
        side = "fugitive" if state.phase is Phase.FUGITIVE else "adversary"
        strategy = fugitive if state.phase is Phase.FUGITIVE else adversary
        move = strategy(state)
        if move is None:
            winner = "adversary_won" if side == "fugitive" else "fugitive_won"
            return MatchResult(
                Status(winner, state.round), state, transcript,
                forfeited_by=side, note=f"{side} resigned",
            )
        try:
            state = apply_move(state, move)
        except IllegalMove as exc:
            winner = "adversary_won" if side == "fugitive" else "fugitive_won"
            return MatchResult(
                Status(winner, state.round), state, transcript,
                forfeited_by=side, note=f"illegal move by {side}: {exc}",
            )
        transcript.append(move)


# ---------------------------------------------------------------------------
# Transcript wire format
# ---------------------------------------------------------------------------

def move_to_json(move: Move) -> dict:
    if isinstance(move, Step):
        return {"t": "step", "to": move.to}
    if isinstance(move, Delete):
        return {"t": "del", "u": move.u, "v": move.v}
    return {"t": "pass"}


def move_from_json(obj: dict) -> Move:
    tag = obj.get("t")
    if tag == "step":
        return Step(obj["to"])
    if tag == "del":
        return Delete(obj["u"], obj["v"])
    if tag == "pass":
        return Pass()
    raise ValueError(f"unknown move tag {tag!r}")


def transcript_to_json(inst: Instance, moves: Iterable[Move], status: Status | None = None) -> dict:
    out = {
        "instance_digest": instance_digest(inst),
        "moves": [move_to_json(m) for m in moves],
    }
    if status is not None:
        out["status"] = {"kind": status.kind, "round": status.round}
    return out


def replay_transcript(inst: Instance, payload: dict) -> GameState:
    """Apply a transcript to the initial state; verifies the instance digest."""
    digest = payload.get("instance_digest")
    if digest is not None and digest != instance_digest(inst):
        raise ValueError("transcript digest does not match instance")
    state = initial_state(inst)
    for obj in payload["moves"]:
        state = apply_move(state, move_from_json(obj))
    return state
