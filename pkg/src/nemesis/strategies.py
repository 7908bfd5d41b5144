"""Named strategies for matches and the engine policy used by play/serve.

A strategy is a callable GameState -> Move | None (None resigns).  The
strategies here are deterministic functions of the visible state except
`random`, which carries a seeded generator.
"""

from __future__ import annotations

import random as _random
from collections import deque
from typing import Callable, Optional

from .exact import CatValue, SearchConfig, Verdict, cat_move_values, solve_from_state
from .fast import blizzard_win_sets, escape_tree_strategy, find_escape_tree, find_escape_tree_near
from .exact import BudgetExhausted
from .graph import Edge, Instance, Variant, edge_key
from .rules import Delete, GameState, Move, Pass, Phase, Step, Strategy, legal_moves


# ---------------------------------------------------------------------------
# Small graph helpers on the remaining multigraph
# ---------------------------------------------------------------------------

def _live_neighbors(state: GameState, v: str) -> list[str]:
    g = state.instance.graph
    index = g.edge_index()
    return [w for w in g.neighbors(v) if state.remaining[index[edge_key(v, w)]] > 0]


def _bfs_distances(state: GameState, source: str) -> dict[str, int]:
    dist = {source: 0}
    q = deque([source])
    while q:
        u = q.popleft()
        for w in _live_neighbors(state, u):
            if w not in dist:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def _remaining_exit_edges(state: GameState) -> list[Edge]:
    g = state.instance.graph
    out = []
    for e, m in zip(g.edge_list(), state.remaining):
        if m > 0 and (g.is_exit(e[0]) or g.is_exit(e[1])):
            out.append(e)
    return out


def _exit_copies_at(state: GameState, v: str) -> int:
    g = state.instance.graph
    index = g.edge_index()
    return sum(
        state.remaining[index[edge_key(v, w)]]
        for w in g.neighbors(v)
        if g.is_exit(w)
    )


# ---------------------------------------------------------------------------
# Fugitive scripts
# ---------------------------------------------------------------------------

def shortest_path_fugitive(state: GameState) -> Optional[Move]:
    """Step along a shortest remaining path to the nearest exit."""
    g = state.instance.graph
    dist = _bfs_distances(state, state.position)
    exits = [x for x in g.exits if x in dist]
    if exits:
        target = min(exits, key=lambda x: (dist[x], x))
        # walk backwards from the target to find the first step
        path_next = {target: None}
        frontier = [target]
        while frontier and state.position not in path_next:
            nxt = []
            for u in frontier:
                for w in _live_neighbors(state, u):
                    if w not in path_next and dist.get(w, -1) == dist[u] - 1:
                        path_next[w] = u
                        nxt.append(w)
            frontier = nxt
        step_to = path_next.get(state.position)
        if step_to is not None:
            return Step(step_to)
    moves = legal_moves(state)
    return moves[0] if moves else None


def make_bet_descent(inst: Instance, node_budget: int | None = 200_000) -> Strategy:
    """Search for an escape tree near the start; descend it if found, else
    fall back to shortest-path play."""
    try:
        tree = find_escape_tree_near(inst, node_budget)
    except BudgetExhausted:
        tree = None
    descend = escape_tree_strategy(tree) if tree is not None else None

    def play(state: GameState) -> Optional[Move]:
        if descend is not None:
            return descend(state)
        return shortest_path_fugitive(state)

    return play


# ---------------------------------------------------------------------------
# Adversary scripts
# ---------------------------------------------------------------------------

def reactive_blocker(state: GameState) -> Optional[Move]:
    """Delete the exit edge at the fugitive's vertex when there is one, else
    the nearest remaining exit edge, else anything."""
    g = state.instance.graph
    pos = state.position
    index = g.edge_index()
    for w in g.neighbors(pos):
        if g.is_exit(w) and state.remaining[index[edge_key(pos, w)]] > 0:
            return Delete(pos, w)
    exit_edges = _remaining_exit_edges(state)
    if exit_edges:
        dist = _bfs_distances(state, pos)

        def closeness(e: Edge) -> tuple[int, Edge]:
            d = min(dist.get(e[0], 1 << 30), dist.get(e[1], 1 << 30))
            return (d, e)

        u, v = min(exit_edges, key=closeness)
        return Delete(u, v)
    moves = legal_moves(state)
    return moves[0] if moves else None


def make_random(seed: int) -> Strategy:
    rng = _random.Random(seed)

    def play(state: GameState) -> Optional[Move]:
        moves = legal_moves(state)
        return rng.choice(moves) if moves else None

    return play


def make_optimal(budget: int = 200_000) -> Strategy:
    cfg = SearchConfig(node_budget=budget)

    def play(state: GameState) -> Optional[Move]:
        return engine_move(state, cfg)

    return play


# ---------------------------------------------------------------------------
# Engine policy: exact within budget, documented heuristics otherwise
# ---------------------------------------------------------------------------

def engine_move(state: GameState, cfg: SearchConfig | None = None) -> Optional[Move]:
    cfg = cfg or SearchConfig(node_budget=200_000)
    variant = state.instance.variant
    if variant is Variant.CATHERDING:
        return _cat_engine_move(state, cfg)
    verdict = solve_from_state(state, cfg)
    if verdict.exact and verdict.pv:
        return verdict.pv[0]
    if variant is Variant.BLIZZARD:
        return _blizzard_heuristic(state)
    if state.phase is Phase.FUGITIVE:
        return _fugitive_heuristic(state, cfg)
    return _adversary_heuristic(state)


def _cat_engine_move(state: GameState, cfg: SearchConfig) -> Optional[Move]:
    try:
        values = cat_move_values(state, cfg)
    except (BudgetExhausted, RecursionError):
        values = []
    if values:
        if state.phase is Phase.FUGITIVE:
            return max(values, key=lambda mv: mv[1])[0]
        return min(values, key=lambda mv: mv[1])[0]
    moves = legal_moves(state)
    if not moves:
        return None
    if state.phase is Phase.FUGITIVE:
        # keep options open: move to the neighbor with the most live edges
        return max(
            (m for m in moves if isinstance(m, Step)),
            key=lambda m: len(_live_neighbors(state, m.to)),
            default=moves[0],
        )
    deletes = [m for m in moves if isinstance(m, Delete)]
    incident = [m for m in deletes if state.position in (m.u, m.v)]
    return (incident or deletes or moves)[0]


def _blizzard_heuristic(state: GameState) -> Optional[Move]:
    """Play by the winning-position ranks of the remaining graph."""
    from dataclasses import replace

    from .graph import MultiGraph

    g = state.instance.graph
    live_edges = {e: m for e, m in zip(g.edge_list(), state.remaining) if m > 0}
    live_graph = MultiGraph(g.vertices, live_edges)
    live_inst = replace(state.instance, graph=live_graph, layout=None)
    ranks, _ = blizzard_win_sets(live_inst)
    index = g.edge_index()
    if state.phase is Phase.FUGITIVE:
        options = _live_neighbors(state, state.position)
        if not options:
            return None
        exits = [w for w in options if g.is_exit(w)]
        if exits:
            return Step(exits[0])
        ranked = [w for w in options if w in ranks.rank]
        if ranked:
            return Step(min(ranked, key=lambda w: (ranks.rank[w], w)))
        return Step(options[0])
    # storm: cut the trapper's access into the winning set
    pos = state.position
    into_w = [
        w
        for w in g.neighbors(pos)
        if w in ranks.rank and state.remaining[index[edge_key(pos, w)]] > 0
    ]
    if into_w:
        w = min(into_w, key=lambda w: (ranks.rank[w], w))
        return Delete(pos, w)
    moves = legal_moves(state)
    return moves[0] if moves else None


def _fugitive_heuristic(state: GameState, cfg: SearchConfig) -> Optional[Move]:
    g = state.instance.graph
    pos = state.position
    index = g.edge_index()
    for w in g.neighbors(pos):
        if g.is_exit(w) and state.remaining[index[edge_key(pos, w)]] > 0:
            return Step(w)
    # escape tree in the remaining graph near the current position
    from .graph import MultiGraph

    live_edges = {e: m for e, m in zip(g.edge_list(), state.remaining) if m > 0}
    live = MultiGraph(g.vertices, live_edges)
    tree = None
    try:
        for candidate in [pos] + [w for w in live.neighbors(pos)]:
            tree = find_escape_tree(live, candidate, node_budget=50_000)
            if tree is not None:
                break
    except BudgetExhausted:
        tree = None
    if tree is not None:
        move = escape_tree_strategy(tree)(state)
        if move is not None:
            return move
    # otherwise aim for the nearest vertex still holding two exit copies
    dist = _bfs_distances(state, pos)
    targets = [v for v in g.sorted_vertices() if v in dist and _exit_copies_at(state, v) >= 2]
    if targets:
        target = min(targets, key=lambda v: (dist[v], v))
        if target != pos:
            came: dict[str, str] = {}
            q = deque([pos])
            seen = {pos}
            while q:
                u = q.popleft()
                for w in _live_neighbors(state, u):
                    if w not in seen:
                        seen.add(w)
                        came[w] = u
                        q.append(w)
            step = target
            while came.get(step) != pos:
                step = came[step]
                if step == pos:
                    break
            if step != pos:
                return Step(step)
    moves = legal_moves(state)
    return moves[0] if moves else None


def _adversary_heuristic(state: GameState) -> Optional[Move]:
    """Delete an edge from a minimum cut between the fugitive and the exits."""
    cut = _min_exit_cut(state)
    if cut:
        u, v = sorted(cut)[0]
        return Delete(u, v)
    moves = legal_moves(state)
    return moves[0] if moves else None


def _min_exit_cut(state: GameState) -> list[Edge]:
    """Minimum edge cut (by multiplicity) separating the position from all
    exits in the remaining graph; Edmonds-Karp on the small desk instances."""
    g = state.instance.graph
    source = state.position
    exits = set(g.exits)
    if not exits or g.is_exit(source):
        return []
    SINK = "\x00sink"
    cap: dict[tuple[str, str], int] = {}
    adj: dict[str, set[str]] = {SINK: set()}
    for v in g.vertices:
        adj.setdefault(v, set())
    for e, m in zip(g.edge_list(), state.remaining):
        if m <= 0:
            continue
        u, v = e
        for a, b in ((u, v), (v, u)):
            cap[(a, b)] = cap.get((a, b), 0) + m
            adj[a].add(b)
    big = 1 << 30
    for x in exits:
        cap[(x, SINK)] = big
        adj[x].add(SINK)
    flow: dict[tuple[str, str], int] = {}

    def residual(a: str, b: str) -> int:
        return cap.get((a, b), 0) - flow.get((a, b), 0) + flow.get((b, a), 0)

    while True:
        came: dict[str, str] = {}
        q = deque([source])
        seen = {source}
        while q and SINK not in seen:
            u = q.popleft()
            for w in sorted(adj[u]):
                if w not in seen and residual(u, w) > 0:
                    seen.add(w)
                    came[w] = u
                    q.append(w)
        if SINK not in seen:
            break
        # bottleneck along the path
        path = [SINK]
        while path[-1] != source:
            path.append(came[path[-1]])
        path.reverse()
        bottleneck = min(residual(a, b) for a, b in zip(path, path[1:]))
        for a, b in zip(path, path[1:]):
            back = min(flow.get((b, a), 0), bottleneck)
            if back:
                flow[(b, a)] -= back
            rest = bottleneck - back
            if rest:
                flow[(a, b)] = flow.get((a, b), 0) + rest
    # cut = live edges from the residual-reachable side to the rest
    reachable = {source}
    q = deque([source])
    while q:
        u = q.popleft()
        for w in sorted(adj[u]):
            if w not in reachable and residual(u, w) > 0:
                reachable.add(w)
                q.append(w)
    cut = []
    for e, m in zip(g.edge_list(), state.remaining):
        if m <= 0:
            continue
        u, v = e
        if (u in reachable) != (v in reachable):
            cut.append(e)
    return cut


# ---------------------------------------------------------------------------
# Registry for the CLI
# ---------------------------------------------------------------------------

def make_strategy(name: str, inst: Instance, seed: int | None = None, budget: int = 200_000) -> Strategy:
    """Instantiate a named script for the given instance."""
    if name == "shortest-path":
        return shortest_path_fugitive
    if name == "bet-descent":
        return make_bet_descent(inst)
    if name == "reactive-blocker":
        return reactive_blocker
    if name == "random":
        return make_random(seed if seed is not None else 0)
    if name == "optimal":
        return make_optimal(budget)
    if name == "corner-cut":
        from .reductions import corner_cut_script

        return corner_cut_script(inst)
    raise ValueError(f"unknown strategy {name!r}")


STRATEGY_NAMES = [
    "bet-descent",
    "corner-cut",
    "optimal",
    "random",
    "reactive-blocker",
    "shortest-path",
]
