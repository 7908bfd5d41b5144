"""Exact (exponential-time) solvers: the oracle for every variant.

AND/OR minimax with memoization.  For the unrestricted-deletion game the
search applies three safe prunings plus a relevance argument:

* P1 (no revisit): a winning fugitive never needs to revisit a vertex, so
  fugitive steps to visited vertices are skipped and a fugitive with no
  unvisited neighbor loses the line.
* P2 (multiplicity cap): any multiplicity above the vertex count behaves as
  infinite, so initial multiplicities are capped there.
* P3 (dominated deletions): with P1 on, at most one deletion happens per
  remaining unvisited vertex, so an edge whose multiplicity exceeds that
  count can never be exhausted; deleting from it is equivalent to passing.
* Relevance: a winning fugitive certificate only reads the edges it uses
  ("support"); adversary deletions outside the support are equivalent to a
  pass, collapsing AND nodes from |E| branches to |support| branches.  If
  the fugitive loses even when the adversary passes, he loses against any
  deletion (deleting never helps the fugitive).

P3 and the relevance collapse both lean on the no-revisit bound, so they are
silently disabled when no_revisit is off.  Blizzard needs none of this: the
storm always has an incident edge to delete, so every round strictly shrinks
the edge multiset and plain memoized recursion over (position, multiset)
terminates.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field, replace
from typing import Callable, Optional

from .graph import Edge, Instance, Variant, edge_key
from .rules import (
    Delete,
    GameState,
    IllegalMove,
    Move,
    Pass,
    Phase,
    Status,
    Step,
    Strategy,
    apply_move,
    game_status,
    initial_state,
    legal_moves,
)

if sys.getrecursionlimit() < 50_000:
    sys.setrecursionlimit(50_000)


class BudgetExhausted(Exception):
    pass


@dataclass
class SearchConfig:
    no_revisit: bool = True
    node_budget: int | None = None
    multiplicity_cap: int | None = None  # None -> |V| of the instance
    dominated_deletion_pruning: bool = True  # P3
    relevance_pruning: bool = True

    def __post_init__(self) -> None:
        if self.multiplicity_cap is not None and self.multiplicity_cap < 1:
            raise ValueError("multiplicity_cap must be at least 1")
        if self.node_budget is not None and self.node_budget < 1:
            raise ValueError("node_budget must be at least 1")

    def effective_p3(self) -> bool:
        return self.dominated_deletion_pruning and self.no_revisit

    def effective_relevance(self) -> bool:
        return self.relevance_pruning and self.no_revisit


@dataclass
class Verdict:
    winner: str  # "fugitive" | "adversary" | "unknown"
    exact: bool
    nodes: int
    pv: list[Move] | None = None
    certificate: dict | None = None

    def to_json(self) -> dict:
        from .rules import move_to_json

        out = {
            "winner": self.winner,
            "exact": self.exact,
            "nodes": self.nodes,
            "pv": [move_to_json(m) for m in self.pv] if self.pv is not None else None,
        }
        if self.certificate is not None:
            out["certificate"] = self.certificate
        return out


@dataclass
class CatValue:
    value: int | None
    exact: bool
    nodes: int
    lower: int = 0
    upper: int = 0


# ---------------------------------------------------------------------------
# Instance encoding
# ---------------------------------------------------------------------------

class _Encoded:
    """Integer encoding of an instance for the inner search loops."""

    def __init__(self, inst: Instance, cap: int | None):
        g = inst.graph
        self.inst = inst
        self.ids: list[str] = g.sorted_vertices()
        self.vidx: dict[str, int] = {v: i for i, v in enumerate(self.ids)}
        self.edges: list[Edge] = g.edge_list()
        self.eidx: dict[Edge, int] = g.edge_index()
        self.n = len(self.ids)
        self.exit_mask = 0
        for v in g.exits:
            self.exit_mask |= 1 << self.vidx[v]
        self.initial = tuple(
            min(g.edges[e], cap) if cap is not None else g.edges[e] for e in self.edges
        )
        # hop distance to the nearest exit on the initial graph (move ordering)
        dist = [None] * self.n
        frontier = [self.vidx[v] for v in g.exits]
        for i in frontier:
            dist[i] = 0
        d = 0
        while frontier:
            nxt = []
            d += 1
            for i in frontier:
                for w in g.neighbors(self.ids[i]):
                    j = self.vidx[w]
                    if dist[j] is None:
                        dist[j] = d
                        nxt.append(j)
            frontier = nxt
        big = self.n + 1
        self.exit_dist = [big if x is None else x for x in dist]
        # adjacency ordered by (distance to exit, canonical)
        self.adj: list[list[tuple[int, int]]] = []
        for i, v in enumerate(self.ids):
            entries = []
            for w in g.neighbors(v):
                j = self.vidx[w]
                entries.append((self.exit_dist[j], j, self.eidx[edge_key(v, w)]))
            entries.sort()
            self.adj.append([(e, j) for (_, j, e) in entries])
        # Edges whose initial multiplicity reaches the vertex count can never
        # be exhausted within a no-revisit horizon; with P3 active the search
        # only needs to carry the multiplicities of the others.
        self.mutable: list[int] = [
            e for e, m in enumerate(self.initial) if m < self.n
        ]
        self.mslot: list[int] = [-1] * len(self.edges)
        for slot, e in enumerate(self.mutable):
            self.mslot[e] = slot
        self._edge_order_cache: dict[int, list[int]] = {}
        self._pair_dist: list[list[int]] | None = None
        if self.n <= 256:
            self._pair_dist = []
            for i in range(self.n):
                row = [big] * self.n
                row[i] = 0
                frontier = [i]
                d = 0
                while frontier:
                    nxt = []
                    d += 1
                    for a in frontier:
                        for (_, b) in self.adj[a]:
                            if row[b] > d:
                                row[b] = d
                                nxt.append(b)
                    frontier = nxt
                self._pair_dist.append(row)

    def edge_order_for(self, pos: int) -> list[int]:
        """Edge indices ordered by (distance to pos, canonical)."""
        order = self._edge_order_cache.get(pos)
        if order is None:
            if self._pair_dist is None:
                order = list(range(len(self.edges)))
            else:
                row = self._pair_dist[pos]

                def keyf(e: int) -> tuple[int, int]:
                    u, v = self.edges[e]
                    return (min(row[self.vidx[u]], row[self.vidx[v]]), e)

                order = sorted(range(len(self.edges)), key=keyf)
            self._edge_order_cache[pos] = order
        return order

    def exit_reachable(self, pos: int, rem: tuple[int, ...]) -> bool:
        """Is any exit reachable from pos through remaining edges?"""
        if 0 not in rem:
            # nothing exhausted yet: connectivity equals the initial graph
            return self._initially_reachable(pos)
        if (1 << pos) & self.exit_mask:
            return True
        seen = 1 << pos
        stack = [pos]
        while stack:
            a = stack.pop()
            for (e, b) in self.adj[a]:
                bit = 1 << b
                if seen & bit or rem[e] <= 0:
                    continue
                if self.exit_mask & bit:
                    return True
                seen |= bit
                stack.append(b)
        return False

    def _initially_reachable(self, pos: int) -> bool:
        cache = getattr(self, "_init_reach", None)
        if cache is None:
            cache = [None] * self.n
            self._init_reach = cache
        if cache[pos] is None:
            if (1 << pos) & self.exit_mask:
                cache[pos] = True
            else:
                seen = 1 << pos
                stack = [pos]
                found = False
                while stack:
                    a = stack.pop()
                    for (_, b) in self.adj[a]:
                        bit = 1 << b
                        if seen & bit:
                            continue
                        if self.exit_mask & bit:
                            found = True
                            stack = []
                            break
                        seen |= bit
                        stack.append(b)
                cache[pos] = found
        return cache[pos]


# ---------------------------------------------------------------------------
# Nemesis / cat-herding style search (unrestricted deletions)
# ---------------------------------------------------------------------------

_EMPTY: frozenset[int] = frozenset()


class _NemesisSearch:
    """Carries only the multiplicities of edges the adversary could ever
    exhaust; with P3 active the unbreakable bulk stays out of the state."""

    def __init__(self, enc: _Encoded, cfg: SearchConfig):
        self.enc = enc
        self.cfg = cfg
        self.nodes = 0
        self.memo: dict = {}
        self.p1 = cfg.no_revisit
        self.p3 = cfg.effective_p3()
        self.rel = cfg.effective_relevance()
        if self.p3:
            self.track = enc.mutable
        else:
            self.track = list(range(len(enc.edges)))
        self.slot = [-1] * len(enc.edges)
        for s, e in enumerate(self.track):
            self.slot[e] = s
        self.initial_short = tuple(enc.initial[e] for e in self.track)

    def shorten(self, full: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(full[e] for e in self.track)

    def _tick(self) -> None:
        self.nodes += 1
        budget = self.cfg.node_budget
        if budget is not None and self.nodes > budget:
            raise BudgetExhausted()

    def _mult(self, e: int, rem: tuple[int, ...]) -> int:
        s = self.slot[e]
        return rem[s] if s >= 0 else self.enc.initial[e]

    def _exit_reachable(self, pos: int, rem: tuple[int, ...]) -> bool:
        enc = self.enc
        if 0 not in rem:
            return enc._initially_reachable(pos)
        if (1 << pos) & enc.exit_mask:
            return True
        slot = self.slot
        seen = 1 << pos
        stack = [pos]
        while stack:
            a = stack.pop()
            for (e, b) in enc.adj[a]:
                bit = 1 << b
                if seen & bit:
                    continue
                s = slot[e]
                if s >= 0 and rem[s] <= 0:
                    continue
                if enc.exit_mask & bit:
                    return True
                seen |= bit
                stack.append(b)
        return False

    def fugitive_wins(self, pos: int, vis: int, rem: tuple[int, ...]):
        """Fugitive to move.  Returns (win, support) with support meaningful
        only on wins when relevance pruning is active."""
        enc = self.enc
        if (1 << pos) & enc.exit_mask:
            return True, _EMPTY
        key = (0, pos, vis, rem)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        self._tick()
        if not self._exit_reachable(pos, rem):
            res = (False, None)
            self.memo[key] = res
            return res
        result = (False, None)
        slot = self.slot
        for (e, q) in enc.adj[pos]:
            s = slot[e]
            if s >= 0 and rem[s] <= 0:
                continue
            qbit = 1 << q
            if self.p1 and (vis & qbit):
                continue
            if qbit & enc.exit_mask:
                result = (True, frozenset((e,)))
                break
            win, supp = self.adversary_node(q, vis | qbit, rem)
            if win:
                result = (True, (supp | {e}) if supp is not None else None)
                break
        self.memo[key] = result
        return result

    def adversary_node(self, pos: int, vis: int, rem: tuple[int, ...]):
        """Adversary to delete; returns (fugitive_wins, support)."""
        enc = self.enc
        if (1 << pos) & enc.exit_mask:
            return True, _EMPTY
        key = (1, pos, vis, rem)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        self._tick()
        if not self._exit_reachable(pos, rem):
            res = (False, None)
            self.memo[key] = res
            return res

        slot = self.slot
        if self.p3:
            unvisited = enc.n - bin(vis).count("1")

        def deletable(e: int) -> bool:
            s = slot[e]
            if s < 0:
                return False  # untracked: unbreakable under P3
            if rem[s] <= 0:
                return False
            return not (self.p3 and rem[s] > unvisited)

        order = enc.edge_order_for(pos)
        result = None
        if self.rel:
            # pass branch: if the fugitive loses even without a deletion he
            # loses against any deletion (edge monotonicity)
            win, supp = self.fugitive_wins(pos, vis, rem)
            if not win:
                result = (False, None)
            else:
                support = set(supp)
                checked: set[int] = set()
                while result is None:
                    pending = [
                        e for e in order if e in support and e not in checked and deletable(e)
                    ]
                    if not pending:
                        result = (True, frozenset(support))
                        break
                    for e in pending:
                        checked.add(e)
                        s = slot[e]
                        rem2 = rem[:s] + (rem[s] - 1,) + rem[s + 1 :]
                        win2, supp2 = self.fugitive_wins(pos, vis, rem2)
                        if not win2:
                            result = (False, None)
                            break
                        support |= supp2
        else:
            options = [e for e in order if deletable(e)]
            if not options:
                # nothing deletable (or everything dominated): pass
                result = self.fugitive_wins(pos, vis, rem)
            else:
                for e in options:
                    s = slot[e]
                    rem2 = rem[:s] + (rem[s] - 1,) + rem[s + 1 :]
                    win2, _ = self.fugitive_wins(pos, vis, rem2)
                    if not win2:
                        result = (False, None)
                        break
                if result is None:
                    result = (True, None)
        self.memo[key] = result
        return result


def _cap_for(inst: Instance, cfg: SearchConfig) -> int:
    return cfg.multiplicity_cap if cfg.multiplicity_cap is not None else len(inst.graph.vertices)


def solve_nemesis(inst: Instance, cfg: SearchConfig | None = None) -> Verdict:
    """Exact winner of a Nemesis instance."""
    if inst.variant is not Variant.NEMESIS:
        raise ValueError("solve_nemesis requires a nemesis-variant instance")
    cfg = cfg or SearchConfig()
    state = initial_state(inst)
    return _solve_nemesis_state(state, cfg)


def _solve_nemesis_state(state: GameState, cfg: SearchConfig) -> Verdict:
    inst = state.instance
    enc = _Encoded(inst, _cap_for(inst, cfg))
    search = _NemesisSearch(enc, cfg)
    pos = enc.vidx[state.position]
    vis = 1 << pos  # fresh no-revisit horizon from here on
    # The search and the principal variation live in the capped game; the
    # winner transfers to the original (capped copies can never run out
    # within the decisive horizon).
    capped = replace(
        state, remaining=tuple(min(m, c) for m, c in zip(state.remaining, enc.initial))
    )
    try:
        if state.phase is Phase.FUGITIVE:
            win, _ = search.fugitive_wins(pos, vis, search.shorten(capped.remaining))
        else:
            win, _ = search.adversary_node(pos, vis, search.shorten(capped.remaining))
    except (BudgetExhausted, RecursionError):
        return Verdict("unknown", False, search.nodes)
    winner = "fugitive" if win else "adversary"
    pv = None
    try:
        pv = _principal_variation_nemesis(capped, enc, search, cfg)
    except (BudgetExhausted, RecursionError):
        pv = None
    return Verdict(winner, True, search.nodes, pv=pv)


def _principal_variation_nemesis(
    state0: GameState, enc: _Encoded, search: _NemesisSearch, cfg: SearchConfig
) -> list[Move]:
    """Optimal line: the winning side keeps its win, the losing side plays the
    first reasonable move.  Ends at a terminal status or, when the fugitive
    has no unvisited neighbor left, at the no-revisit adjudication point."""
    pv: list[Move] = []
    state = state0
    vis = 1 << enc.vidx[state.position]
    limit = sum(state.remaining) + enc.n + 2

    while len(pv) < limit:
        status = game_status(state)
        if not status.ongoing:
            break
        pos = enc.vidx[state.position]
        rem = state.remaining
        short = search.shorten(rem)
        if state.phase is Phase.FUGITIVE:
            candidates = []
            for (e, q) in enc.adj[pos]:
                if rem[e] <= 0 or (vis & (1 << q)):
                    continue
                candidates.append(q)
            if not candidates:
                break  # stuck under the no-revisit rule: adversary wins
            chosen = None
            for q in candidates:
                qbit = 1 << q
                if (qbit & enc.exit_mask) or search.adversary_node(q, vis | qbit, short)[0]:
                    chosen = q
                    break
            if chosen is None:
                chosen = candidates[0]
            vis |= 1 << chosen
            move: Move = Step(enc.ids[chosen])
        else:
            order = enc.edge_order_for(pos)
            live = [e for e in order if rem[e] > 0]
            if not live:
                move = Pass()
            else:
                chosen_e = None
                for e in live:
                    s = search.slot[e]
                    if s < 0:
                        continue  # unbreakable: deleting it refutes nothing
                    rem2 = short[:s] + (short[s] - 1,) + short[s + 1 :]
                    if not search.fugitive_wins(pos, vis, rem2)[0]:
                        chosen_e = e
                        break
                if chosen_e is None:
                    # no refutation exists (the fugitive wins): block like a
                    # sensible opponent anyway, preferring exit edges near him
                    def fallback_key(e: int) -> tuple:
                        u, v = enc.edges[e]
                        at_exit = (1 << enc.vidx[u]) & enc.exit_mask or (
                            1 << enc.vidx[v]
                        ) & enc.exit_mask
                        incident = state.position in (u, v)
                        return (not (at_exit and incident), not at_exit, rem[e], e)

                    chosen_e = min(live, key=fallback_key)
                u, v = enc.edges[chosen_e]
                move = Delete(u, v)
        state = apply_move(state, move)
        pv.append(move)
    return pv


# ---------------------------------------------------------------------------
# Blizzard
# ---------------------------------------------------------------------------

class _BlizzardSearch:
    """Memoized recursion on the remaining-edge multiset.

    The storm must delete an edge incident with the trapper, and one always
    exists at her turn, so every round strictly shrinks the multiset: the
    per-multiset winning-position computation never cycles.
    """

    def __init__(self, enc: _Encoded, cfg: SearchConfig):
        self.enc = enc
        self.cfg = cfg
        self.nodes = 0
        self.memo: dict = {}

    def _tick(self) -> None:
        self.nodes += 1
        budget = self.cfg.node_budget
        if budget is not None and self.nodes > budget:
            raise BudgetExhausted()

    def trapper_wins(self, pos: int, rem: tuple[int, ...]) -> bool:
        enc = self.enc
        if (1 << pos) & enc.exit_mask:
            return True
        key = (0, pos, rem)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        self._tick()
        if not enc.exit_reachable(pos, rem):
            self.memo[key] = False
            return False
        result = False
        for (e, q) in enc.adj[pos]:
            if rem[e] <= 0:
                continue
            if ((1 << q) & enc.exit_mask) or self.storm_node(q, rem):
                result = True
                break
        self.memo[key] = result
        return result

    def storm_node(self, pos: int, rem: tuple[int, ...]) -> bool:
        enc = self.enc
        if (1 << pos) & enc.exit_mask:
            return True
        key = (1, pos, rem)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        self._tick()
        if not enc.exit_reachable(pos, rem):
            self.memo[key] = False
            return False
        result = True
        deletable = [e for (e, _) in enc.adj[pos] if rem[e] > 0]
        for e in deletable:
            rem2 = rem[:e] + (rem[e] - 1,) + rem[e + 1 :]
            if not self.trapper_wins(pos, rem2):
                result = False
                break
        self.memo[key] = result
        return result


def solve_blizzard(inst: Instance, cfg: SearchConfig | None = None) -> Verdict:
    if inst.variant is not Variant.BLIZZARD:
        raise ValueError("solve_blizzard requires a blizzard-variant instance")
    cfg = cfg or SearchConfig()
    return _solve_blizzard_state(initial_state(inst), cfg)


def _solve_blizzard_state(state: GameState, cfg: SearchConfig) -> Verdict:
    enc = _Encoded(state.instance, None)  # no multiplicity cap: no-revisit bound unproven here
    search = _BlizzardSearch(enc, cfg)
    pos = enc.vidx[state.position]
    try:
        if state.phase is Phase.FUGITIVE:
            win = search.trapper_wins(pos, state.remaining)
        else:
            win = search.storm_node(pos, state.remaining)
    except (BudgetExhausted, RecursionError):
        return Verdict("unknown", False, search.nodes)
    pv = None
    try:
        pv = _principal_variation_blizzard(state, enc, search)
    except (BudgetExhausted, RecursionError):
        pv = None
    return Verdict("fugitive" if win else "adversary", True, search.nodes, pv=pv)


def _principal_variation_blizzard(
    state0: GameState, enc: _Encoded, search: _BlizzardSearch
) -> list[Move]:
    pv: list[Move] = []
    state = state0
    limit = sum(state.remaining) * 2 + enc.n + 2
    while len(pv) < limit:
        if not game_status(state).ongoing:
            break
        pos = enc.vidx[state.position]
        rem = state.remaining
        if state.phase is Phase.FUGITIVE:
            steps = [(e, q) for (e, q) in enc.adj[pos] if rem[e] > 0]
            if not steps:
                break
            chosen = steps[0][1]
            for (e, q) in steps:
                if ((1 << q) & enc.exit_mask) or search.storm_node(q, rem):
                    chosen = q
                    break
            move: Move = Step(enc.ids[chosen])
        else:
            deletable = [e for (e, _) in enc.adj[pos] if rem[e] > 0]
            if not deletable:
                move = Pass()
            else:
                chosen_e = deletable[0]
                for e in deletable:
                    rem2 = rem[:e] + (rem[e] - 1,) + rem[e + 1 :]
                    if not search.trapper_wins(pos, rem2):
                        chosen_e = e
                        break
                u, v = enc.edges[chosen_e]
                move = Delete(u, v)
        state = apply_move(state, move)
        pv.append(move)
    return pv


# ---------------------------------------------------------------------------
# Cat herding value
# ---------------------------------------------------------------------------

class _CatSearch:
    def __init__(self, enc: _Encoded, cfg: SearchConfig):
        self.enc = enc
        self.cfg = cfg
        self.nodes = 0
        self.memo: dict = {}

    def _tick(self) -> None:
        self.nodes += 1
        budget = self.cfg.node_budget
        if budget is not None and self.nodes > budget:
            raise BudgetExhausted()

    def cat_moves(self, pos: int, rem: tuple[int, ...]) -> int:
        """Rounds the cat survives moving from pos with edge multiset rem."""
        key = (0, pos, rem)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        self._tick()
        best = 0
        for (e, q) in self.enc.adj[pos]:
            if rem[e] <= 0:
                continue
            val = 1 + self.herder_node(q, rem)
            if val > best:
                best = val
        self.memo[key] = best
        return best

    def herder_node(self, pos: int, rem: tuple[int, ...]) -> int:
        key = (1, pos, rem)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        self._tick()
        best: int | None = None
        for e, m in enumerate(rem):
            if m <= 0:
                continue
            rem2 = rem[:e] + (m - 1,) + rem[e + 1 :]
            val = self.cat_moves(pos, rem2)
            if best is None or val < best:
                best = val
                if best == 0:
                    break
        if best is None:
            best = 0  # no edges left anywhere: the cat is already trapped
        self.memo[key] = best
        return best


def cat_value(inst: Instance, cfg: SearchConfig | None = None) -> CatValue:
    """Rounds the cat survives under optimal play by both sides."""
    if inst.variant is not Variant.CATHERDING:
        raise ValueError("cat_value requires a cat-herding instance")
    if inst.graph.exits:
        raise ValueError("cat-herding instances must not contain exits")
    cfg = cfg or SearchConfig()
    enc = _Encoded(inst, None)
    search = _CatSearch(enc, cfg)
    total = sum(enc.initial)
    try:
        value = search.cat_moves(enc.vidx[inst.start], enc.initial)
    except (BudgetExhausted, RecursionError):
        return CatValue(None, False, search.nodes, lower=0, upper=total)
    return CatValue(value, True, search.nodes, lower=value, upper=value)


def cat_move_values(state: GameState, cfg: SearchConfig | None = None) -> list[tuple[Move, int]]:
    """Value of each legal move from a cat-herding state (both phases)."""
    cfg = cfg or SearchConfig()
    enc = _Encoded(state.instance, None)
    search = _CatSearch(enc, cfg)
    pos = enc.vidx[state.position]
    out: list[tuple[Move, int]] = []
    if state.phase is Phase.FUGITIVE:
        for (e, q) in enc.adj[pos]:
            if state.remaining[e] <= 0:
                continue
            out.append((Step(enc.ids[q]), 1 + search.herder_node(q, state.remaining)))
    else:
        for e, m in enumerate(state.remaining):
            if m <= 0:
                continue
            rem2 = state.remaining[:e] + (m - 1,) + state.remaining[e + 1 :]
            u, v = enc.edges[e]
            out.append((Delete(u, v), search.cat_moves(pos, rem2)))
    return out


# ---------------------------------------------------------------------------
# Best-response engines against scripted strategies
# ---------------------------------------------------------------------------

def best_response_fugitive(
    inst: Instance, adversary_script: Strategy, cfg: SearchConfig | None = None
) -> Verdict:
    """Search all fugitive lines against a deterministic adversary script.

    The script must be a function of the visible position / remaining edges /
    visited set (results are memoized on those).  A script may expose a
    `hopeless(state)` hook: a sound predicate meaning no fugitive line can win
    from the state; the search prunes there.
    """
    cfg = cfg or SearchConfig()
    nodes = 0
    memo: dict = {}
    hopeless = getattr(adversary_script, "hopeless", None)

    def explore(state: GameState) -> bool:
        nonlocal nodes
        nodes += 1
        if cfg.node_budget is not None and nodes > cfg.node_budget:
            raise BudgetExhausted()
        status = game_status(state)
        if not status.ongoing:
            return status.kind == "fugitive_won"
        key = (state.position, state.visited, state.remaining, state.phase)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if state.phase is Phase.FUGITIVE:
            result = False
            if not (hopeless is not None and hopeless(state)):
                for move in legal_moves(state, no_revisit=cfg.no_revisit):
                    if explore(apply_move(state, move)):
                        result = True
                        break
        else:
            move = adversary_script(state)
            if move is None:
                result = True  # adversary resigned this line
            else:
                result = explore(apply_move(state, move))
        memo[key] = result
        return result

    try:
        win = explore(initial_state(inst))
    except (BudgetExhausted, RecursionError):
        return Verdict("unknown", False, nodes)
    pv = None
    if win:
        pv = _replay_winning_line(
            initial_state(inst),
            searcher_wins=explore,
            chooser_phase=Phase.FUGITIVE,
            scripted=adversary_script,
            candidates=lambda s: legal_moves(s, no_revisit=cfg.no_revisit),
        )
    return Verdict("fugitive" if win else "adversary", True, nodes, pv=pv)


def _replay_winning_line(
    state: GameState,
    searcher_wins: Callable[[GameState], bool],
    chooser_phase: Phase,
    scripted: Strategy,
    candidates: Callable[[GameState], list[Move]],
) -> list[Move] | None:
    """Rebuild a winning line for the searching side: at its own turns pick
    the first move that keeps `searcher_wins` true, at the other side's
    turns follow the script."""
    line: list[Move] = []
    limit = sum(state.remaining) * 2 + len(state.instance.graph.vertices) + 2
    while len(line) < limit:
        if not game_status(state).ongoing:
            break
        if state.phase is chooser_phase:
            chosen = None
            for move in candidates(state):
                if searcher_wins(apply_move(state, move)):
                    chosen = move
                    break
            if chosen is None:
                return None
            move = chosen
        else:
            move = scripted(state)
            if move is None:
                break
        state = apply_move(state, move)
        line.append(move)
    return line


def best_response_adversary(
    inst: Instance, fugitive_script: Strategy, cfg: SearchConfig | None = None
) -> Verdict:
    """Search all adversary deletion lines against a deterministic fugitive
    script.  Dominated deletions (P3) collapse to a single representative."""
    cfg = cfg or SearchConfig()
    nodes = 0
    memo: dict = {}
    n = len(inst.graph.vertices)
    p3 = cfg.effective_p3()

    def adversary_options(state: GameState) -> list[Move]:
        moves = legal_moves(state)
        deletes = [m for m in moves if isinstance(m, Delete)]
        if not deletes:
            return moves  # just the Pass
        if not p3:
            return deletes
        unvisited = n - len(state.visited)
        index = state.instance.graph.edge_index()
        live = [m for m in deletes if state.remaining[index[m.edge]] <= unvisited]
        # dominated deletions are interchangeable: keep one representative
        return live if live else deletes[:1]

    def explore(state: GameState) -> bool:
        """True when the adversary wins every continuation."""
        nonlocal nodes
        nodes += 1
        if cfg.node_budget is not None and nodes > cfg.node_budget:
            raise BudgetExhausted()
        status = game_status(state)
        if not status.ongoing:
            return status.kind != "fugitive_won"
        key = (state.position, state.visited, state.remaining, state.phase)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if state.phase is Phase.ADVERSARY:
            result = False
            for move in adversary_options(state):
                if explore(apply_move(state, move)):
                    result = True
                    break
        else:
            moves = legal_moves(state, no_revisit=cfg.no_revisit)
            if not moves:
                result = True  # fugitive stuck under the no-revisit rule
            else:
                move = fugitive_script(state)
                if move is None:
                    result = True
                else:
                    result = explore(apply_move(state, move))
        memo[key] = result
        return result

    try:
        adversary_wins = explore(initial_state(inst))
    except (BudgetExhausted, RecursionError):
        return Verdict("unknown", False, nodes)
    pv = None
    if adversary_wins:
        pv = _replay_winning_line(
            initial_state(inst),
            searcher_wins=explore,
            chooser_phase=Phase.ADVERSARY,
            scripted=fugitive_script,
            candidates=adversary_options,
        )
    return Verdict("adversary" if adversary_wins else "fugitive", True, nodes, pv=pv)


# ---------------------------------------------------------------------------
# Dispatch helpers
# ---------------------------------------------------------------------------

def solve_from_state(state: GameState, cfg: SearchConfig | None = None) -> Verdict:
    """Exact verdict from an arbitrary mid-game state (used for hints).

    For the no-revisit pruning the visited set is reset to the current
    position: from any reachable state a winning fugitive can win without
    revisiting vertices he visits from now on.
    """
    cfg = cfg or SearchConfig()
    variant = state.instance.variant
    if not game_status(state).ongoing:
        status = game_status(state)
        winner = "fugitive" if status.kind == "fugitive_won" else "adversary"
        return Verdict(winner, True, 0, pv=[])
    if variant is Variant.NEMESIS:
        return _solve_nemesis_state(state, cfg)
    if variant is Variant.BLIZZARD:
        return _solve_blizzard_state(state, cfg)
    raise ValueError("cat herding has an integer value, not a winner; use cat_move_values")


def solve_instance(inst: Instance, cfg: SearchConfig | None = None) -> Verdict:
    if inst.variant is Variant.NEMESIS:
        return solve_nemesis(inst, cfg)
    if inst.variant is Variant.BLIZZARD:
        return solve_blizzard(inst, cfg)
    raise ValueError("cat herding has an integer value, not a winner; use cat_value")
