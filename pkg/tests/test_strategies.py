"""Named scripts and the engine policy (exact within budget, heuristics past it)."""

import random

import pytest

from nemesis.exact import SearchConfig
from nemesis.graph import Variant, VertexKind, make_instance
from nemesis.instances import as_variant, named_instances, one_door, rank_chain, two_door
from nemesis.reductions import corner_cut_script, grid_instance
from nemesis.rules import (
    Delete,
    Phase,
    Step,
    apply_move,
    game_status,
    initial_state,
    legal_moves,
    run_match,
)
from nemesis.strategies import (
    engine_move,
    make_random,
    make_strategy,
    reactive_blocker,
    shortest_path_fugitive,
)

R, X = VertexKind.REGULAR, VertexKind.EXIT


def test_shortest_path_heads_for_the_nearest_exit():
    state = initial_state(rank_chain())
    assert shortest_path_fugitive(state) == Step("c")


def test_reactive_blocker_cuts_the_exit_at_the_fugitive():
    state = apply_move(initial_state(one_door()), Step("a"))
    assert reactive_blocker(state) == Delete("a", "t")


def test_reactive_blocker_prefers_the_nearest_exit_edge():
    inst = make_instance(
        {"s": R, "a": R, "b": R, "t1": X, "t2": X},
        [("s", "a", 1), ("a", "b", 1), ("b", "t1", 1), ("s", "t2", 1)],
        "b",
    )
    state = apply_move(initial_state(inst), Step("t1"))
    # fugitive already on the exit: blocker is never consulted; back up a step
    state = initial_state(inst)
    state = apply_move(state, Step("a"))
    move = reactive_blocker(state)
    assert move == Delete("b", "t1") or move == Delete("s", "t2")
    # distance from a: t1 edge at distance 1 (via b), t2 edge at distance 1 (via s);
    # canonical tie-break picks (b, t1)
    assert move == Delete("b", "t1")


def test_random_strategy_is_seed_deterministic():
    moves_a = run_match(rank_chain(), make_random(3), make_random(4)).transcript
    moves_b = run_match(rank_chain(), make_random(3), make_random(4)).transcript
    assert moves_a == moves_b


def test_engine_move_is_always_legal_even_on_tiny_budget():
    rng = random.Random(5)
    from corpus import random_multigraph

    for _ in range(25):
        inst = random_multigraph(rng)
        state = initial_state(inst)
        guard = 0
        while game_status(state).ongoing and guard < 40:
            move = engine_move(state, SearchConfig(node_budget=5))
            assert move is not None
            assert move in legal_moves(state)
            state = apply_move(state, move)
            guard += 1


def test_engine_plays_perfectly_on_two_door():
    # engine as adversary cannot save the two-door game, but as fugitive it wins
    state = initial_state(two_door())
    move = engine_move(state, SearchConfig(node_budget=100_000))
    assert move == Step("a")


def test_engine_blizzard_uses_rank_heuristic_when_budget_dies():
    inst = as_variant(rank_chain(), Variant.BLIZZARD)
    state = initial_state(inst)
    move = engine_move(state, SearchConfig(node_budget=2))
    assert move == Step("c")  # toward the winning set


def test_engine_cat_moves():
    tri = make_instance(
        {"a": R, "b": R, "c": R},
        [("a", "b", 1), ("b", "c", 1), ("a", "c", 1)],
        "a",
        Variant.CATHERDING,
    )
    state = initial_state(tri)
    move = engine_move(state, SearchConfig(node_budget=100_000))
    assert isinstance(move, Step)
    state = apply_move(state, move)
    herder = engine_move(state, SearchConfig(node_budget=100_000))
    assert isinstance(herder, Delete)
    # optimal herding kills the opposite edge, trapping the cat at round 2
    state = apply_move(state, herder)
    result_edges = [m for m, r in zip(state.remaining, state.remaining)]
    assert sum(state.remaining) == 2


def test_make_strategy_rejects_unknown_names():
    with pytest.raises(ValueError):
        make_strategy("does-not-exist", two_door())


def test_corner_cut_hopeless_predicate_conditions():
    grid = grid_instance(13, 13)  # center start: four steps cannot reach an exit
    script = corner_cut_script(grid)
    state = initial_state(grid)
    # before any cuts: not hopeless (the script still owes its corner cuts)
    assert not script.hopeless(state)
    # play four rounds: fugitive wanders the interior, script cuts corners
    for _ in range(4):
        move = next(m for m in legal_moves(state, no_revisit=True) if isinstance(m, Step))
        state = apply_move(state, move)
        state = apply_move(state, script(state))
    assert state.round == 4
    # all corners now hold a single exit copy and the fugitive is interior
    assert script.hopeless(state)


def test_corner_cut_not_hopeless_when_fugitive_holds_an_exit_edge():
    grid = grid_instance(5, 5, start=(0, 1))  # boundary start with its own exit
    script = corner_cut_script(grid)
    state = initial_state(grid)
    state = apply_move(state, Step("g00x00"))  # step onto a corner
    state = apply_move(state, script(state))
    # the fugitive may be standing next to a surviving exit copy: the
    # predicate must stay quiet whenever his vertex still has one
    if any(
        state.instance.graph.is_exit(w) and state.multiplicity(state.position, w) > 0
        for w in state.instance.graph.neighbors(state.position)
    ):
        assert not script.hopeless(state)
