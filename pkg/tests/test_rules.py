"""Referee: legal moves, transitions, terminal detection, match loop."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from nemesis.graph import Variant, VertexKind, make_instance
from nemesis.instances import as_variant, named_instances, one_door, two_door
from nemesis.rules import (
    Delete,
    IllegalMove,
    Pass,
    Phase,
    Step,
    apply_move,
    game_status,
    initial_state,
    legal_moves,
    move_from_json,
    move_to_json,
    replay_transcript,
    run_match,
    transcript_to_json,
)

from corpus import random_multigraph

R, X = VertexKind.REGULAR, VertexKind.EXIT


def test_single_edge_gives_single_step():
    state = initial_state(two_door())
    assert legal_moves(state) == [Step("a")]


def test_all_edges_deletable_after_step():
    state = apply_move(initial_state(two_door()), Step("a"))
    moves = legal_moves(state)
    assert moves == [Delete("a", "s"), Delete("a", "t1"), Delete("a", "t2")]


def test_blizzard_restricts_deletions_to_incident_edges():
    inst = make_instance(
        {"s": R, "a": R, "b": R, "t1": X, "t2": X},
        [("s", "a", 1), ("s", "b", 1), ("a", "t1", 1), ("a", "t2", 1), ("b", "t1", 1)],
        "s",
        Variant.BLIZZARD,
    )
    state = apply_move(initial_state(inst), Step("a"))
    moves = legal_moves(state)
    assert all(isinstance(m, Delete) and "a" in (m.u, m.v) for m in moves)
    assert len(moves) == 3


def test_no_revisit_excludes_visited_targets():
    state = initial_state(two_door())
    state = apply_move(state, Step("a"))
    state = apply_move(state, Delete("a", "t1"))
    assert Step("s") in legal_moves(state)
    assert Step("s") not in legal_moves(state, no_revisit=True)


def test_delete_decrements_multiplicity():
    inst = make_instance({"s": R, "x": X}, [("s", "x", 2)], "s")
    state = apply_move(initial_state(inst), Step("x"))
    # fugitive already on the exit: the game is over before any deletion
    assert game_status(state).kind == "fugitive_won"


def test_delete_keeps_edge_usable_until_exhausted():
    inst = make_instance(
        {"s": R, "a": R, "x": X}, [("s", "a", 1), ("a", "x", 2)], "s"
    )
    state = apply_move(initial_state(inst), Step("a"))
    state = apply_move(state, Delete("a", "x"))
    assert state.multiplicity("a", "x") == 1
    assert Step("x") in legal_moves(state)
    state = apply_move(state, Step("x"))
    assert game_status(state).kind == "fugitive_won"


def test_exhausted_edge_disappears():
    inst = make_instance(
        {"s": R, "a": R, "x": X}, [("s", "a", 2), ("a", "x", 1)], "s"
    )
    state = apply_move(initial_state(inst), Step("a"))
    state = apply_move(state, Delete("a", "x"))
    assert state.multiplicity("a", "x") == 0
    assert game_status(state).kind == "adversary_won"


def test_pass_only_when_nothing_deletable():
    state = apply_move(initial_state(two_door()), Step("a"))
    with pytest.raises(IllegalMove):
        apply_move(state, Pass())


def test_status_start_on_exit_wins_immediately():
    inst = make_instance({"x": X, "s": R}, [("s", "x", 1)], "x")
    assert game_status(initial_state(inst)).kind == "fugitive_won"
    assert game_status(initial_state(inst)).round == 0


def test_status_blocked_door():
    state = apply_move(initial_state(one_door()), Step("a"))
    state = apply_move(state, Delete("a", "t"))
    status = game_status(state)
    assert status.kind == "adversary_won"


def test_catherding_isolated_start_is_trapped():
    inst = make_instance({"s": R}, [], "s", Variant.CATHERDING)
    assert game_status(initial_state(inst)).kind == "trapped"
    assert game_status(initial_state(inst)).round == 0


def test_illegal_step_rejected_with_reason():
    state = initial_state(two_door())
    with pytest.raises(IllegalMove, match="no remaining edge"):
        apply_move(state, Step("t1"))


def test_run_match_forced_win_on_two_door():
    from nemesis.strategies import make_bet_descent, reactive_blocker

    result = run_match(two_door(), make_bet_descent(two_door()), reactive_blocker)
    assert result.status.kind == "fugitive_won"
    assert result.status.round == 2


def test_run_match_one_door_always_lost():
    from nemesis.strategies import reactive_blocker, shortest_path_fugitive

    result = run_match(one_door(), shortest_path_fugitive, reactive_blocker)
    assert result.winner.value == "adversary"


def test_run_match_cap_zero_adjudicates_adversary():
    from nemesis.strategies import reactive_blocker, shortest_path_fugitive

    result = run_match(two_door(), shortest_path_fugitive, reactive_blocker, cap=0)
    assert result.status.kind == "adversary_won"
    assert "cap" in result.note


def test_illegal_strategy_move_forfeits():
    def cheating_fugitive(state):
        return Step("t1")  # not adjacent to the start

    from nemesis.strategies import reactive_blocker

    result = run_match(two_door(), cheating_fugitive, reactive_blocker)
    assert result.forfeited_by == "fugitive"
    assert result.winner.value == "adversary"


def _random_playout(seed):
    rng = random.Random(seed)
    inst = random_multigraph(rng)
    state = initial_state(inst)
    moves = []
    while True:
        if not game_status(state).ongoing:
            break
        options = legal_moves(state)
        if not options:
            break
        move = rng.choice(options)
        state = apply_move(state, move)
        moves.append(move)
        if len(moves) > 200:
            break
    return inst, moves, state


@settings(max_examples=120, deadline=None)
@given(st.integers(min_value=0, max_value=10**9))
def test_edge_conservation_under_play(seed):
    inst, moves, state = _random_playout(seed)
    deletions = sum(1 for m in moves if isinstance(m, Delete))
    assert sum(state.remaining) == inst.graph.total_multiplicity() - deletions


@settings(max_examples=120, deadline=None)
@given(st.integers(min_value=0, max_value=10**9))
def test_transcript_replay_reproduces_state(seed):
    inst, moves, state = _random_playout(seed)
    payload = transcript_to_json(inst, moves, game_status(state))
    replayed = replay_transcript(inst, payload)
    assert replayed.position == state.position
    assert replayed.remaining == state.remaining
    assert replayed.round == state.round


@settings(max_examples=120, deadline=None)
@given(st.integers(min_value=0, max_value=10**9))
def test_half_turns_alternate(seed):
    _, moves, _ = _random_playout(seed)
    for i, move in enumerate(moves):
        if i % 2 == 0:
            assert isinstance(move, Step)
        else:
            assert isinstance(move, (Delete, Pass))


def test_forced_deletion_bounds_match_length():
    rng = random.Random(23)
    for _ in range(30):
        inst, moves, _ = _random_playout(rng.randrange(10**9))
        deletions = sum(1 for m in moves if isinstance(m, Delete))
        assert deletions <= inst.graph.total_multiplicity()


def test_move_json_round_trip():
    for move in (Step("a"), Delete("b", "a"), Pass()):
        assert move_from_json(move_to_json(move)) == move
