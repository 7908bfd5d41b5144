"""Exact solvers: oracle behavior, prunings, principal variations,
best-response engines."""

import itertools
import random

import pytest

from nemesis.exact import (
    SearchConfig,
    best_response_adversary,
    best_response_fugitive,
    cat_value,
    solve_blizzard,
    solve_from_state,
    solve_nemesis,
)
from nemesis.graph import Variant, VertexKind, make_instance, validate
from nemesis.instances import (
    as_variant,
    double_edge_door,
    named_instances,
    one_door,
    rank_chain,
    two_door,
)
from nemesis.rules import (
    Delete,
    Phase,
    Step,
    apply_move,
    game_status,
    initial_state,
    legal_moves,
)

from corpus import IDS, random_multigraph, random_simple

R, X = VertexKind.REGULAR, VertexKind.EXIT


def test_named_instance_winners():
    expected = {
        "I1": "fugitive",
        "I2": "adversary",
        "I3": "fugitive",
        "I4": "adversary",
        "I5": "fugitive",
    }
    for name, inst in named_instances().items():
        assert solve_nemesis(inst).winner == expected[name], name


def test_blizzard_named_instances():
    expected = {"I1": "fugitive", "I2": "adversary", "I5": "fugitive"}
    for name, want in expected.items():
        inst = as_variant(named_instances()[name], Variant.BLIZZARD)
        assert solve_blizzard(inst).winner == want, name


def test_solver_rejects_wrong_variant():
    with pytest.raises(ValueError):
        solve_nemesis(as_variant(two_door(), Variant.BLIZZARD))
    with pytest.raises(ValueError):
        solve_blizzard(two_door())


def test_winner_invariant_under_relabeling():
    rng = random.Random(31)
    for _ in range(25):
        inst = random_multigraph(rng)
        base = solve_nemesis(inst).winner
        perm = list(inst.graph.sorted_vertices())
        rng.shuffle(perm)
        mapping = {v: f"z{idx:02d}" for idx, v in enumerate(perm)}
        relabeled = make_instance(
            {mapping[v]: k for v, k in inst.graph.vertices.items()},
            [(mapping[u], mapping[v], m) for (u, v), m in inst.graph.edges.items()],
            mapping[inst.start],
        )
        assert solve_nemesis(relabeled).winner == base


def test_fugitive_win_is_monotone_in_edges():
    # enumerate all sub-multisets of a few small instances and check that
    # adding an edge copy never flips a fugitive win into a loss
    rng = random.Random(37)
    bases = [two_door(), double_edge_door(), rank_chain()]
    for _ in range(3):
        bases.append(random_multigraph(rng, max_edges=5, max_mult=2, max_n=5))
    for inst in bases:
        edges = inst.graph.edge_list()
        ranges = [range(inst.graph.edges[e] + 1) for e in edges]
        wins: dict[tuple[int, ...], bool] = {}
        for combo in itertools.product(*ranges):
            live = {e: m for e, m in zip(edges, combo) if m > 0}
            sub = make_instance(inst.graph.vertices, live, inst.start)
            wins[combo] = solve_nemesis(sub).winner == "fugitive"
        for combo, won in wins.items():
            if not won:
                continue
            for i in range(len(edges)):
                bumped = list(combo)
                bumped[i] += 1
                key = tuple(bumped)
                if key in wins:
                    assert wins[key], (inst.name, combo, edges[i])


def _pruning_matrix(inst):
    configs = {
        "all-on": SearchConfig(),
        "no-revisit-off": SearchConfig(
            no_revisit=False,
            dominated_deletion_pruning=False,
            relevance_pruning=False,
        ),
        "p2-off": SearchConfig(multiplicity_cap=10**9),
        "p3-off": SearchConfig(dominated_deletion_pruning=False),
        "relevance-off": SearchConfig(relevance_pruning=False),
        "bare": SearchConfig(
            no_revisit=True,
            multiplicity_cap=10**9,
            dominated_deletion_pruning=False,
            relevance_pruning=False,
        ),
    }
    return {name: solve_nemesis(inst, cfg).winner for name, cfg in configs.items()}


def test_prunings_do_not_change_the_winner():
    rng = random.Random(41)
    for _ in range(60):
        inst = random_multigraph(rng, max_edges=8, max_mult=3)
        results = _pruning_matrix(inst)
        assert len(set(results.values())) == 1, (inst.graph.edges, results)


def test_principal_variation_reaches_claimed_terminal():
    rng = random.Random(43)
    cases = list(named_instances().values())
    for _ in range(40):
        cases.append(random_multigraph(rng))
    for inst in cases:
        verdict = solve_nemesis(inst)
        assert verdict.exact and verdict.pv is not None
        state = initial_state(inst)
        for move in verdict.pv:
            state = apply_move(state, move)
        status = game_status(state)
        if status.ongoing:
            # only permissible end: the fugitive is out of unvisited moves,
            # which the no-revisit rule adjudicates to the adversary
            assert verdict.winner == "adversary"
            assert legal_moves(state, no_revisit=True) == []
            assert state.phase is Phase.FUGITIVE
        else:
            want = "fugitive" if status.kind == "fugitive_won" else "adversary"
            assert verdict.winner == want


def test_budget_exhaustion_reports_unknown():
    inst = rank_chain()
    verdict = solve_nemesis(inst, SearchConfig(node_budget=3))
    assert verdict.winner == "unknown"
    assert not verdict.exact


def test_solve_from_state_adversary_phase():
    state = apply_move(initial_state(two_door()), Step("a"))
    verdict = solve_from_state(state)
    assert verdict.winner == "fugitive"  # both exits still parallel


def test_cat_value_examples():
    single = make_instance({"s": R}, [], "s", Variant.CATHERDING)
    assert cat_value(single).value == 0
    edge = make_instance({"s": R, "v": R}, [("s", "v", 1)], "s", Variant.CATHERDING)
    assert cat_value(edge).value == 1
    tri = make_instance(
        {"a": R, "b": R, "c": R},
        [("a", "b", 1), ("b", "c", 1), ("a", "c", 1)],
        "a",
        Variant.CATHERDING,
    )
    assert cat_value(tri).value == 2


def test_cat_value_bounded_by_total_multiplicity():
    rng = random.Random(47)
    for _ in range(20):
        base = random_multigraph(rng, max_edges=5, max_mult=2, max_n=5)
        kinds = {v: R for v in base.graph.vertices}
        inst = make_instance(kinds, base.graph.edges, base.start, Variant.CATHERDING)
        cv = cat_value(inst)
        assert cv.exact
        assert 0 <= cv.value <= inst.graph.total_multiplicity()


def test_cat_value_budget_reports_bounds():
    tri = make_instance(
        {"a": R, "b": R, "c": R},
        [("a", "b", 1), ("b", "c", 1), ("a", "c", 1)],
        "a",
        Variant.CATHERDING,
    )
    cv = cat_value(tri, SearchConfig(node_budget=2))
    assert not cv.exact
    assert cv.value is None
    assert cv.lower == 0 and cv.upper == 3


def test_best_response_fugitive_loses_one_door():
    from nemesis.strategies import reactive_blocker

    verdict = best_response_fugitive(one_door(), reactive_blocker)
    assert verdict.winner == "adversary"


def test_best_response_fugitive_wins_two_door_vs_any_script():
    from nemesis.strategies import make_random, reactive_blocker

    for script in (reactive_blocker, make_random(5)):
        verdict = best_response_fugitive(two_door(), script)
        assert verdict.winner == "fugitive"


def test_best_response_adversary_vs_descent_on_two_door():
    from nemesis.strategies import make_bet_descent

    verdict = best_response_adversary(two_door(), make_bet_descent(two_door()))
    assert verdict.winner == "fugitive"


def test_best_response_adversary_vs_shortest_path_on_one_door():
    from nemesis.strategies import shortest_path_fugitive

    verdict = best_response_adversary(one_door(), shortest_path_fugitive)
    assert verdict.winner == "adversary"


def test_blizzard_exact_on_random_graphs_matches_fixpoint_solver():
    from nemesis.fast import blizzard_win_sets

    rng = random.Random(53)
    for _ in range(60):
        inst = random_simple(rng, max_n=8)
        _, fast_verdict = blizzard_win_sets(inst)
        assert solve_blizzard(inst).winner == fast_verdict.winner
