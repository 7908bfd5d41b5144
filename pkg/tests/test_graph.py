"""Instance format, validation, and the two-phase simplification."""

import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from nemesis.graph import (
    Instance,
    InstanceSemanticError,
    InstanceSyntaxError,
    MultiGraph,
    Variant,
    VertexKind,
    duplicate_exits,
    make_instance,
    parse_instance,
    prune,
    serialize_instance,
    simplify,
    validate,
)
from nemesis.instances import named_instances, two_door

from corpus import random_multigraph

R, X = VertexKind.REGULAR, VertexKind.EXIT


def test_parse_minimal_instance():
    inst = parse_instance('{"start": "v", "vertices": [{"id": "v", "kind": "regular"}]}')
    assert len(inst.graph.vertices) == 1
    assert inst.start == "v"
    assert inst.variant is Variant.NEMESIS


def test_parse_two_door():
    text = serialize_instance(two_door())
    inst = parse_instance(text)
    assert len(inst.graph.vertices) == 4
    assert len(inst.graph.edges) == 3
    assert inst.graph.exits == ["t1", "t2"]


def test_parse_unknown_vertex_in_edge():
    with pytest.raises(InstanceSemanticError):
        parse_instance(
            '{"start": "a", "vertices": [{"id": "a"}], "edges": [{"u": "a", "v": "zz"}]}'
        )


def test_parse_bad_multiplicity():
    with pytest.raises(InstanceSemanticError):
        parse_instance(
            '{"start": "a", "vertices": [{"id": "a"}, {"id": "b"}],'
            ' "edges": [{"u": "a", "v": "b", "mult": 0}]}'
        )


def test_parse_missing_start():
    with pytest.raises(InstanceSemanticError):
        parse_instance('{"vertices": [{"id": "a"}]}')


def test_parse_self_loop_rejected():
    with pytest.raises(InstanceSemanticError):
        parse_instance(
            '{"start": "a", "vertices": [{"id": "a"}], "edges": [{"u": "a", "v": "a"}]}'
        )


def test_parse_syntax_error_reports_position():
    with pytest.raises(InstanceSyntaxError) as err:
        parse_instance("{nope")
    assert "line" in str(err.value)


def test_duplicate_edge_entries_are_summed():
    inst = parse_instance(
        '{"start": "a", "vertices": [{"id": "a"}, {"id": "b"}],'
        ' "edges": [{"u": "a", "v": "b"}, {"u": "b", "v": "a", "mult": 2}]}'
    )
    assert inst.graph.multiplicity("a", "b") == 3


def test_serialize_round_trip_is_canonical():
    for inst in named_instances().values():
        text = serialize_instance(inst)
        again = serialize_instance(parse_instance(text))
        assert text == again


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=0, max_value=10**9))
def test_random_instance_round_trip(seed):
    inst = random_multigraph(random.Random(seed))
    text = serialize_instance(inst)
    assert serialize_instance(parse_instance(text)) == text


def test_validate_drops_exit_exit_edges():
    inst = make_instance(
        {"s": R, "t1": X, "t2": X},
        [("s", "t1", 1), ("t1", "t2", 1)],
        "s",
    )
    cleaned, notes = validate(inst)
    assert len(notes) == 1
    assert cleaned.graph.multiplicity("t1", "t2") == 0
    assert cleaned.graph.multiplicity("s", "t1") == 1


def test_validate_unchanged_instance_has_no_notes():
    _, notes = validate(two_door())
    assert notes == []


def test_validate_rejects_catherding_with_exits():
    inst = make_instance({"s": R, "t": X}, [("s", "t", 1)], "s", Variant.CATHERDING)
    with pytest.raises(InstanceSemanticError):
        validate(inst)


def test_duplicate_exits_splits_by_neighbor():
    g = MultiGraph(
        {"x": X, "a": R, "b": R, "c": R},
        {("a", "x"): 1, ("b", "x"): 1, ("c", "x"): 1, ("a", "b"): 1, ("b", "c"): 1},
    )
    out = duplicate_exits(g)
    new_exits = out.exits
    assert len(new_exits) == 3
    assert all(out.degree(x) == 1 for x in new_exits)
    # the regular subgraph is untouched
    assert out.multiplicity("a", "b") == 1 and out.multiplicity("b", "c") == 1


def test_duplicate_exits_keeps_degree_one_exits():
    g = two_door().graph
    out = duplicate_exits(g)
    assert out == g


def test_duplicate_exits_expands_multiplicity():
    g = MultiGraph({"s": R, "x": X}, {("s", "x"): 2})
    out = duplicate_exits(g)
    assert len(out.exits) == 2
    assert all(out.degree(x) == 1 for x in out.exits)
    assert out.degree("s") == 2


def test_prune_cascades_along_path():
    # path s-a-b-exit: a and b act as traps, everything collapses onto s
    inst = make_instance(
        {"s": R, "a": R, "b": R, "t": X},
        [("s", "a", 1), ("a", "b", 1), ("b", "t", 1)],
        "s",
    )
    g = prune(duplicate_exits(inst.graph), "s")
    assert set(g.vertices) == {"s"}


def test_prune_keeps_branching_structure():
    g = two_door().graph
    out = prune(duplicate_exits(g), "s")
    assert set(out.vertices) == set(g.vertices)


def test_prune_drops_disconnected_component():
    inst = make_instance(
        {"s": R, "a": R, "t1": X, "t2": X, "z1": R, "z2": R, "z3": R, "zt": X},
        [
            ("s", "a", 1), ("a", "t1", 1), ("a", "t2", 1),
            ("z1", "z2", 1), ("z2", "z3", 1), ("z3", "z1", 1), ("z1", "zt", 1),
        ],
        "s",
    )
    g = prune(duplicate_exits(inst.graph), "s")
    assert set(g.vertices) == {"s", "a", "t1", "t2"}


def test_prune_is_idempotent():
    rng = random.Random(7)
    for _ in range(50):
        inst = random_multigraph(rng)
        g1 = prune(duplicate_exits(inst.graph), inst.start)
        g2 = prune(g1, inst.start)
        assert g1 == g2


def test_simplify_never_increases_degree():
    rng = random.Random(11)
    for _ in range(100):
        inst = random_multigraph(rng)
        before = inst.graph
        after = simplify(inst).graph
        for v in after.vertices:
            if v in before.vertices and not before.is_exit(v):
                assert after.degree(v) <= before.degree(v)


def test_simplify_start_survives():
    rng = random.Random(13)
    for _ in range(50):
        inst = random_multigraph(rng)
        assert inst.start in simplify(inst).graph.vertices
