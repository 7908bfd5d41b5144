"""Small named instances used throughout the tests, docs, and UI gallery."""

from __future__ import annotations

from .graph import Instance, Variant, VertexKind, make_instance

R = VertexKind.REGULAR
X = VertexKind.EXIT


def two_door() -> Instance:
    """I1: s-a with two parallel exits behind a; the fugitive wins."""
    return make_instance(
        {"s": R, "a": R, "t1": X, "t2": X},
        [("s", "a", 1), ("a", "t1", 1), ("a", "t2", 1)],
        start="s",
        name="I1 two-door",
    )


def one_door() -> Instance:
    """I2: path s-a-t with a single exit; the adversary cuts (a,t)."""
    return make_instance(
        {"s": R, "a": R, "t": X},
        [("s", "a", 1), ("a", "t", 1)],
        start="s",
        name="I2 one-door",
    )


def double_edge_door() -> Instance:
    """I3: exit edge of multiplicity 2; one deletion cannot close it in time."""
    return make_instance(
        {"s": R, "x": X},
        [("s", "x", 2)],
        start="s",
        name="I3 double-edge door",
    )


def trap_cycle() -> Instance:
    """I4: 4-cycle of regular vertices, one adjacent to a single exit."""
    return make_instance(
        {"a": R, "b": R, "c": R, "d": R, "t": X},
        [("a", "b", 1), ("b", "c", 1), ("c", "d", 1), ("d", "a", 1), ("a", "t", 1)],
        start="c",
        name="I4 trap cycle",
    )


def rank_chain() -> Instance:
    """I5: start next to a vertex whose two neighbors each have two exit edges."""
    return make_instance(
        {
            "s": R, "c": R, "v1": R, "v2": R,
            "e1": X, "e2": X, "e3": X, "e4": X,
        },
        [
            ("s", "c", 1), ("c", "v1", 1), ("c", "v2", 1),
            ("v1", "e1", 1), ("v1", "e2", 1),
            ("v2", "e3", 1), ("v2", "e4", 1),
        ],
        start="s",
        name="I5 rank chain",
    )


def named_instances() -> dict[str, Instance]:
    return {
        "I1": two_door(),
        "I2": one_door(),
        "I3": double_edge_door(),
        "I4": trap_cycle(),
        "I5": rank_chain(),
    }


def as_variant(inst: Instance, variant: Variant) -> Instance:
    from dataclasses import replace

    return replace(inst, variant=variant)
