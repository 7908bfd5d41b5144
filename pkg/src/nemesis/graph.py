"""Multigraph substrate, instance file format, validation, and simplification.

Vertices are identified by strings and ordered lexicographically; that order
is the tie-breaker everywhere, which keeps every operation deterministic.
Edges are unordered pairs carrying a positive integer multiplicity.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Iterable, Iterator, Mapping


class VertexKind(Enum):
    REGULAR = "regular"
    EXIT = "exit"


class Variant(Enum):
    NEMESIS = "nemesis"
    BLIZZARD = "blizzard"
    CATHERDING = "catherding"


Edge = tuple[str, str]


class InstanceError(Exception):
    """Base class for problems with an instance description."""


class InstanceSyntaxError(InstanceError):
    """The instance file is not well-formed (bad JSON, wrong shapes)."""


class InstanceSemanticError(InstanceError):
    """The instance file decodes but violates a semantic rule."""


def edge_key(u: str, v: str) -> Edge:
    """Normalize an unordered vertex pair."""
    return (u, v) if u <= v else (v, u)


class MultiGraph:
    """Undirected multigraph: vertex kinds plus edge multiplicities.

    Treated as immutable after construction; all transformations build a new
    graph.  Degree counts edge copies (the sum of incident multiplicities),
    which is the quantity the adversary attacks.
    """

    __slots__ = ("vertices", "edges", "_adj", "_edge_list", "_edge_index", "_exit_reach")

    def __init__(self, vertices: Mapping[str, VertexKind], edges: Mapping[Edge, int]):
        self._edge_list: list[Edge] | None = None
        self._edge_index: dict[Edge, int] | None = None
        self._exit_reach: frozenset[str] | None = None
        self.vertices: dict[str, VertexKind] = dict(vertices)
        self.edges: dict[Edge, int] = {}
        for (u, v), mult in edges.items():
            u, v = edge_key(u, v)
            if u == v:
                raise InstanceSemanticError(f"self-loop at {u!r}")
            if u not in self.vertices or v not in self.vertices:
                raise InstanceSemanticError(f"edge ({u!r},{v!r}) references unknown vertex")
            if not isinstance(mult, int) or mult < 1:
                raise InstanceSemanticError(f"edge ({u!r},{v!r}) has multiplicity {mult!r} < 1")
            self.edges[(u, v)] = self.edges.get((u, v), 0) + mult
        self._adj: dict[str, dict[str, int]] = {v: {} for v in self.vertices}
        for (u, v), mult in self.edges.items():
            self._adj[u][v] = mult
            self._adj[v][u] = mult

    def kind(self, v: str) -> VertexKind:
        return self.vertices[v]

    def is_exit(self, v: str) -> bool:
        return self.vertices[v] is VertexKind.EXIT

    @property
    def exits(self) -> list[str]:
        return sorted(v for v, k in self.vertices.items() if k is VertexKind.EXIT)

    @property
    def regulars(self) -> list[str]:
        return sorted(v for v, k in self.vertices.items() if k is VertexKind.REGULAR)

    def neighbors(self, v: str) -> list[str]:
        return sorted(self._adj[v])

    def adjacency(self, v: str) -> dict[str, int]:
        return dict(self._adj[v])

    def degree(self, v: str) -> int:
        return sum(self._adj[v].values())

    def multiplicity(self, u: str, v: str) -> int:
        return self.edges.get(edge_key(u, v), 0)

    def edge_list(self) -> list[Edge]:
        if self._edge_list is None:
            self._edge_list = sorted(self.edges)
        return self._edge_list

    def edge_index(self) -> dict[Edge, int]:
        if self._edge_index is None:
            self._edge_index = {e: i for i, e in enumerate(self.edge_list())}
        return self._edge_index

    def total_multiplicity(self) -> int:
        return sum(self.edges.values())

    def sorted_vertices(self) -> list[str]:
        return sorted(self.vertices)

    def __contains__(self, v: str) -> bool:
        return v in self.vertices

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MultiGraph)
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __repr__(self) -> str:
        return f"MultiGraph(|V|={len(self.vertices)}, |E|={len(self.edges)})"

    def exit_reaching_set(self) -> frozenset[str]:
        """Vertices from which some exit is reachable (full multiplicities)."""
        if self._exit_reach is None:
            seen: set[str] = set(self.exits)
            stack = list(seen)
            while stack:
                u = stack.pop()
                for w in self._adj[u]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            self._exit_reach = frozenset(seen)
        return self._exit_reach

    def reachable_from(self, start: str, remaining: Mapping[Edge, int] | None = None) -> set[str]:
        """Vertices reachable from `start`; `remaining` overrides multiplicities."""
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in self._adj[u]:
                if w in seen:
                    continue
                if remaining is not None and remaining.get(edge_key(u, w), 0) <= 0:
                    continue
                seen.add(w)
                stack.append(w)
        return seen


@dataclass(frozen=True)
class Instance:
    """A playable instance: graph, starting vertex, game variant, layout hints."""

    graph: MultiGraph
    start: str
    variant: Variant
    layout: Mapping[str, tuple[float, float]] | None = None
    name: str = ""

    def __post_init__(self) -> None:
        if self.start not in self.graph:
            raise InstanceSemanticError(f"start vertex {self.start!r} missing from graph")


def make_instance(
    vertices: Mapping[str, VertexKind] | Iterable[tuple[str, VertexKind]],
    edges: Mapping[Edge, int] | Iterable[tuple[str, str, int]],
    start: str,
    variant: Variant = Variant.NEMESIS,
    layout: Mapping[str, tuple[float, float]] | None = None,
    name: str = "",
) -> Instance:
    """Convenience constructor accepting edge triples."""
    vmap = dict(vertices)
    emap: dict[Edge, int] = {}
    if isinstance(edges, Mapping):
        items: Iterator = iter(edges.items())
        for (u, v), mult in items:
            emap[edge_key(u, v)] = emap.get(edge_key(u, v), 0) + mult
    else:
        for u, v, mult in edges:
            emap[edge_key(u, v)] = emap.get(edge_key(u, v), 0) + mult
    return Instance(MultiGraph(vmap, emap), start, variant, layout, name)


# ---------------------------------------------------------------------------
# Instance file format
# ---------------------------------------------------------------------------

def parse_instance(text: str | bytes) -> Instance:
    """Decode an instance file (UTF-8 JSON).

    Duplicate (u, v) entries are summed and (u, v) equals (v, u).  Raises
    InstanceSyntaxError for malformed JSON/shapes and InstanceSemanticError
    for rule violations (unknown endpoint, multiplicity < 1, missing start,
    self-loop).
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceSyntaxError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(data, dict):
        raise InstanceSyntaxError("top-level value must be an object")

    try:
        variant = Variant(data.get("variant", "nemesis"))
    except ValueError:
        raise InstanceSyntaxError(f"unknown variant {data.get('variant')!r}") from None

    raw_vertices = data.get("vertices")
    if not isinstance(raw_vertices, list):
        raise InstanceSyntaxError("'vertices' must be a list")
    vertices: dict[str, VertexKind] = {}
    for i, entry in enumerate(raw_vertices):
        if not isinstance(entry, dict) or "id" not in entry:
            raise InstanceSyntaxError(f"vertex #{i} must be an object with an 'id'")
        vid = entry["id"]
        if not isinstance(vid, str) or not vid:
            raise InstanceSyntaxError(f"vertex #{i} id must be a non-empty string")
        if vid in vertices:
            raise InstanceSemanticError(f"duplicate vertex id {vid!r}")
        kind_text = entry.get("kind", "regular")
        try:
            vertices[vid] = VertexKind(kind_text)
        except ValueError:
            raise InstanceSyntaxError(f"vertex {vid!r} has unknown kind {kind_text!r}") from None

    raw_edges = data.get("edges", [])
    if not isinstance(raw_edges, list):
        raise InstanceSyntaxError("'edges' must be a list")
    edges: dict[Edge, int] = {}
    for i, entry in enumerate(raw_edges):
        if not isinstance(entry, dict) or "u" not in entry or "v" not in entry:
            raise InstanceSyntaxError(f"edge #{i} must be an object with 'u' and 'v'")
        u, v = entry["u"], entry["v"]
        mult = entry.get("mult", 1)
        if not isinstance(mult, int) or isinstance(mult, bool) or mult < 1:
            raise InstanceSemanticError(f"edge #{i} ({u!r},{v!r}) has multiplicity {mult!r} < 1")
        if u not in vertices or v not in vertices:
            raise InstanceSemanticError(f"edge #{i} ({u!r},{v!r}) references unknown vertex")
        if u == v:
            raise InstanceSemanticError(f"edge #{i} is a self-loop at {u!r}")
        key = edge_key(u, v)
        edges[key] = edges.get(key, 0) + mult

    start = data.get("start")
    if start is None:
        raise InstanceSemanticError("missing start vertex")
    if start not in vertices:
        raise InstanceSemanticError(f"start vertex {start!r} missing from graph")

    layout = None
    raw_layout = data.get("layout")
    if raw_layout is not None:
        if not isinstance(raw_layout, dict):
            raise InstanceSyntaxError("'layout' must be an object")
        layout = {}
        for vid, xy in raw_layout.items():
            if vid not in vertices:
                raise InstanceSemanticError(f"layout references unknown vertex {vid!r}")
            if not (isinstance(xy, list) and len(xy) == 2):
                raise InstanceSyntaxError(f"layout for {vid!r} must be [x, y]")
            layout[vid] = (float(xy[0]), float(xy[1]))

    name = data.get("name", "")
    if not isinstance(name, str):
        raise InstanceSyntaxError("'name' must be a string")

    return Instance(MultiGraph(vertices, edges), start, variant, layout, name)


def serialize_instance(inst: Instance) -> str:
    """Canonical text form: sorted ids, normalized pairs, stable formatting.

    serialize(parse(serialize(x))) == serialize(x) byte for byte.
    """
    obj: dict = {
        "variant": inst.variant.value,
        "start": inst.start,
        "vertices": [
            {"id": v, "kind": inst.graph.vertices[v].value} for v in inst.graph.sorted_vertices()
        ],
        "edges": [
            {"u": u, "v": v, "mult": inst.graph.edges[(u, v)]} for (u, v) in inst.graph.edge_list()
        ],
    }
    if inst.layout:
        obj["layout"] = {v: [float(x), float(y)] for v, (x, y) in sorted(inst.layout.items())}
    if inst.name:
        obj["name"] = inst.name
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def instance_digest(inst: Instance) -> str:
    return hashlib.sha256(serialize_instance(inst).encode("utf-8")).hexdigest()


# ---------------------------------------------------------------------------
# Validation / normalization
# ---------------------------------------------------------------------------

def validate(inst: Instance) -> tuple[Instance, list[str]]:
    """Check instance invariants and normalize.

    Edges between two exits play no role in any variant and are dropped, one
    note per dropped edge.  Fatal conditions (missing start, self-loop, exits
    in a cat-herding instance) raise InstanceSemanticError.
    """
    g = inst.graph
    if inst.start not in g:
        raise InstanceSemanticError(f"start vertex {inst.start!r} missing from graph")
    notes: list[str] = []
    kept: dict[Edge, int] = {}
    for (u, v), mult in sorted(g.edges.items()):
        if u == v:
            raise InstanceSemanticError(f"self-loop at {u!r}")
        if g.is_exit(u) and g.is_exit(v):
            notes.append(f"dropped exit-exit edge ({u},{v}) x{mult}")
            continue
        kept[(u, v)] = mult
    if inst.variant is Variant.CATHERDING and g.exits:
        raise InstanceSemanticError("cat-herding instances must not contain exit vertices")
    if not notes:
        return inst, notes
    return replace(inst, graph=MultiGraph(g.vertices, kept)), notes


# ---------------------------------------------------------------------------
# Simplification (exit duplication + iterative pruning)
# ---------------------------------------------------------------------------

def _fresh_id(base: str, taken: set[str]) -> str:
    if base not in taken:
        return base
    k = 2
    while f"{base}.{k}" in taken:
        k += 1
    return f"{base}.{k}"


def duplicate_exits(g: MultiGraph) -> MultiGraph:
    """Split every exit so each exit has degree exactly 1.

    Each edge copy from a regular vertex u to an exit x becomes its own
    degree-1 exit attached to u with multiplicity 1.  An exit that already
    has degree 1 is kept as is.  Requires exits to form an independent set.
    """
    vertices = dict(g.vertices)
    edges = dict(g.edges)
    taken = set(vertices)
    for x in g.exits:
        adj = g.adjacency(x)
        for nbr in adj:
            if g.is_exit(nbr):
                raise InstanceSemanticError(f"exit-exit edge ({x},{nbr}); validate first")
        if g.degree(x) == 1:
            continue
        del vertices[x]
        for nbr, mult in sorted(adj.items()):
            del edges[edge_key(x, nbr)]
            for j in range(1, mult + 1):
                copy = _fresh_id(f"{x}@{nbr}.{j}", taken)
                taken.add(copy)
                vertices[copy] = VertexKind.EXIT
                edges[edge_key(copy, nbr)] = 1
        if not adj:
            # isolated exit: removed here, a component sweep would drop it anyway
            pass
    return MultiGraph(vertices, edges)


def prune(g: MultiGraph, start: str) -> MultiGraph:
    """Iteratively remove regular vertices of degree <= 2 (except `start`),
    then discard every connected component not containing `start`.

    Work-queue implementation, linear in |V| + |E|.
    """
    adj = {v: dict(g.adjacency(v)) for v in g.vertices}
    alive = set(g.vertices)
    degree = {v: sum(adj[v].values()) for v in g.vertices}
    queue = [
        v
        for v in g.sorted_vertices()
        if v != start and not g.is_exit(v) and degree[v] <= 2
    ]
    enqueued = set(queue)
    while queue:
        v = queue.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for w, _ in list(adj[v].items()):
            if w not in alive:
                continue
            degree[w] -= adj[w].pop(v)
            if (
                w != start
                and not g.is_exit(w)
                and degree[w] <= 2
                and w not in enqueued
            ):
                queue.append(w)
                enqueued.add(w)
        adj[v] = {}

    # component sweep from the start vertex
    component = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w in alive and w not in component:
                component.add(w)
                stack.append(w)

    vertices = {v: g.vertices[v] for v in component}
    edges = {
        (u, v): mult
        for (u, v), mult in g.edges.items()
        if u in component and v in component
    }
    return MultiGraph(vertices, edges)


def simplify(inst: Instance) -> Instance:
    """Exit duplication followed by pruning; never increases any degree."""
    g = duplicate_exits(inst.graph)
    g = prune(g, inst.start)
    layout = None
    if inst.layout:
        layout = {v: xy for v, xy in inst.layout.items() if v in g}
    return replace(inst, graph=g, layout=layout)
