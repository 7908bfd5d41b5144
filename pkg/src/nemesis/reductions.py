"""Instance generators and transformers, each paired with an independent
structural checker.  Nothing here is trusted from construction: the checkers
re-derive every claimed property from the emitted instance.

Naming contracts (used by the checkers and by the scripted strategies):

* SAT/QSAT instances: junctions ``j00..jNN`` (start ``j00``, goal ``jNN``),
  cycle sides ``x01.t01..`` / ``x01.f01..`` with the decision vertices at
  distance K from the entry, clause paths ``c01.x02.001..`` into clause
  vertices ``c01``, exits ``c01.exit`` and ``jNN.exit``, derivation vertices
  ``x02.dt`` / ``x02.df``.
* Grids: regular ``gRRxCC`` with exits ``eRRxCCa`` / ``eRRxCCb``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from typing import Callable, Optional

from .graph import (
    Edge,
    Instance,
    InstanceSemanticError,
    MultiGraph,
    Variant,
    VertexKind,
    edge_key,
)
from .rules import Delete, GameState, Move, Pass, Phase, Step, Strategy, legal_moves

R = VertexKind.REGULAR
X = VertexKind.EXIT


# ---------------------------------------------------------------------------
# CNF / QBF input
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CnfFormula:
    """Clauses as tuples of signed 1-based variable indices (DIMACS style)."""

    num_vars: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        for i, clause in enumerate(self.clauses):
            if not 1 <= len(clause) <= 3:
                raise ValueError(f"clause #{i + 1} must have 1..3 literals")
            vs = [abs(l) for l in clause]
            if len(set(vs)) != len(vs):
                raise ValueError(f"clause #{i + 1} repeats a variable")
            for l in clause:
                if l == 0 or abs(l) > self.num_vars:
                    raise ValueError(f"clause #{i + 1} literal {l} out of range")

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def is_monotone(self) -> bool:
        """Every clause all-positive or all-negative."""
        return all(
            all(l > 0 for l in c) or all(l < 0 for l in c) for c in self.clauses
        )

    def is_lsat(self) -> bool:
        """Each clause shares literals with at most one other clause, and
        with that one shares at most one literal."""
        sets = [set(c) for c in self.clauses]
        for i, ci in enumerate(sets):
            partners = 0
            for j, cj in enumerate(sets):
                if i == j:
                    continue
                shared = len(ci & cj)
                if shared > 1:
                    return False
                if shared == 1:
                    partners += 1
            if partners > 1:
                return False
        return True

    def satisfiable(self) -> bool:
        """Brute force over all assignments (desk-scale formulas only)."""
        for bits in range(1 << self.num_vars):
            if self.evaluate({v: bool(bits >> (v - 1) & 1) for v in range(1, self.num_vars + 1)}):
                return True
        return False

    def evaluate(self, assignment: dict[int, bool]) -> bool:
        return all(
            any((l > 0) == assignment[abs(l)] for l in clause) for clause in self.clauses
        )

    def satisfying_assignment(self) -> Optional[dict[int, bool]]:
        for bits in range(1 << self.num_vars):
            a = {v: bool(bits >> (v - 1) & 1) for v in range(1, self.num_vars + 1)}
            if self.evaluate(a):
                return a
        return None


@dataclass(frozen=True)
class Qbf:
    """Quantified boolean formula with one quantifier per variable, in
    variable order, strictly alternating and starting existential."""

    prefix: tuple[str, ...]  # 'e' | 'a' per variable 1..n
    matrix: CnfFormula

    def __post_init__(self) -> None:
        if len(self.prefix) != self.matrix.num_vars:
            raise ValueError("prefix length must match the variable count")
        for i, q in enumerate(self.prefix):
            if q not in ("e", "a"):
                raise ValueError(f"bad quantifier {q!r}")
            expected = "e" if i % 2 == 0 else "a"
            if q != expected:
                raise ValueError("prefix must alternate starting existentially")

    def value(self) -> bool:
        return self._value({}, 1)

    def _value(self, assignment: dict[int, bool], var: int) -> bool:
        if var > self.matrix.num_vars:
            return self.matrix.evaluate(assignment)
        results = [
            self._value({**assignment, var: choice}, var + 1) for choice in (False, True)
        ]
        if self.prefix[var - 1] == "e":
            return any(results)
        return all(results)

    def existential_policy(self) -> Callable[[int, dict[int, bool]], bool]:
        """Winning choice for each existential variable given the values of
        all earlier variables; only meaningful when the formula is true."""

        def choose(var: int, assignment: dict[int, bool]) -> bool:
            for choice in (True, False):
                if self._value({**assignment, var: choice}, var + 1):
                    return choice
            return True  # losing position: the choice no longer matters

        return choose


def parse_dimacs(text: str) -> CnfFormula:
    num_vars = None
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"line {lineno}: bad problem line")
            num_vars = int(parts[2])
            continue
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            else:
                current.append(lit)
    if num_vars is None:
        raise ValueError("missing 'p cnf' problem line")
    if current:
        raise ValueError("unterminated clause (missing trailing 0)")
    return CnfFormula(num_vars, tuple(clauses))


def parse_qdimacs(text: str) -> Qbf:
    num_vars = None
    quantified: list[tuple[str, list[int]]] = []
    clause_lines: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"line {lineno}: bad problem line")
            num_vars = int(parts[2])
            continue
        if line[0] in ("e", "a"):
            toks = line.split()
            if toks[-1] != "0":
                raise ValueError(f"line {lineno}: quantifier line must end in 0")
            quantified.append((toks[0], [int(t) for t in toks[1:-1]]))
            continue
        clause_lines.append(line)
    if num_vars is None:
        raise ValueError("missing 'p cnf' problem line")
    prefix: dict[int, str] = {}
    for q, vs in quantified:
        for v in vs:
            if v in prefix:
                raise ValueError(f"variable {v} quantified twice")
            prefix[v] = q
    if sorted(prefix) != list(range(1, num_vars + 1)):
        raise ValueError("every variable must be quantified exactly once")
    matrix = parse_dimacs(f"p cnf {num_vars} 0\n" + "\n".join(clause_lines))
    return Qbf(tuple(prefix[v] for v in range(1, num_vars + 1)), matrix)


# ---------------------------------------------------------------------------
# Reduction parameters
# ---------------------------------------------------------------------------

ELECTRIC_K_BUMP = 3  # margin keeping the fuse zone clear of the decision vertex


@dataclass(frozen=True)
class ReductionParams:
    """Resolved constants for the SAT/QSAT constructions.

    K: cycle quarter-length; L: clause-path length; P = 2nK: direct path
    length from start to goal; main_mult = P - m + 1; clause_mult = L + 1;
    cap: unbreakable multiplicity (the produced instance's vertex count);
    N: copy count for the simple-graph translation.
    """

    K: int
    L: int
    P: int
    main_mult: int
    clause_mult: int
    cap: int
    N: int | None = None

    @staticmethod
    def resolve(
        f: CnfFormula,
        K: int | None = None,
        L: int | None = None,
        N: int | None = None,
        electric: bool = False,
    ) -> "ReductionParams":
        n, m = f.num_vars, f.num_clauses
        k = K if K is not None else m + 1 + (ELECTRIC_K_BUMP if electric else 0)
        min_k = m + 1 + (ELECTRIC_K_BUMP if electric else 0)
        if k < min_k:
            raise ValueError(f"K={k} too small; need at least {min_k}")
        p = 2 * n * k
        l = L if L is not None else p + 1
        if l <= p:
            raise ValueError(f"L={l} must exceed the direct path length {p}")
        if p - m + 1 < 1:
            raise ValueError("main exit multiplicity would be < 1")
        # cap is the produced vertex count, filled in by the construction
        return ReductionParams(K=k, L=l, P=p, main_mult=p - m + 1, clause_mult=l + 1, cap=0, N=N)


# ---------------------------------------------------------------------------
# Exit-count reductions
# ---------------------------------------------------------------------------

def _fresh(base: str, taken: set[str]) -> str:
    name = base
    k = 2
    while name in taken:
        name = f"{base}.{k}"
        k += 1
    taken.add(name)
    return name


def merge_exits(inst: Instance) -> Instance:
    """Merge all exits into one; per regular vertex the new exit edge carries
    the sum of its former exit-edge multiplicities."""
    if inst.variant is not Variant.NEMESIS:
        raise ValueError("merge_exits is defined for nemesis instances")
    g = inst.graph
    exits = g.exits
    if len(exits) <= 1:
        return inst
    taken = set(g.vertices)
    t = _fresh("t", taken)
    vertices = {v: k for v, k in g.vertices.items() if k is not VertexKind.EXIT}
    vertices[t] = X
    edges: dict[Edge, int] = {}
    sums: dict[str, int] = {}
    for (u, v), mult in g.edges.items():
        ue, ve = g.is_exit(u), g.is_exit(v)
        if ue and ve:
            raise InstanceSemanticError("exit-exit edge; validate first")
        if ue or ve:
            reg = v if ue else u
            sums[reg] = sums.get(reg, 0) + mult
        else:
            edges[(u, v)] = mult
    for reg, mult in sums.items():
        edges[edge_key(reg, t)] = mult
    return replace(inst, graph=MultiGraph(vertices, edges), layout=None)


def to_two_exits(inst: Instance) -> Instance:
    """Simple-graph reduction to exactly two exits: add a fresh layer of
    n+1 vertices joined to every old exit and to both new exits."""
    if inst.variant is not Variant.NEMESIS:
        raise ValueError("to_two_exits is defined for nemesis instances")
    g = inst.graph
    if any(m != 1 for m in g.edges.values()):
        raise ValueError("to_two_exits requires a simple graph")
    if g.is_exit(inst.start):
        raise ValueError("to_two_exits requires a regular start vertex")
    n = len(g.vertices)
    taken = set(g.vertices)
    ys = [_fresh(f"y{k}", taken) for k in range(1, n + 2)]
    t1, t2 = _fresh("t1", taken), _fresh("t2", taken)
    vertices = {v: R for v in g.vertices}  # old exits become regular
    vertices.update({y: R for y in ys})
    vertices[t1] = X
    vertices[t2] = X
    edges = dict(g.edges)
    for x in g.exits:
        for y in ys:
            edges[edge_key(x, y)] = 1
    for y in ys:
        edges[edge_key(y, t1)] = 1
        edges[edge_key(y, t2)] = 1
    return replace(inst, graph=MultiGraph(vertices, edges), layout=None)


def check_two_exits(out: Instance, inp: Instance) -> list[str]:
    problems = []
    n = len(inp.graph.vertices)
    if len(out.graph.vertices) != 2 * n + 3:
        problems.append(f"vertex count {len(out.graph.vertices)} != 2n+3 = {2 * n + 3}")
    if len(out.graph.exits) != 2:
        problems.append("output must have exactly two exits")
    if out.start != inp.start:
        problems.append("start vertex changed")
    old_edges = set(inp.graph.edges)
    if not old_edges <= set(out.graph.edges):
        problems.append("original edges missing")
    ys = [v for v in out.graph.vertices if v not in inp.graph.vertices and v not in out.graph.exits]
    if len(ys) != n + 1:
        problems.append(f"{len(ys)} fresh middle vertices, expected {n + 1}")
    for x in inp.graph.exits:
        for y in ys:
            if out.graph.multiplicity(x, y) != 1:
                problems.append(f"missing edge ({x},{y})")
    for y in ys:
        for t in out.graph.exits:
            if out.graph.multiplicity(y, t) != 1:
                problems.append(f"missing edge ({y},{t})")
    return problems


# ---------------------------------------------------------------------------
# Grids
# ---------------------------------------------------------------------------

_GRID_RE = re.compile(r"^g(\d+)x(\d+)$")


def grid_instance(rows: int, cols: int, start: tuple[int, int] | None = None) -> Instance:
    """Square grid of regular vertices; each corner gets two pendant exits,
    every other boundary vertex exactly one."""
    if rows < 2 or cols < 2:
        raise ValueError("grid needs rows, cols >= 2")
    if start is None:
        start = ((rows - 1) // 2, (cols - 1) // 2)
    sr, sc = start
    if not (0 <= sr < rows and 0 <= sc < cols):
        raise ValueError("start outside the grid")

    def gid(r: int, c: int) -> str:
        return f"g{r:02d}x{c:02d}"

    vertices: dict[str, VertexKind] = {}
    edges: dict[Edge, int] = {}
    layout: dict[str, tuple[float, float]] = {}
    for r in range(rows):
        for c in range(cols):
            vertices[gid(r, c)] = R
            layout[gid(r, c)] = (float(c), float(r))
            if r + 1 < rows:
                edges[edge_key(gid(r, c), gid(r + 1, c))] = 1
            if c + 1 < cols:
                edges[edge_key(gid(r, c), gid(r, c + 1))] = 1
    for r in range(rows):
        for c in range(cols):
            on_boundary = r in (0, rows - 1) or c in (0, cols - 1)
            if not on_boundary:
                continue
            corner = r in (0, rows - 1) and c in (0, cols - 1)
            slots = ["a", "b"] if corner else ["a"]
            dirs = []
            if r == 0:
                dirs.append((-1.0, 0.0))
            if r == rows - 1:
                dirs.append((1.0, 0.0))
            if c == 0:
                dirs.append((0.0, -1.0))
            if c == cols - 1:
                dirs.append((0.0, 1.0))
            for slot, (dr, dc) in zip(slots, dirs):
                xid = f"e{r:02d}x{c:02d}{slot}"
                vertices[xid] = X
                layout[xid] = (float(c) + dc, float(r) + dr)
                edges[edge_key(gid(r, c), xid)] = 1
    return Instance(MultiGraph(vertices, edges), gid(sr, sc), Variant.NEMESIS, layout, name=f"grid {rows}x{cols}")


def check_grid(inst: Instance, rows: int, cols: int) -> list[str]:
    problems = []
    g = inst.graph
    regulars = [v for v in g.regulars]
    if len(regulars) != rows * cols:
        problems.append("wrong number of regular vertices")
    corners = 0
    for v in regulars:
        exit_edges = sum(g.multiplicity(v, w) for w in g.neighbors(v) if g.is_exit(w))
        m = _GRID_RE.match(v)
        if not m:
            problems.append(f"unparseable vertex id {v}")
            continue
        r, c = int(m.group(1)), int(m.group(2))
        is_corner = r in (0, rows - 1) and c in (0, cols - 1)
        on_boundary = r in (0, rows - 1) or c in (0, cols - 1)
        expected = 2 if is_corner else (1 if on_boundary else 0)
        if exit_edges != expected:
            problems.append(f"{v}: {exit_edges} exit edges, expected {expected}")
        if is_corner and exit_edges == 2:
            corners += 1
    if corners != 4:
        problems.append(f"{corners} two-exit corners, expected 4")
    for x in g.exits:
        if g.degree(x) != 1:
            problems.append(f"exit {x} has degree {g.degree(x)}")
    return problems


def grid_shape(inst: Instance) -> tuple[int, int]:
    rows = cols = 0
    for v in inst.graph.regulars:
        m = _GRID_RE.match(v)
        if not m:
            raise ValueError("not a generated grid instance")
        rows = max(rows, int(m.group(1)) + 1)
        cols = max(cols, int(m.group(2)) + 1)
    return rows, cols


class _CornerCut:
    """Adversary script for grid instances.

    Deletions 1-4 cut one exit edge per corner (canonical choice); afterwards
    the script is reactive: delete the exit edge at the fugitive's vertex if
    it has one, else the canonical remaining exit edge farthest (in grid
    distance) from the fugitive.
    """

    def __init__(self) -> None:
        self._dims: tuple[int, int] | None = None

    def _corners(self, state: GameState) -> list[str]:
        if self._dims is None:
            self._dims = grid_shape(state.instance)
        rows, cols = self._dims
        return [
            f"g{r:02d}x{c:02d}"
            for r in (0, rows - 1)
            for c in (0, cols - 1)
        ]

    @staticmethod
    def _coords(v: str) -> tuple[int, int] | None:
        m = _GRID_RE.match(v)
        return (int(m.group(1)), int(m.group(2))) if m else None

    def _exit_edges_at(self, state: GameState, v: str) -> list[Edge]:
        g = state.instance.graph
        index = g.edge_index()
        return [
            edge_key(v, w)
            for w in g.neighbors(v)
            if g.is_exit(w) and state.remaining[index[edge_key(v, w)]] > 0
        ]

    def __call__(self, state: GameState) -> Optional[Move]:
        deletions_made = sum(
            iv - rv
            for iv, rv in zip(
                (state.instance.graph.edges[e] for e in state.edge_list()), state.remaining
            )
        )
        if deletions_made < 4:
            corner = self._corners(state)[deletions_made]
            options = self._exit_edges_at(state, corner)
            if options:
                u, v = sorted(options)[0]
                return Delete(u, v)
        mine = self._exit_edges_at(state, state.position)
        if mine:
            u, v = sorted(mine)[0]
            return Delete(u, v)
        g = state.instance.graph
        pos_rc = self._coords(state.position)
        candidates = []
        for e, m in zip(g.edge_list(), state.remaining):
            if m <= 0:
                continue
            u, v = e
            if not (g.is_exit(u) or g.is_exit(v)):
                continue
            reg = v if g.is_exit(u) else u
            rc = self._coords(reg)
            d = abs(rc[0] - pos_rc[0]) + abs(rc[1] - pos_rc[1]) if rc and pos_rc else 0
            candidates.append((-d, e))
        if candidates:
            _, (u, v) = min(candidates)
            return Delete(u, v)
        moves = legal_moves(state)
        return moves[0] if moves else None

    def hopeless(self, state: GameState) -> bool:
        """Sound loss predicate for the fugitive against this script.

        Once the corner cuts are done, every vertex holds at most one exit
        copy and the fugitive's own vertex holds none, the reactive rule
        deletes the single exit copy at each vertex he arrives at before he
        can use it, so no line of his can ever step onto an exit.
        """
        if state.phase is not Phase.FUGITIVE or state.round < 4:
            return False
        if self._exit_edges_at(state, state.position):
            return False
        g = state.instance.graph
        counts: dict[str, int] = {}
        for e, m in zip(g.edge_list(), state.remaining):
            if m <= 0:
                continue
            u, v = e
            if g.is_exit(u):
                counts[v] = counts.get(v, 0) + m
            elif g.is_exit(v):
                counts[u] = counts.get(u, 0) + m
        return all(c <= 1 for c in counts.values())


def corner_cut_script(inst: Instance | None = None) -> Strategy:
    script = _CornerCut()
    if inst is not None:
        grid_shape(inst)  # fail fast on non-grid instances
    return script


# ---------------------------------------------------------------------------
# Escape-tree search instances from linear formulas
# ---------------------------------------------------------------------------

def cnf_to_escape_tree_instance(f: CnfFormula) -> tuple[MultiGraph, str]:
    """Build the max-degree-4 graph in which the designated root has a
    binary escape tree iff the (linear) formula is satisfiable."""
    if not f.is_lsat():
        raise ValueError("formula is not linear (clauses share too much)")
    occurrences: dict[int, int] = {}
    vertices: dict[str, VertexKind] = {}
    edges: dict[Edge, int] = {}

    def add(v: str, kind: VertexKind) -> str:
        vertices[v] = kind
        return v

    def join(u: str, v: str) -> None:
        edges[edge_key(u, v)] = 1

    root = add("r", R)
    join(root, add("r.exit", X))
    spine = [root]
    for i in range(1, f.num_vars + 1):
        spine.append(add(f"sx{i:02d}", R))
        join(spine[-2], spine[-1])
    for j in range(1, f.num_clauses + 1):
        spine.append(add(f"sc{j:02d}", R))
        join(spine[-2], spine[-1])
    join(spine[-1], add(f"sc{f.num_clauses:02d}.exit" if f.num_clauses else "r.exit2", X))

    for i in range(1, f.num_vars + 1):
        xi = add(f"X{i:02d}", R)
        join(f"sx{i:02d}", xi)
        join(xi, add(f"X{i:02d}.exit", X))
        for side, tag in (("pos", f"x{i:02d}"), ("neg", f"nx{i:02d}")):
            branch = add(tag, R)
            join(xi, branch)
            for sup in (1, 2):
                node = add(f"{tag}.{sup}", R)
                join(branch, node)
                join(node, add(f"{tag}.{sup}.ea", X))
                join(node, add(f"{tag}.{sup}.eb", X))

    for j, clause in enumerate(f.clauses, 1):
        c1 = add(f"C{j:02d}.1", R)
        c2 = add(f"C{j:02d}.2", R)
        join(c1, c2)
        join(f"sc{j:02d}", c1)
        join(c1, add(f"C{j:02d}.1.e", X))
        join(c2, add(f"C{j:02d}.2.e", X))
        for p, lit in enumerate(clause, 1):
            occurrences[lit] = occurrences.get(lit, 0) + 1
            sup = occurrences[lit]
            if sup > 2:
                raise ValueError("a literal occurs more than twice; not linear")
            v = abs(lit)
            opposite = f"nx{v:02d}" if lit > 0 else f"x{v:02d}"
            clause_node = c1 if p == 1 else c2
            join(clause_node, f"{opposite}.{sup}")
    return MultiGraph(vertices, edges), root


def check_escape_tree_instance(g: MultiGraph, root: str, f: CnfFormula) -> list[str]:
    problems = []
    if max(g.degree(v) for v in g.vertices) > 4:
        problems.append("maximum degree exceeds 4")
    if g.multiplicity(root, "r.exit") != 1:
        problems.append("root is missing its exit")
    occurrences: dict[int, int] = {}
    for j, clause in enumerate(f.clauses, 1):
        if g.multiplicity(f"C{j:02d}.1", f"C{j:02d}.2") != 1:
            problems.append(f"clause {j}: gadget pair not adjacent")
        for p, lit in enumerate(clause, 1):
            occurrences[lit] = occurrences.get(lit, 0) + 1
            v = abs(lit)
            opposite = f"nx{v:02d}" if lit > 0 else f"x{v:02d}"
            node = f"C{j:02d}.1" if p == 1 else f"C{j:02d}.2"
            if g.multiplicity(node, f"{opposite}.{occurrences[lit]}") != 1:
                problems.append(f"clause {j} literal {lit}: wrong wiring")
    for i in range(1, f.num_vars + 1):
        for tag in (f"x{i:02d}", f"nx{i:02d}"):
            if g.multiplicity(f"X{i:02d}", tag) != 1:
                problems.append(f"variable {i}: branch {tag} detached")
            for sup in (1, 2):
                node = f"{tag}.{sup}"
                exits = [w for w in g.neighbors(node) if g.is_exit(w)]
                if len(exits) != 2:
                    problems.append(f"{node}: expected two exit children")
    return problems


# ---------------------------------------------------------------------------
# SAT / QSAT to edge-deletion game
# ---------------------------------------------------------------------------

_SIDE_RE = re.compile(r"^x(\d+)\.([tf])(\d+)$")
_PATH_RE = re.compile(r"^c(\d+)\.x(\d+)\.(\d+)$")
_DERIV_RE = re.compile(r"^x(\d+)\.d([tf])$")


def _jid(i: int) -> str:
    return f"j{i:02d}"


def _side_vertex(i: int, side: str, k: int) -> str:
    return f"x{i:02d}.{side}{k:02d}"


def sat_to_nemesis(
    f: CnfFormula,
    params: ReductionParams | None = None,
    universal: set[int] | None = None,
) -> tuple[Instance, ReductionParams]:
    """Variable cycles chained start-to-goal; clause vertices behind long
    unbreakable paths with nearly-unbreakable exit edges; a main exit whose
    multiplicity makes the start-goal race tight.  `universal` marks
    variables that receive the fuse-and-detour gadget."""
    universal = universal or set()
    params = params or ReductionParams.resolve(f, electric=bool(universal))
    n, m, K, L = f.num_vars, f.num_clauses, params.K, params.L

    vertices: dict[str, VertexKind] = {}
    unbreakable_edges: list[Edge] = []
    special_edges: dict[Edge, int] = {}

    def add(v: str, kind: VertexKind = R) -> str:
        vertices[v] = kind
        return v

    for i in range(0, n + 1):
        add(_jid(i))
    for i in range(1, n + 1):
        for side in ("t", "f"):
            chain = [_jid(i - 1)]
            for k in range(1, 2 * K):
                chain.append(add(_side_vertex(i, side, k)))
            chain.append(_jid(i))
            for a, b in zip(chain, chain[1:]):
                unbreakable_edges.append(edge_key(a, b))
        if i in universal:
            # fuses replace the second edge of each side
            for side in ("t", "f"):
                fuse = edge_key(_side_vertex(i, side, 1), _side_vertex(i, side, 2))
                unbreakable_edges.remove(fuse)
                special_edges[fuse] = 1
            dt = add(f"x{i:02d}.dt")
            df = add(f"x{i:02d}.df")
            unbreakable_edges.append(edge_key(_side_vertex(i, "f", 1), dt))
            unbreakable_edges.append(edge_key(dt, _side_vertex(i, "t", 2)))
            unbreakable_edges.append(edge_key(_side_vertex(i, "t", 1), df))
            unbreakable_edges.append(edge_key(df, _side_vertex(i, "f", 2)))

    for h, clause in enumerate(f.clauses, 1):
        c = add(f"c{h:02d}")
        cx = add(f"c{h:02d}.exit", X)
        special_edges[edge_key(c, cx)] = params.clause_mult
        for lit in clause:
            v = abs(lit)
            side = "t" if lit > 0 else "f"
            chain = [_side_vertex(v, side, K)]
            for step in range(1, L):
                chain.append(add(f"c{h:02d}.x{v:02d}.{step:03d}"))
            chain.append(c)
            for a, b in zip(chain, chain[1:]):
                unbreakable_edges.append(edge_key(a, b))

    main_exit = add(f"{_jid(n)}.exit", X)
    special_edges[edge_key(_jid(n), main_exit)] = params.main_mult

    cap = len(vertices)
    params = replace(params, cap=cap)
    edges = dict(special_edges)
    for e in unbreakable_edges:
        edges[e] = cap
    inst = Instance(
        MultiGraph(vertices, edges),
        _jid(0),
        Variant.NEMESIS,
        name=f"sat reduction n={n} m={m}",
    )
    return inst, params


def qsat_to_nemesis(q: Qbf, params: ReductionParams | None = None) -> tuple[Instance, ReductionParams]:
    universal = {i + 1 for i, quant in enumerate(q.prefix) if quant == "a"}
    params = params or ReductionParams.resolve(q.matrix, electric=bool(universal))
    return sat_to_nemesis(q.matrix, params, universal)


def check_sat_instance(
    inst: Instance,
    f: CnfFormula,
    params: ReductionParams,
    universal: set[int] | None = None,
) -> list[str]:
    """Independent pass over the emitted instance: path lengths, decision
    vertex placement, multiplicities, fuse and detour shapes."""
    universal = universal or set()
    g = inst.graph
    n, m, K, L = f.num_vars, f.num_clauses, params.K, params.L
    problems = []
    if inst.start != _jid(0):
        problems.append("start is not the first junction")
    if len(g.vertices) != params.cap:
        problems.append("cap does not equal the vertex count")

    def expect_mult(u: str, v: str, mult: int) -> None:
        got = g.multiplicity(u, v)
        if got != mult:
            problems.append(f"edge ({u},{v}): multiplicity {got}, expected {mult}")

    # cycle sides: length 2K each, decision vertex at distance K
    for i in range(1, n + 1):
        for side in ("t", "f"):
            chain = (
                [_jid(i - 1)]
                + [_side_vertex(i, side, k) for k in range(1, 2 * K)]
                + [_jid(i)]
            )
            if len(chain) - 1 != 2 * K:
                problems.append(f"variable {i} side {side}: length {len(chain) - 1} != 2K")
            for a, b in zip(chain, chain[1:]):
                fuse = i in universal and {a, b} == {
                    _side_vertex(i, side, 1),
                    _side_vertex(i, side, 2),
                }
                expect_mult(a, b, 1 if fuse else params.cap)
        if i in universal:
            for mid, first, second in (
                (f"x{i:02d}.dt", _side_vertex(i, "f", 1), _side_vertex(i, "t", 2)),
                (f"x{i:02d}.df", _side_vertex(i, "t", 1), _side_vertex(i, "f", 2)),
            ):
                expect_mult(first, mid, params.cap)
                expect_mult(mid, second, params.cap)
        else:
            if f"x{i:02d}.dt" in g.vertices:
                problems.append(f"existential variable {i} has a detour gadget")

    # every direct start-goal path through the cycles has length P
    dist = {_jid(0): 0}
    frontier = [_jid(0)]
    while frontier:
        nxt = []
        for u in frontier:
            if _PATH_RE.match(u) or u.endswith(".exit") or u == f"c{1:02d}":
                continue
            for w in g.neighbors(u):
                if _PATH_RE.match(w) or g.is_exit(w) or w.startswith("c"):
                    continue
                if w not in dist:
                    dist[w] = dist[u] + 1
                    nxt.append(w)
        frontier = nxt
    for i in range(0, n + 1):
        expected = 2 * K * i
        if universal:
            pass  # detour vertices give alternative longer walks, not shorter
        if dist.get(_jid(i)) != expected:
            problems.append(f"junction {i} at distance {dist.get(_jid(i))}, expected {expected}")
    if params.P != 2 * n * K:
        problems.append("P does not equal 2nK")

    # clause paths and exits
    for h, clause in enumerate(f.clauses, 1):
        expect_mult(f"c{h:02d}", f"c{h:02d}.exit", params.clause_mult)
        for lit in clause:
            v = abs(lit)
            side = "t" if lit > 0 else "f"
            chain = (
                [_side_vertex(v, side, K)]
                + [f"c{h:02d}.x{v:02d}.{s:03d}" for s in range(1, L)]
                + [f"c{h:02d}"]
            )
            if len(chain) - 1 != L:
                problems.append(f"clause {h} literal {lit}: path length {len(chain) - 1} != L")
            for a, b in zip(chain, chain[1:]):
                expect_mult(a, b, params.cap)
    expect_mult(_jid(n), f"{_jid(n)}.exit", params.main_mult)

    # fuse census
    fuses = [e for e, mult in g.edges.items() if mult == 1]
    expected_fuses = 2 * len(universal)
    if len(fuses) != expected_fuses:
        problems.append(f"{len(fuses)} fuses, expected {expected_fuses}")

    # polynomial size guard: O(n^2 m^2) with a fixed constant
    bound = 64 * (max(n, 1) ** 2) * (max(m, 1) ** 2) + 64
    if len(g.vertices) > bound:
        problems.append(f"vertex count {len(g.vertices)} exceeds the size bound {bound}")
    return problems


# ---------------------------------------------------------------------------
# Scripted strategies for the SAT/QSAT instances
# ---------------------------------------------------------------------------

def _clauses_at_decision(f: CnfFormula, var: int, side: str) -> list[int]:
    want = var if side == "t" else -var
    return [h for h, clause in enumerate(f.clauses, 1) if want in clause]


def _realized_values(state: GameState, n: int) -> dict[int, bool]:
    """Variable values readable off the visited decision vertices."""
    values: dict[int, bool] = {}
    for i in range(1, n + 1):
        k_t = _side_vertex(i, "t", 2) in state.visited
        k_f = _side_vertex(i, "f", 2) in state.visited
        if k_t and not k_f:
            values[i] = True
        elif k_f and not k_t:
            values[i] = False
    return values


def assignment_following_fugitive(
    f: CnfFormula,
    params: ReductionParams,
    universal: set[int] | None = None,
    policy: Callable[[int, dict[int, bool]], bool] | None = None,
) -> Strategy:
    """Walk the direct path choosing sides by the (possibly reactive)
    assignment; take a detour when a fuse ahead has been burned; divert into
    a clause path whenever its exit is still at full multiplicity."""
    universal = universal or set()
    n, K, L = f.num_vars, params.K, params.L
    if policy is None:
        fixed = f.satisfying_assignment() or {}
        policy = lambda var, values: fixed.get(var, True)

    def full_clause_at(state: GameState, var: int, side: str) -> Optional[int]:
        g = state.instance.graph
        index = g.edge_index()
        for h in _clauses_at_decision(f, var, side):
            e = index[edge_key(f"c{h:02d}", f"c{h:02d}.exit")]
            if state.remaining[e] == params.clause_mult:
                return h
        return None

    def play(state: GameState) -> Optional[Move]:
        pos = state.position
        g = state.instance.graph

        def step_if_live(target: str) -> Optional[Move]:
            return Step(target) if state.multiplicity(pos, target) >= 1 else None

        jm = re.match(r"^j(\d+)$", pos)
        if jm:
            i = int(jm.group(1))
            if i == n:
                return step_if_live(f"{_jid(n)}.exit")
            var = i + 1
            if var in universal:
                return step_if_live(_side_vertex(var, "t", 1))
            side = "t" if policy(var, _realized_values(state, n)) else "f"
            return step_if_live(_side_vertex(var, side, 1))

        sm = _SIDE_RE.match(pos)
        if sm:
            var, side, k = int(sm.group(1)), sm.group(2), int(sm.group(3))
            if k == 1 and var in universal:
                nxt = _side_vertex(var, side, 2)
                if state.multiplicity(pos, nxt) >= 1:
                    return Step(nxt)
                detour = f"x{var:02d}.d" + ("f" if side == "t" else "t")
                return step_if_live(detour)
            if k == K:
                h = full_clause_at(state, var, side)
                if h is not None:
                    first = f"c{h:02d}.x{var:02d}.001" if L > 1 else f"c{h:02d}"
                    return step_if_live(first)
            if k == 2 * K - 1:
                return step_if_live(_jid(var))
            return step_if_live(_side_vertex(var, side, k + 1))

        dm = _DERIV_RE.match(pos)
        if dm:
            var, target_side = int(dm.group(1)), dm.group(2)
            return step_if_live(_side_vertex(var, target_side, 2))

        pm = _PATH_RE.match(pos)
        if pm:
            h, var, step = int(pm.group(1)), int(pm.group(2)), int(pm.group(3))
            nxt = f"c{h:02d}.x{var:02d}.{step + 1:03d}" if step + 1 < L else f"c{h:02d}"
            return step_if_live(nxt)

        cm = re.match(r"^c(\d+)$", pos)
        if cm:
            return step_if_live(f"{pos}.exit")
        return None

    return play


def clause_chipping_nemesis(
    f: CnfFormula,
    params: ReductionParams,
    universal: set[int] | None = None,
    universal_policy: Callable[[int, dict[int, bool]], bool] | None = None,
) -> Strategy:
    """The adversary line the construction's accounting relies on: burn a
    fuse to steer a universal variable, chip each clause exit once before
    the fugitive passes its decision vertex, finish the relevant clause exit
    while he walks a clause path, and spend every spare round on the main
    exit."""
    universal = universal or set()
    n = f.num_vars

    def exit_mult(state: GameState, h: int) -> int:
        return state.multiplicity(f"c{h:02d}", f"c{h:02d}.exit")

    def play(state: GameState) -> Optional[Move]:
        pos = state.position
        # universal control at the entry vertices
        sm = _SIDE_RE.match(pos)
        if sm:
            var, side, k = int(sm.group(1)), sm.group(2), int(sm.group(3))
            if k == 1 and var in universal and universal_policy is not None:
                wanted = universal_policy(var, _realized_values(state, n))
                wrong_side = (side == "t" and not wanted) or (side == "f" and wanted)
                fuse_u, fuse_v = pos, _side_vertex(var, side, 2)
                if wrong_side and state.multiplicity(fuse_u, fuse_v) >= 1:
                    return Delete(fuse_u, fuse_v)
        # finish the clause exit the fugitive is racing toward
        pm = _PATH_RE.match(pos)
        cm = re.match(r"^c(\d+)$", pos)
        if pm or cm:
            h = int((pm or cm).group(1))
            if exit_mult(state, h) >= 1:
                return Delete(f"c{h:02d}", f"c{h:02d}.exit")
        # chip the clause exits reachable from the side he is walking
        target_side: tuple[int, str] | None = None
        if sm:
            target_side = (int(sm.group(1)), sm.group(2))
        dm = _DERIV_RE.match(pos)
        if dm:
            target_side = (int(dm.group(1)), dm.group(2))
        if target_side is not None:
            var, side = target_side
            for h in _clauses_at_decision(f, var, side):
                if exit_mult(state, h) == params.clause_mult:
                    return Delete(f"c{h:02d}", f"c{h:02d}.exit")
        # otherwise chip the main exit, then any surviving clause exit
        if state.multiplicity(_jid(n), f"{_jid(n)}.exit") >= 1:
            return Delete(_jid(n), f"{_jid(n)}.exit")
        for h in range(1, f.num_clauses + 1):
            if exit_mult(state, h) >= 1:
                return Delete(f"c{h:02d}", f"c{h:02d}.exit")
        moves = legal_moves(state)
        deletes = [m for m in moves if isinstance(m, Delete)]
        return (deletes or moves)[0] if moves else None

    return play


# ---------------------------------------------------------------------------
# Multigraph to simple graph translation
# ---------------------------------------------------------------------------

def multigraph_to_simple(inst: Instance, N: int | None = None, cap: int | None = None) -> Instance:
    """Replace regular vertices by N copies; unbreakable edges become
    bicliques, multiplicity-1 edges become matchings, and each exit edge of
    multiplicity k becomes k fresh two-exit gadget vertices.  Edges with
    1 < multiplicity < cap that do not touch an exit have no translation and
    are rejected."""
    if inst.variant is not Variant.NEMESIS:
        raise ValueError("the translation is defined for nemesis instances")
    g = inst.graph
    if cap is None:
        cap = len(g.vertices)
    if N is None:
        N = len(g.vertices)  # loop-free plays last under |V| rounds
    if N < 2:
        raise ValueError("N must be at least 2")
    if g.is_exit(inst.start):
        raise ValueError("start must be regular")

    vertices: dict[str, VertexKind] = {}
    edges: dict[Edge, int] = {}
    for v in g.regulars:
        for i in range(1, N + 1):
            vertices[f"{v}#{i}"] = R

    def copies(v: str) -> list[str]:
        return [f"{v}#{i}" for i in range(1, N + 1)]

    for (u, v), mult in sorted(g.edges.items()):
        u_exit, v_exit = g.is_exit(u), g.is_exit(v)
        if u_exit and v_exit:
            raise InstanceSemanticError("exit-exit edge; validate first")
        if u_exit or v_exit:
            reg, ex = (v, u) if u_exit else (u, v)
            for j in range(1, mult + 1):
                p = f"{reg}~{ex}.p{j}"
                vertices[p] = R
                for slot in ("a", "b"):
                    xid = f"{p}.e{slot}"
                    vertices[xid] = X
                    edges[edge_key(p, xid)] = 1
                for ci in copies(reg):
                    edges[edge_key(ci, p)] = 1
        elif mult == 1:
            for i in range(1, N + 1):
                edges[edge_key(f"{u}#{i}", f"{v}#{i}")] = 1
        elif mult >= cap:
            for ci in copies(u):
                for cj in copies(v):
                    edges[edge_key(ci, cj)] = 1
        else:
            raise ValueError(
                f"edge ({u},{v}) multiplicity {mult} is neither 1, unbreakable (>= {cap}), nor an exit edge"
            )
    return Instance(
        MultiGraph(vertices, edges),
        f"{inst.start}#1",
        Variant.NEMESIS,
        name=f"{inst.name} simple N={N}".strip(),
    )


def check_simple_translation(out: Instance, inp: Instance, N: int, cap: int | None = None) -> list[str]:
    problems = []
    g_in, g_out = inp.graph, out.graph
    if cap is None:
        cap = len(g_in.vertices)
    if any(m != 1 for m in g_out.edges.values()):
        problems.append("output is not simple")
    if out.start != f"{inp.start}#1":
        problems.append("start is not copy 1 of the old start")
    expected_edges = 0
    for (u, v), mult in g_in.edges.items():
        u_exit, v_exit = g_in.is_exit(u), g_in.is_exit(v)
        if u_exit or v_exit:
            reg, ex = (v, u) if u_exit else (u, v)
            for j in range(1, mult + 1):
                p = f"{reg}~{ex}.p{j}"
                exits = [w for w in g_out.neighbors(p) if g_out.is_exit(w)] if p in g_out else []
                if len(exits) != 2:
                    problems.append(f"gadget vertex {p}: expected two exits")
                for i in range(1, N + 1):
                    if g_out.multiplicity(f"{reg}#{i}", p) != 1:
                        problems.append(f"gadget {p} not joined to copy {i}")
            expected_edges += mult * (N + 2)
        elif mult == 1:
            for i in range(1, N + 1):
                if g_out.multiplicity(f"{u}#{i}", f"{v}#{i}") != 1:
                    problems.append(f"matching edge ({u}#{i},{v}#{i}) missing")
            for i in range(1, N + 1):
                for j in range(1, N + 1):
                    if i != j and g_out.multiplicity(f"{u}#{i}", f"{v}#{j}") != 0:
                        problems.append(f"stray edge across the ({u},{v}) matching")
                        break
            expected_edges += N
        elif mult >= cap:
            for i in range(1, N + 1):
                for j in range(1, N + 1):
                    if g_out.multiplicity(f"{u}#{i}", f"{v}#{j}") != 1:
                        problems.append(f"biclique edge ({u}#{i},{v}#{j}) missing")
            expected_edges += N * N
    if len(g_out.edges) != expected_edges:
        problems.append(f"{len(g_out.edges)} edges, expected {expected_edges}")
    return problems


# ---------------------------------------------------------------------------
# Cat herding reduction
# ---------------------------------------------------------------------------

def nemesis_to_catherding(inst: Instance) -> tuple[Instance, int]:
    """Attach a clique of 2m vertices at each of the two exits (identifying
    the exit with one clique vertex); the fugitive wins the source game iff
    the cat survives more than 2m rounds."""
    g = inst.graph
    if inst.variant is not Variant.NEMESIS:
        raise ValueError("expected a nemesis instance")
    if any(mult != 1 for mult in g.edges.values()):
        raise ValueError("expected a simple graph; translate multiplicities first")
    if len(g.exits) != 2:
        raise ValueError("expected exactly two exits; apply to_two_exits first")
    m = len(g.edges)
    size = 2 * m
    vertices = {v: R for v in g.vertices}  # exits become regular clique members
    edges = dict(g.edges)
    for x in g.exits:
        members = [x] + [f"{x}.k{j}" for j in range(1, size)]
        for extra in members[1:]:
            vertices[extra] = R
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                edges[edge_key(members[a], members[b])] = 1
    out = Instance(
        MultiGraph(vertices, edges),
        inst.start,
        Variant.CATHERDING,
        name=f"{inst.name} catherding".strip(),
    )
    return out, 2 * m


def check_catherding(out: Instance, inp: Instance, threshold: int) -> list[str]:
    problems = []
    if out.graph.exits:
        problems.append("output contains exit vertices")
    m = len(inp.graph.edges)
    if threshold != 2 * m:
        problems.append(f"threshold {threshold} != 2m = {2 * m}")
    for x in inp.graph.exits:
        members = [x] + [f"{x}.k{j}" for j in range(1, 2 * m)]
        if len(members) != 2 * m:
            problems.append("clique has the wrong size")
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                if out.graph.multiplicity(members[a], members[b]) != 1:
                    problems.append(f"clique at {x}: missing edge {members[a]}-{members[b]}")
                    break
    if out.start != inp.start:
        problems.append("start vertex changed")
    return problems
