"""Command-line entry point: solve, verify, generate, reduce, simulate,
play (interactive terminal), and serve (HTTP API + browser UI).

Exit codes for `solve`: 0 fugitive, 1 adversary, 2 unknown (budget), 3 usage
or method/class mismatch.  `verify` exits 0 on agreement, 1 on mismatch,
3 on refusal or usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .exact import (
    CatValue,
    SearchConfig,
    Verdict,
    cat_value,
    solve_blizzard,
    solve_nemesis,
)
from .fast import blizzard_win_sets, solve_nemesis_deg3, solve_nemesis_tree, _is_forest, _is_simple
from .graph import (
    Instance,
    InstanceError,
    Variant,
    instance_digest,
    parse_instance,
    serialize_instance,
    validate,
)
from .instances import named_instances
from .reductions import (
    CnfFormula,
    Qbf,
    ReductionParams,
    cnf_to_escape_tree_instance,
    grid_instance,
    merge_exits,
    multigraph_to_simple,
    nemesis_to_catherding,
    parse_dimacs,
    parse_qdimacs,
    qsat_to_nemesis,
    sat_to_nemesis,
    to_two_exits,
)
from .rules import (
    Status,
    game_status,
    initial_state,
    legal_moves,
    run_match,
    transcript_to_json,
)
from .strategies import STRATEGY_NAMES, engine_move, make_strategy

SCHEMA_VERSION = "nemesis/1"

EXIT_FUGITIVE = 0
EXIT_ADVERSARY = 1
EXIT_UNKNOWN = 2
EXIT_ERROR = 3


class CliError(Exception):
    pass


def _load_instance(path: str) -> Instance:
    if path in named_instances():
        inst = named_instances()[path]
    else:
        try:
            inst = parse_instance(Path(path).read_text())
        except FileNotFoundError:
            raise CliError(f"no such file: {path}")
        except InstanceError as exc:
            raise CliError(f"bad instance: {exc}")
    inst, _ = validate(inst)
    return inst


def _emit(obj: dict, out) -> None:
    out.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _write_instance(inst: Instance, path: str | None, out) -> None:
    text = serialize_instance(inst)
    if path:
        Path(path).write_text(text)
    else:
        out.write(text)


# ---------------------------------------------------------------------------
# solve
# ---------------------------------------------------------------------------

def _classify(inst: Instance) -> str:
    if inst.variant is Variant.BLIZZARD:
        return "blizzard"
    if inst.variant is Variant.CATHERDING:
        return "cat"
    g = inst.graph
    if _is_forest(g):
        return "tree"
    if _is_simple(g) and all(g.degree(v) <= 3 for v in g.vertices):
        return "deg3"
    return "exact"


def cmd_solve(args, out=sys.stdout) -> int:
    inst = _load_instance(args.file)
    cfg = SearchConfig(node_budget=args.budget, multiplicity_cap=args.cap)
    method = args.method
    if method == "auto":
        method = _classify(inst)
        if method == "cat":
            method = "exact"
    try:
        if method == "tree":
            if inst.variant is not Variant.NEMESIS or not _is_forest(inst.graph):
                raise CliError("tree method needs an acyclic simple nemesis instance")
            verdict = solve_nemesis_tree(inst)
        elif method == "deg3":
            if inst.variant is not Variant.NEMESIS:
                raise CliError("deg3 method needs a nemesis instance")
            verdict = solve_nemesis_deg3(inst)
        elif method == "blizzard":
            if inst.variant is not Variant.BLIZZARD:
                raise CliError("blizzard method needs a blizzard instance")
            _, verdict = blizzard_win_sets(inst)
        elif method == "exact":
            if inst.variant is Variant.CATHERDING:
                cv = cat_value(inst, cfg)
                payload = {
                    "schema": SCHEMA_VERSION,
                    "variant": "catherding",
                    "value": cv.value,
                    "exact": cv.exact,
                    "nodes": cv.nodes,
                    "bounds": [cv.lower, cv.upper],
                }
                _emit(payload, out)
                return EXIT_FUGITIVE if cv.exact else EXIT_UNKNOWN
            if inst.variant is Variant.BLIZZARD:
                verdict = solve_blizzard(inst, cfg)
            else:
                verdict = solve_nemesis(inst, cfg)
        else:
            raise CliError(f"unknown method {method!r}")
    except ValueError as exc:
        raise CliError(str(exc))
    payload = {"schema": SCHEMA_VERSION, **verdict.to_json()}
    if not args.certificate:
        payload.pop("certificate", None)
    _emit(payload, out)
    if not verdict.exact:
        return EXIT_UNKNOWN
    return EXIT_FUGITIVE if verdict.winner == "fugitive" else EXIT_ADVERSARY


# ---------------------------------------------------------------------------
# verify (fast solver vs oracle agreement)
# ---------------------------------------------------------------------------

VERIFY_MAX_EDGES = 16
VERIFY_MAX_VERTICES = 14


def cmd_verify(args, out=sys.stdout) -> int:
    inst = _load_instance(args.file)
    g = inst.graph
    if not args.force and (
        len(g.edges) > VERIFY_MAX_EDGES or len(g.vertices) > VERIFY_MAX_VERTICES
    ):
        raise CliError(
            f"instance too large for the oracle ({len(g.vertices)} vertices, "
            f"{len(g.edges)} edges); pass --force to insist"
        )
    cfg = SearchConfig(node_budget=args.budget)
    kind = _classify(inst)
    if kind == "blizzard":
        _, fast_v = blizzard_win_sets(inst)
        oracle = solve_blizzard(inst, cfg)
    elif kind == "tree":
        fast_v = solve_nemesis_tree(inst)
        oracle = solve_nemesis(inst, cfg)
    elif kind == "deg3":
        fast_v = solve_nemesis_deg3(inst)
        oracle = solve_nemesis(inst, cfg)
    else:
        raise CliError("no fast solver applies to this instance class")
    agree = fast_v.winner == oracle.winner and oracle.exact
    payload = {
        "schema": SCHEMA_VERSION,
        "method": kind,
        "fast": fast_v.winner,
        "oracle": oracle.winner,
        "oracle_exact": oracle.exact,
        "agree": agree,
    }
    _emit(payload, out)
    return 0 if agree else 1


# ---------------------------------------------------------------------------
# generate / reduce
# ---------------------------------------------------------------------------

def _parse_params(text: str | None) -> dict[str, int]:
    if not text:
        return {}
    out = {}
    for part in text.split(","):
        key, _, value = part.partition("=")
        key = key.strip()
        if key not in ("K", "L", "N"):
            raise CliError(f"unknown parameter {key!r}")
        out[key] = int(value)
    return out


def cmd_generate(args, out=sys.stdout) -> int:
    params = _parse_params(args.params)
    if args.what == "grid":
        start = None
        if args.start:
            r, _, c = args.start.partition(",")
            start = (int(r), int(c))
        inst = grid_instance(args.rows, args.cols, start)
    elif args.what == "sat":
        f = parse_dimacs(Path(args.cnf).read_text())
        inst, resolved = sat_to_nemesis(
            f, ReductionParams.resolve(f, K=params.get("K"), L=params.get("L"))
        )
        sys.stderr.write(
            f"K={resolved.K} L={resolved.L} P={resolved.P} "
            f"main_mult={resolved.main_mult} clause_mult={resolved.clause_mult} cap={resolved.cap}\n"
        )
    elif args.what == "qsat":
        q = parse_qdimacs(Path(args.qbf).read_text())
        resolved = ReductionParams.resolve(
            q.matrix, K=params.get("K"), L=params.get("L"), electric="a" in q.prefix
        )
        inst, resolved = qsat_to_nemesis(q, resolved)
        sys.stderr.write(f"K={resolved.K} L={resolved.L} P={resolved.P} cap={resolved.cap}\n")
    elif args.what == "lsat-bet":
        f = parse_dimacs(Path(args.cnf).read_text())
        g, root = cnf_to_escape_tree_instance(f)
        inst = Instance(g, root, Variant.NEMESIS, name="escape-tree search instance")
        sys.stderr.write(f"root={root}\n")
    else:
        raise CliError(f"unknown generator {args.what!r}")
    _write_instance(inst, args.out, out)
    return 0


def cmd_reduce(args, out=sys.stdout) -> int:
    inst = _load_instance(args.input)
    params = _parse_params(args.params)
    if args.kind == "merge-exits":
        result = merge_exits(inst)
    elif args.kind == "two-exits":
        result = to_two_exits(inst)
    elif args.kind == "simple":
        result = multigraph_to_simple(inst, N=params.get("N"))
    elif args.kind == "catherding":
        if len(inst.graph.exits) != 2:
            inst = to_two_exits(inst)
        result, threshold = nemesis_to_catherding(inst)
        sys.stderr.write(f"threshold={threshold}\n")
    else:
        raise CliError(f"unknown reduction {args.kind!r}")
    _write_instance(result, args.output, out)
    return 0


# ---------------------------------------------------------------------------
# simulate
# ---------------------------------------------------------------------------

def cmd_simulate(args, out=sys.stdout) -> int:
    inst = _load_instance(args.file)
    try:
        fug = make_strategy(args.fugitive, inst, seed=args.seed, budget=args.budget or 200_000)
        adv = make_strategy(args.adversary, inst, seed=(args.seed or 0) + 1, budget=args.budget or 200_000)
    except ValueError as exc:
        raise CliError(str(exc))
    result = run_match(inst, fug, adv, cap=args.cap)
    payload = transcript_to_json(inst, result.transcript, result.status)
    payload["schema"] = SCHEMA_VERSION
    payload["winner"] = result.winner.value
    if result.forfeited_by:
        payload["forfeited_by"] = result.forfeited_by
        payload["note"] = result.note
    _emit(payload, out)
    return 0


# ---------------------------------------------------------------------------
# play (interactive)
# ---------------------------------------------------------------------------

def _render_state(state, out) -> None:
    g = state.instance.graph
    out.write(f"\nround {state.round}, {state.phase.value}\n")
    index = g.edge_index()
    for v in g.sorted_vertices():
        marks = []
        if v == state.position:
            marks.append("fugitive")
        if g.is_exit(v):
            marks.append("exit")
        if v in state.visited and v != state.position:
            marks.append("visited")
        live = []
        for w in g.neighbors(v):
            m = state.remaining[index[(min(v, w), max(v, w))]]
            if m > 0:
                live.append(f"{w}" + (f" x{m}" if m > 1 else ""))
        tag = f" ({', '.join(marks)})" if marks else ""
        out.write(f"  {v}{tag}: {', '.join(live) if live else '-'}\n")


def cmd_play(args, out=sys.stdout, inp=sys.stdin) -> int:
    inst = _load_instance(args.file)
    human_fugitive = args.as_role == "fugitive"
    cfg = SearchConfig(node_budget=args.budget or 200_000)
    state = initial_state(inst)
    out.write(f"playing {inst.name or args.file} as {args.as_role}\n")
    while True:
        status = game_status(state)
        if not status.ongoing:
            break
        human_turn = (state.phase.value == "fugitive_to_move") == human_fugitive
        if human_turn:
            _render_state(state, out)
            moves = legal_moves(state)
            for i, m in enumerate(moves, 1):
                out.write(f"  [{i}] {m}\n")
            out.write("move> ")
            out.flush()
            line = inp.readline()
            if not line:
                out.write("\nsession aborted\n")
                return EXIT_ERROR
            text = line.strip()
            chosen = None
            if text.isdigit() and 1 <= int(text) <= len(moves):
                chosen = moves[int(text) - 1]
            else:
                for m in moves:
                    if getattr(m, "to", None) == text:
                        chosen = m
                        break
            if chosen is None:
                out.write("illegal choice, try again\n")
                continue
            from .rules import apply_move

            state = apply_move(state, chosen)
        else:
            move = engine_move(state, cfg)
            if move is None:
                out.write("engine resigns\n")
                break
            out.write(f"engine: {move}\n")
            from .rules import apply_move

            state = apply_move(state, move)
    status = game_status(state)
    banner = {
        "fugitive_won": "the fugitive escapes!",
        "adversary_won": "the fugitive is trapped.",
        "trapped": "the cat is caught.",
        "ongoing": "game aborted.",
    }[status.kind]
    out.write(f"\n=== {banner} (round {status.round}) ===\n")
    you_won = (status.kind == "fugitive_won") == human_fugitive and status.kind != "ongoing"
    out.write("you win!\n" if you_won else "you lose.\n")
    return 0


# ---------------------------------------------------------------------------
# serve
# ---------------------------------------------------------------------------

def cmd_serve(args, out=sys.stdout) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(
        budget=args.budget or 200_000,
        ui_dir=args.ui,
        transcripts=args.transcripts,
    )
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nemesis",
        description="Edge-deletion escape games: solvers, generators, referee, and service.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    json_note = "emit JSON (the default: all reporting commands print JSON)"

    p = sub.add_parser("solve", help="decide the winner of an instance")
    p.add_argument("file", help="instance file, or a named instance (I1..I5)")
    p.add_argument("--method", default="auto", choices=["auto", "exact", "tree", "deg3", "blizzard"])
    p.add_argument("--budget", type=int, default=None, help="node budget for the exact solver")
    p.add_argument("--cap", type=int, default=None, help="multiplicity cap override")
    p.add_argument("--certificate", action="store_true", help="emit the witness certificate")
    p.add_argument("--json", action="store_true", help=json_note)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a fast solver against the exact oracle")
    p.add_argument("file")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--force", action="store_true", help="run the oracle on an oversized instance")
    p.add_argument("--oracle", action="store_true", help="(implied) compare against the oracle")
    p.add_argument("--json", action="store_true", help=json_note)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="generate an instance")
    p.add_argument("what", choices=["grid", "sat", "qsat", "lsat-bet"])
    p.add_argument("--rows", type=int, default=5)
    p.add_argument("--cols", type=int, default=5)
    p.add_argument("--start", default=None, help="grid start as 'row,col'")
    p.add_argument("--cnf", default=None, help="DIMACS file for sat / lsat-bet")
    p.add_argument("--qbf", default=None, help="QDIMACS file for qsat")
    p.add_argument("--params", default=None, help="overrides, e.g. K=4,L=30,N=6")
    p.add_argument("--out", default=None, help="output file (default stdout)")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("reduce", help="transform an instance")
    p.add_argument("kind", choices=["two-exits", "merge-exits", "simple", "catherding"])
    p.add_argument("input")
    p.add_argument("output", nargs="?", default=None)
    p.add_argument("--params", default=None, help="e.g. N=6 for the simple translation")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("simulate", help="run a scripted match")
    p.add_argument("file")
    p.add_argument("--fugitive", default="shortest-path", help=f"one of {STRATEGY_NAMES}")
    p.add_argument("--adversary", default="reactive-blocker", help=f"one of {STRATEGY_NAMES}")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--json", action="store_true", help=json_note)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("play", help="interactive terminal game against the engine")
    p.add_argument("file")
    p.add_argument("--as", dest="as_role", default="fugitive", choices=["fugitive", "adversary"])
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=cmd_play)

    p = sub.add_parser("serve", help="HTTP API + browser UI")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--ui", default=None, help="directory of built UI assets to serve at /")
    p.add_argument("--transcripts", default=None, help="append finished-game transcripts to this JSONL file")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_ERROR
    except InstanceError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
