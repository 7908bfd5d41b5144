"""Nemesis: an edge-deletion escape game on multigraphs.

The fugitive walks one edge per round; the adversary then deletes one edge
copy (anywhere, or only next to the fugitive in the Blizzard variant).  This
package bundles the referee, exact and linear-time solvers, the hardness
constructions as instance generators, a CLI, and a small game service.
"""

from .graph import (
    Instance,
    InstanceError,
    InstanceSemanticError,
    InstanceSyntaxError,
    MultiGraph,
    Variant,
    VertexKind,
    duplicate_exits,
    instance_digest,
    make_instance,
    parse_instance,
    prune,
    serialize_instance,
    simplify,
    validate,
)
from .rules import (
    Delete,
    GameState,
    IllegalMove,
    Move,
    Pass,
    Phase,
    Status,
    Step,
    Winner,
    apply_move,
    game_status,
    initial_state,
    legal_moves,
    run_match,
)
from .exact import (
    BudgetExhausted,
    CatValue,
    SearchConfig,
    Verdict,
    best_response_adversary,
    best_response_fugitive,
    cat_value,
    solve_blizzard,
    solve_from_state,
    solve_instance,
    solve_nemesis,
)
from .fast import (
    BinaryEscapeTree,
    WinRanks,
    blizzard_win_sets,
    escape_tree_strategy,
    find_escape_tree,
    find_escape_tree_near,
    solve_nemesis_deg3,
    solve_nemesis_tree,
    verify_escape_tree,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
