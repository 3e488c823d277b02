"""Impartial building games GEN and DNG for geodetic convexity on graphs."""

from .bits import format_set
from .closed_forms import expected_family_N, expected_frattini, expected_nim, table1
from .convexity import (
    ClosureKind,
    ConvexityReport,
    FamilyTooLarge,
    analyze_convexity,
    ceil,
    closed_sets,
    convex_hull,
    frattini,
    geodetic_closure,
    intersection_lattice,
    interval,
    is_generating,
    maximal_nongenerating,
    minimal_generating,
)
from .families import FamilySpec, SpecError, family, parse_family_spec, render_family_spec
from .game import (
    Game,
    GameSpec,
    GameTooLarge,
    IllegalPosition,
    mex,
    nim_brute,
    nim_fast,
    nim_sum,
    options,
    parity_forced_nim,
    winning_move,
)
from .graph import (
    Graph,
    GraphError,
    box_product,
    corona,
    disjoint_union,
    join,
    make_graph,
    one_clique_sum,
    read_graph,
    write_graph,
)
from .structure import (
    StructureDigraph,
    TypeTriple,
    build_structure_digraph,
    export_dot,
    game_nim,
    simplify,
    structure_nim,
    type_calculus,
)

__version__ = "0.1.0"

__all__ = [
    "ClosureKind",
    "ConvexityReport",
    "FamilySpec",
    "FamilyTooLarge",
    "Game",
    "GameSpec",
    "GameTooLarge",
    "Graph",
    "GraphError",
    "IllegalPosition",
    "SpecError",
    "StructureDigraph",
    "TypeTriple",
    "analyze_convexity",
    "box_product",
    "build_structure_digraph",
    "ceil",
    "closed_sets",
    "convex_hull",
    "corona",
    "disjoint_union",
    "expected_family_N",
    "expected_frattini",
    "expected_nim",
    "export_dot",
    "family",
    "format_set",
    "frattini",
    "game_nim",
    "geodetic_closure",
    "intersection_lattice",
    "interval",
    "is_generating",
    "join",
    "make_graph",
    "maximal_nongenerating",
    "mex",
    "minimal_generating",
    "nim_brute",
    "nim_fast",
    "nim_sum",
    "one_clique_sum",
    "options",
    "parity_forced_nim",
    "parse_family_spec",
    "read_graph",
    "render_family_spec",
    "simplify",
    "structure_nim",
    "table1",
    "type_calculus",
    "winning_move",
    "write_graph",
]
