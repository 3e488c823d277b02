"""Command-line interface: ``ggl nim|analyze|diagram|table1|verify|search``.

Exit status: 0 on success, 1 when a verification finds a mismatch, 2 on
usage, parse or guard errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Callable, Iterable, Sequence

from . import bits
from .closed_forms import Cell, default_rows, evaluate_case
from .convexity import (
    DEFAULT_FAMILY_CAP,
    ClosureKind,
    FamilyTooLarge,
    analyze_convexity,
    convex_hull,
    frattini,
    geodetic_closure,
    maximal_nongenerating,
)
from .families import SpecError, family
from .game import DEFAULT_BRUTE_LIMIT, Game, GameSpec, GameTooLarge, IllegalPosition, nim_brute, nim_fast, winning_move
from .graph import (
    Graph,
    GraphError,
    box_product,
    disjoint_union,
    format_graph_text,
    make_graph,
    one_clique_sum,
    read_graph,
    simplicial_vertices,
)
from .laws import box_family, box_frattini, box_hull, clique_sum_family, clique_sum_frattini, union_family, union_frattini
from .sampling import connected_graphs, random_connected_graph
from .structure import (
    StructureError,
    build_structure_digraph,
    export_dot,
    game_nim,
    simplify,
    structure_winning_move,
    type_calculus,
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2
ENGINES = ("auto", "structure", "fast", "brute")
DEFAULT_EDGE_P = 0.4


class UsageError(Exception):
    pass


# -- engines ------------------------------------------------------------------


def compute_nim(g: Graph, spec: GameSpec, engine: str = "auto", cap: int = DEFAULT_FAMILY_CAP) -> tuple[int, str]:
    """Nim-number of the game from the empty position and the engine used."""
    if engine in ("auto", "structure"):
        try:
            return game_nim(type_calculus(build_structure_digraph(g, spec, cap=cap))), "structure"
        except (FamilyTooLarge, StructureError):
            if engine == "structure":
                raise
        engine = "brute"
    if engine == "fast":
        return nim_fast(g, spec, cap=cap), "fast"
    return nim_brute(g, spec), "brute"


def _structure_engine(cap: int) -> Callable[[Graph, Game], int]:
    def run(g: Graph, game: Game) -> int:
        return compute_nim(g, GameSpec(game), "structure", cap)[0]
    return run


# -- helpers ------------------------------------------------------------------


def load_graph(args: argparse.Namespace) -> tuple[Graph, str]:
    if bool(args.family) == bool(args.graph):
        raise UsageError("give exactly one of --family and --graph")
    if args.family:
        return family(args.family), args.family
    return read_graph(args.graph), str(args.graph)


def _fmt(g: Graph, mask: int) -> str:
    return bits.format_set(mask, g.labels)


def _fmt_family(g: Graph, fam: Iterable[int]) -> str:
    return "{" + ", ".join(_fmt(g, m) for m in fam) + "}"


def _json_family(fam: Iterable[int]) -> list[list[int]]:
    return [bits.to_list(m) for m in fam]


def _emit(args: argparse.Namespace, payload: dict, lines: Sequence[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


def _pool_map(fn: Callable, items: list, workers: int) -> list:
    """Order-preserving map, optionally across processes."""
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


# -- nim ----------------------------------------------------------------------


def cmd_nim(args: argparse.Namespace) -> int:
    g, source = load_graph(args)
    spec = GameSpec(Game(args.game), ClosureKind(args.closure))
    t0 = time.perf_counter()
    nim, engine = compute_nim(g, spec, args.engine, args.max_family)
    if engine == "structure":
        d = type_calculus(build_structure_digraph(g, spec, cap=args.max_family))
        move = structure_winning_move(d)
    else:
        move = winning_move(g, spec) if g.n <= DEFAULT_BRUTE_LIMIT else None
    elapsed = time.perf_counter() - t0
    payload = {
        "graph": source, "game": spec.game.name, "closure": spec.closure.value,
        "nim": nim, "winning_move": move, "engine": engine, "seconds": round(elapsed, 6),
    }
    lines = [
        f"{spec} on {source}: nim {nim}",
        "winning first move: " + ("none" if move is None else g.label(move)),
        f"engine: {engine}  time: {elapsed:.3f}s",
    ]
    _emit(args, payload, lines)
    return EXIT_OK


# -- analyze ------------------------------------------------------------------


def operators_differ(g: Graph, limit: int = 20) -> bool | None:
    """Whether some set has different hull and geodetic closure; None if too large."""
    if g.n > limit:
        return None
    return any(convex_hull(g, s) != geodetic_closure(g, s) for s in range(1 << g.n))


def cmd_analyze(args: argparse.Namespace) -> int:
    g, source = load_graph(args)
    kinds = [ClosureKind.HULL, ClosureKind.GEODETIC] if args.both_closures else [ClosureKind(args.closure)]
    payload: dict = {"graph": source, "vertices": g.n, "edges": g.num_edges,
                     "simplicial": bits.to_list(simplicial_vertices(g)), "closures": {}}
    lines = [f"graph: {source}", f"|V| = {g.n}  |E| = {g.num_edges}",
             f"simplicial: {_fmt(g, simplicial_vertices(g))}"]
    reports = {}
    for kind in kinds:
        r = analyze_convexity(g, kind, args.max_family)
        reports[kind] = r
        payload["closures"][kind.value] = {
            "N": _json_family(r.maximal), "G": _json_family(r.minimal),
            "phi": bits.to_list(r.phi), "intersection_sets": len(r.intersection_sets),
        }
        lines += [
            f"[{kind.value}]",
            f"  N   ({len(r.maximal)}): {_fmt_family(g, r.maximal)}",
            f"  G   ({len(r.minimal)}): {_fmt_family(g, r.minimal)}",
            f"  Phi: {_fmt(g, r.phi)}",
            f"  |I| = {len(r.intersection_sets)}",
        ]
    if args.both_closures:
        hull, geo = reports[ClosureKind.HULL], reports[ClosureKind.GEODETIC]
        same = hull.maximal == geo.maximal and hull.minimal == geo.minimal
        differ = operators_differ(g)
        nims = {
            f"{game.name}/{kind.value}": compute_nim(g, GameSpec(game, kind), "auto", args.max_family)[0]
            for game in Game for kind in ClosureKind
        }
        games_equal = all(nims[f"{game.name}/hull"] == nims[f"{game.name}/geodetic"] for game in Game)
        payload.update(families_equal=same, operators_differ=differ, nims=nims, games_equal=games_equal)
        lines += [
            "families: " + ("equal" if same else "differ"),
            "operators: " + {True: "differ", False: "equal", None: "not checked (too many vertices)"}[differ],
            "nims: " + "  ".join(f"{k}={v}" for k, v in nims.items()),
            "games: " + ("equal" if games_equal else "differ"),
        ]
    _emit(args, payload, lines)
    return EXIT_OK


# -- diagram ------------------------------------------------------------------


def cmd_diagram(args: argparse.Namespace) -> int:
    g, source = load_graph(args)
    spec = GameSpec(Game(args.game), ClosureKind(args.closure))
    d = type_calculus(build_structure_digraph(g, spec, cap=args.max_family))
    target = simplify(d) if args.simplified else d
    nodes = len(target.nodes) if args.simplified else len(d.classes)
    dot = export_dot(target, name=f"{spec} {source}")
    summary = f"{spec} on {source}: nim {game_nim(d)}, {nodes} nodes"
    if args.output:
        Path(args.output).write_text(dot)
        print(summary)
    else:
        sys.stdout.write(dot)
        print(summary, file=sys.stderr)
    return EXIT_OK


# -- table1 -------------------------------------------------------------------


def _table1_job(job: tuple[int, int, int, bool]) -> list[Cell]:
    row_i, case_i, cap, perturb = job
    case = default_rows()[row_i].cases[case_i]
    cells = evaluate_case(case, _structure_engine(cap))
    if perturb:
        for c in cells:
            if c.expected is not None:
                c.expected += 1
                c.ok = c.expected == c.computed
    return cells


def cmd_table1(args: argparse.Namespace) -> int:
    rows = default_rows()
    wanted = set(args.rows.split(",")) if args.rows else None
    jobs = [
        (ri, ci, args.max_family, args.perturb)
        for ri, row in enumerate(rows)
        for ci, case in enumerate(row.cases)
        if wanted is None or case.row in wanted
    ]
    t0 = time.perf_counter()
    cells = [c for part in _pool_map(_table1_job, jobs, args.workers) for c in part]
    elapsed = time.perf_counter() - t0
    failed = [c for c in cells if not c.ok]
    if args.json:
        print(json.dumps({"cells": [c.as_dict() for c in cells], "failed": len(failed),
                          "workers": args.workers, "seconds": round(elapsed, 3)}, indent=2))
    else:
        width = max((len(c.param) for c in cells), default=5)
        for c in cells:
            mark = "ok  " if c.ok else "FAIL"
            print(f"{mark} {c.row:<13} {c.param:<{width}} {c.game:<3} expected {c.expected} computed {c.computed}")
        notes = sorted({c.note for c in cells if c.note})
        for note in notes:
            print(f"note: {note}")
        print(f"{len(cells) - len(failed)}/{len(cells)} cells match  ({elapsed:.1f}s, workers={args.workers})")
    return EXIT_MISMATCH if failed else EXIT_OK


# -- verify -------------------------------------------------------------------


def engine_mismatches(g: Graph) -> list[str]:
    """Compare the three engines on every game and closure."""
    out = []
    for kind in ClosureKind:
        maximal = maximal_nongenerating(g, kind)
        for game in Game:
            spec = GameSpec(game, kind)
            b = nim_brute(g, spec)
            f = nim_fast(g, spec, maximal)
            s = game_nim(type_calculus(build_structure_digraph(g, spec, maximal)))
            if not b == f == s:
                out.append(f"{spec}: brute {b} fast {f} structure {s}")
    return out


def nongenerator_mismatches(g: Graph) -> list[str]:
    """Phi is exactly the set of vertices removable from every generating set."""
    full = g.vertices
    generating = [s for s in range(1 << g.n) if convex_hull(g, s) == full]
    removable = 0
    for v in range(g.n):
        bit = 1 << v
        if all(convex_hull(g, s & ~bit) == full for s in generating):
            removable |= bit
    phi = frattini(g)
    return [] if phi == removable else [f"Phi {bits.to_list(phi)} but removable {bits.to_list(removable)}"]


def law_mismatches(g: Graph, h: Graph, rng: random.Random) -> list[str]:
    out = []
    ng, nh = maximal_nongenerating(g), maximal_nongenerating(h)
    u = disjoint_union(g, h)
    if maximal_nongenerating(u) != union_family(ng, g.n, nh, h.n):
        out.append("disjoint union N law")
    if frattini(u) != union_frattini(g, h):
        out.append("disjoint union Phi law")
    if g.n >= 2 and h.n >= 2:
        b = box_product(g, h)
        if maximal_nongenerating(b) != box_family(ng, g.n, nh, h.n):
            out.append("box product N law")
        if frattini(b) != box_frattini(frattini(g, maximal=ng), frattini(h, maximal=nh), h.n):
            out.append("box product Phi law")
        for _ in range(4):
            s = rng.getrandbits(b.n)
            if convex_hull(b, s) != box_hull(g, h, s):
                out.append(f"box hull factorization on {bits.to_list(s)}")
        parts = [(g, rng.randrange(g.n)), (h, rng.randrange(h.n))]
        c = one_clique_sum(parts)
        if maximal_nongenerating(c) != clique_sum_family(parts):
            out.append(f"1-clique sum N law at {parts[0][1]},{parts[1][1]}")
        if frattini(c) != clique_sum_frattini(parts):
            out.append(f"1-clique sum Phi law at {parts[0][1]},{parts[1][1]}")
    return out


def _verify_job(job: tuple[int, tuple, bool]) -> list[str]:
    n, edges, nongen = job
    g = make_graph(n, edges)
    out = engine_mismatches(g)
    if nongen:
        out += nongenerator_mismatches(g)
    return out


def _report_failures(graphs: list[Graph], results: list[list[str]], laws: list[tuple[Graph, Graph, list[str]]]) -> int:
    bad = 0
    for g, problems in zip(graphs, results):
        for p in problems:
            bad += 1
            print(f"MISMATCH {p}")
            print("  reproduce: save the graph below and run `ggl nim --graph FILE --engine brute`")
            print("  " + format_graph_text(g).replace("\n", "\n  ").rstrip())
    for g, h, problems in laws:
        for p in problems:
            bad += 1
            print(f"LAW MISMATCH {p}: G edges {list(g.edges)} (n={g.n}), H edges {list(h.edges)} (n={h.n})")
    return bad


def _law_pairs(count: int, rng: random.Random, p: float) -> list[tuple[Graph, Graph, list[str]]]:
    """Operation laws on seeded pairs of connected graphs with at most 5 vertices."""
    out = []
    for _ in range(count):
        g = random_connected_graph(rng.randint(1, 5), rng, p)
        h = random_connected_graph(rng.randint(1, 5), rng, p)
        out.append((g, h, law_mismatches(g, h, rng)))
    return out


def cmd_verify(args: argparse.Namespace) -> int:
    rng = random.Random(args.seed)
    t0 = time.perf_counter()
    if args.mode == "exhaustive":
        if args.max_vertices > 7 or (args.max_vertices == 7 and not args.allow_seven):
            raise UsageError("exhaustive sweeps stop at 6 vertices; pass --allow-seven for 7")
        graphs = []
        for k in range(1, args.max_vertices + 1):
            graphs.extend(connected_graphs(k))
            if args.max_vertices >= 7:
                print(f"enumerated {len(graphs)} connected graphs up to {k} vertices", file=sys.stderr)
        recipe = f"verify exhaustive --max-vertices {args.max_vertices}"
    else:
        graphs = [random_connected_graph(args.vertices, rng, args.edge_p) for _ in range(args.count)]
        recipe = f"verify random --count {args.count} --vertices {args.vertices} --seed {args.seed} --edge-p {args.edge_p}"
    jobs = [(g.n, g.edges, args.nongenerator) for g in graphs]
    results = _pool_map(_verify_job, jobs, args.workers)
    laws = _law_pairs(args.law_pairs, rng, args.edge_p)
    bad = _report_failures(graphs, results, laws)
    elapsed = time.perf_counter() - t0
    payload = {"mode": args.mode, "graphs": len(graphs), "law_pairs": len(laws), "mismatches": bad,
               "seed": args.seed, "edge_p": args.edge_p, "workers": args.workers,
               "nongenerator": args.nongenerator, "seconds": round(elapsed, 3), "recipe": recipe}
    lines = [f"{len(graphs)} graphs x 4 game/closure pairs x 3 engines, {len(laws)} law pairs: "
             f"{bad} mismatches ({elapsed:.1f}s, workers={args.workers}, p={args.edge_p}, seed={args.seed})"]
    _emit(args, payload, lines)
    return EXIT_MISMATCH if bad else EXIT_OK


# -- search -------------------------------------------------------------------

SEED_WITNESSES = ("fig-nim7", "pan:4", "wheel:5", "petersen", "diamond", "cycle:4", "path:2", "fig-barP3")


def is_geodetic_graph(g: Graph) -> bool:
    """Connected with a unique shortest path between every pair of vertices."""
    if not g.is_connected:
        return False
    for s in range(g.n):
        dist = g.dist[s]
        for v in range(g.n):
            if v != s and sum(1 for u in bits.members(g.adj[v]) if dist[u] == dist[v] - 1) > 1:
                return False
    return True


def _accepts(g: Graph, args: argparse.Namespace) -> bool:
    if args.diameter2 and g.diameter != 2:
        return False
    return not (args.geodetic_only and not is_geodetic_graph(g))


def _search_job(job: tuple[int, int, float, str, str, int]) -> tuple[int, tuple] | None:
    n, seed, p, game, closure, cap = job
    g = random_connected_graph(n, random.Random(seed), p)
    return compute_nim(g, GameSpec(Game(game), ClosureKind(closure)), "auto", cap)[0], g.edges


def _probe_union_odd(args: argparse.Namespace) -> int:
    rng = random.Random(args.seed)
    spec = GameSpec(Game.DNG, ClosureKind(args.closure))
    zeros: list[Graph] = []
    for _ in range(args.iterations):
        n = rng.choice((1, 3, 5, 7))
        g = random_connected_graph(n, rng, args.edge_p)
        if compute_nim(g, spec)[0] == 0:
            zeros.append(g)
    checked, counterexample = 0, None
    for g, h in zip(zeros[::2], zeros[1::2]):
        checked += 1
        nim = compute_nim(disjoint_union(g, h), spec)[0]
        if nim != 1:
            counterexample = (g, h, nim)
            break
    payload = {"probe": "union-odd", "pairs": checked, "seed": args.seed,
               "counterexample": None if counterexample is None else {
                   "G": [counterexample[0].n, list(counterexample[0].edges)],
                   "H": [counterexample[1].n, list(counterexample[1].edges)],
                   "nim": counterexample[2]}}
    if counterexample is None:
        lines = [f"union-odd: {checked} pairs of odd-order DNG-nim-0 graphs, union nim always 1; no counterexample"]
    else:
        g, h, nim = counterexample
        lines = [f"union-odd: counterexample after {checked} pairs, union nim {nim}",
                 f"  G (n={g.n}): {list(g.edges)}", f"  H (n={h.n}): {list(h.edges)}"]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_search(args: argparse.Namespace) -> int:
    if args.probe == "union-odd":
        return _probe_union_odd(args)
    if args.target_nim is None:
        raise UsageError("search needs --target-nim or --probe")
    spec = GameSpec(Game(args.game), ClosureKind(args.closure))
    witnesses: list[tuple[str, Graph]] = []
    for name in SEED_WITNESSES:
        g = family(name)
        if _accepts(g, args) and compute_nim(g, spec, "auto", args.max_family)[0] == args.target_nim:
            witnesses.append((name, g))
            break
    tried = 0
    if not witnesses:
        seeds = random.Random(args.seed)
        batch = max(1, args.workers) * 8
        while tried < args.iterations and not witnesses:
            jobs = []
            for _ in range(min(batch, args.iterations - tried)):
                jobs.append((args.vertices, seeds.getrandbits(64), args.edge_p, spec.game.value,
                             spec.closure.value, args.max_family))
            tried += len(jobs)
            for nim, edges in _pool_map(_search_job, jobs, args.workers):
                g = make_graph(args.vertices, edges)
                if nim == args.target_nim and _accepts(g, args):
                    witnesses.append((f"random #{tried}", g))
                    break
    files = []
    if args.out and witnesses:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        for k, (name, g) in enumerate(witnesses):
            path = out_dir / f"witness_{spec.game.value}_nim{args.target_nim}_{k}.graph"
            path.write_text(format_graph_text(g, comment=f"{spec} nim {args.target_nim}: {name}"))
            files.append(str(path))
    payload = {"target_nim": args.target_nim, "game": spec.game.name, "closure": spec.closure.value,
               "tried": tried, "seed": args.seed, "edge_p": args.edge_p, "workers": args.workers,
               "witnesses": [{"source": n, "vertices": g.n, "edges": list(g.edges)} for n, g in witnesses],
               "files": files}
    if witnesses:
        name, g = witnesses[0]
        lines = [f"witness for {spec} nim {args.target_nim}: {name} ({g.n} vertices, {g.num_edges} edges)"]
        lines += [f"  written to {f}" for f in files]
        if not files:
            lines.append("  " + format_graph_text(g).replace("\n", "\n  ").rstrip())
    else:
        lines = [f"no witness for {spec} nim {args.target_nim} in {tried} samples"]
    _emit(args, payload, lines)
    return EXIT_OK


# -- argument parsing ---------------------------------------------------------


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", help="family spec, e.g. wheel:5 or corona(multipartite:2,3)")
    p.add_argument("--graph", help="graph file: 'n <count>' then one 'u v' edge per line")


def _add_game(p: argparse.ArgumentParser, game_default: str = "dng") -> None:
    p.add_argument("--game", choices=[g.value for g in Game], default=game_default)
    p.add_argument("--closure", choices=[k.value for k in ClosureKind], default="hull")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--max-family", type=int, default=DEFAULT_FAMILY_CAP,
                        help="cap on enumerated set-family sizes (default 2^20)")
    common.add_argument("--workers", type=int, default=1, help="worker processes")

    parser = argparse.ArgumentParser(prog="ggl", description="Nim-numbers of geodetic convexity building games.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nim", parents=[common], help="nim-number and winning first move")
    _add_graph_source(p)
    _add_game(p)
    p.add_argument("--engine", choices=ENGINES, default="auto")
    p.set_defaults(func=cmd_nim)

    p = sub.add_parser("analyze", parents=[common], help="maximal nongenerating, minimal generating, Frattini")
    _add_graph_source(p)
    p.add_argument("--closure", choices=[k.value for k in ClosureKind], default="hull")
    p.add_argument("--both-closures", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("diagram", parents=[common], help="structure diagram as Graphviz DOT")
    _add_graph_source(p)
    _add_game(p)
    p.add_argument("--simplified", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("table1", parents=[common], help="closed-form nim-numbers against the structure engine")
    p.add_argument("--rows", help="comma-separated subset of: split,corona,block,cycle,hypercube,grid,"
                                  "multipartite,wheel,genwheel")
    p.add_argument("--perturb", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("verify", parents=[common], help="cross-check the three engines and the operation laws")
    p.add_argument("mode", choices=("exhaustive", "random"))
    p.add_argument("--max-vertices", type=int, default=5)
    p.add_argument("--allow-seven", action="store_true", help="permit the 7-vertex exhaustive sweep")
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--vertices", type=int, default=9)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--edge-p", type=float, default=DEFAULT_EDGE_P)
    p.add_argument("--law-pairs", type=int, default=50)
    p.add_argument("--nongenerator", action="store_true", help="also check the nongenerator theorem")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", parents=[common], help="random search for a target nim-number")
    _add_game(p)
    p.add_argument("--target-nim", type=int)
    p.add_argument("--vertices", type=int, default=9)
    p.add_argument("--iterations", type=int, default=2000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--edge-p", type=float, default=DEFAULT_EDGE_P)
    p.add_argument("--diameter2", action="store_true")
    p.add_argument("--geodetic-only", action="store_true")
    p.add_argument("--probe", choices=("union-odd",))
    p.add_argument("--out", help="directory for witness graph files")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, SpecError, GraphError, FamilyTooLarge, GameTooLarge, IllegalPosition, OSError) as exc:
        print(f"ggl: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
