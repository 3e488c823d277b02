"""Closed-form nim-numbers, maximal nongenerating families and Frattini subsets.

Each formula is written from the family's own result (not from the summary
table), so the ``table1`` sweep cross-checks the two against the engines.
Everything returns ``None`` outside the parameter range a result covers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable, Iterator

from . import bits
from .families import FamilySpec, family, parse_family_spec
from .game import Game
from .graph import Graph, blocks_and_cut_vertices, is_block_graph, simplicial_vertices


def pty(k: int) -> int:
    return k & 1


# -- nim formulas -----------------------------------------------------------


def unique_generating_nim(num_vertices: int, game: Game) -> int:
    """Graphs with a single minimal generating set."""
    return 1 - pty(num_vertices) if game is Game.DNG else pty(num_vertices)


def split_nim(m: int, n: int, game: Game) -> int | None:
    if m < 1 or n < 2:
        return None
    return unique_generating_nim(m + n, game)


def corona_nim(h_vertices: int, game: Game) -> int | None:
    if h_vertices < 2:
        return None
    return 1 if game is Game.DNG else 0


def block_nim(num_vertices: int, game: Game) -> int:
    return unique_generating_nim(num_vertices, game)


def cycle_nim(n: int, game: Game) -> int | None:
    if n < 3:
        return None
    if game is Game.DNG:
        return 1 if n % 4 in (1, 2) else 0
    return pty(n)


def hypercube_nim(n: int, game: Game) -> int | None:
    return 0 if n >= 2 else None


def grid_nim(m: int, n: int, game: Game) -> int | None:
    m, n = sorted((m, n))
    if m < 2:
        return None
    if game is Game.DNG:
        return 0 if m == 2 else 2 * pty(m + n)
    return pty(m * n)


def multipartite_nim(parts: tuple[int, ...], game: Game) -> int | None:
    if len(parts) < 2 or min(parts) < 1:
        return None
    small = sum(1 for p in parts if p == 1)
    large = len(parts) - small
    if large <= 1:
        return unique_generating_nim(sum(parts), game)
    if game is Game.DNG:
        return pty(large + small)
    return 2 * pty(small) if pty(large) == 0 else pty(small)


def wheel_nim(n: int, game: Game) -> int | None:
    if n < 5:
        return None
    if game is Game.DNG:
        return pty(n)
    return 2 if n == 5 else pty(n)


def genwheel_nim(m: int, n: int, game: Game) -> int | None:
    if m == 1:
        return wheel_nim(n + 1, game)
    if m < 2 or n < 3:
        return None
    if n == 3:
        return pty(m) if game is Game.DNG else 1 - pty(m)
    return 1 if game is Game.DNG else 0


# nim-numbers stated for individual example graphs
_EXAMPLES: dict[str, dict[Game, int]] = {
    "pan:4": {Game.DNG: 2, Game.GEN: 0},
    "petersen": {Game.DNG: 1, Game.GEN: 0},
    "diamond": {Game.DNG: 1, Game.GEN: 0},
    "fig-nim7": {Game.DNG: 7},
    "fig-barP3": {Game.DNG: 0, Game.GEN: 1},
}


def _as_spec(spec: FamilySpec | str) -> FamilySpec:
    return parse_family_spec(spec) if isinstance(spec, str) else spec


def expected_nim(spec: FamilySpec | str, game: Game) -> int | None:
    """Closed-form nim-number for ``spec``, or ``None`` when none is known."""
    spec = _as_spec(spec)
    key = str(spec)
    if key in _EXAMPLES:
        return _EXAMPLES[key].get(game)
    p = spec.params
    name = spec.name
    if name == "cycle":
        return cycle_nim(p[0], game)
    if name == "hypercube":
        return hypercube_nim(p[0], game)
    if name == "grid":
        return grid_nim(p[0], p[1], game)
    if name == "lattice":
        if len(p) == 2:
            return grid_nim(p[0], p[1], game)
        if len(p) >= 2 and set(p) == {2}:
            return hypercube_nim(len(p), game)
    if name == "wheel":
        return wheel_nim(p[0], game)
    if name == "genwheel":
        return genwheel_nim(p[0], p[1], game)
    if name == "multipartite":
        return multipartite_nim(p, game)
    if name == "split" and p[1] >= 2:
        return split_nim(p[0], p[1], game)
    if name == "corona":
        return corona_nim(family(spec.args[0]).n, game)
    g = family(spec)
    if is_block_graph(g):
        return block_nim(g.n, game)
    return None


# -- maximal nongenerating families -----------------------------------------


def unique_generating_family(l_mask: int, n: int) -> tuple[int, ...]:
    """Maximal nongenerating sets when ``l_mask`` is the only minimal generating set."""
    full = bits.full(n)
    return bits.canonical(full & ~(1 << v) for v in bits.members(l_mask))


def cycle_family(n: int) -> tuple[int, ...]:
    length = n // 2 if n % 2 == 0 else (n + 1) // 2
    return bits.canonical(
        bits.from_vertices((i + k) % n for k in range(1, length + 1)) for i in range(n)
    )


def hypercube_family(n: int) -> tuple[int, ...]:
    """Half-cubes ``{a : a_i = b}``; digit ``a_1`` is the most significant bit."""
    size = 1 << n
    out = []
    for i in range(1, n + 1):
        shift = n - i
        for b in (0, 1):
            out.append(bits.from_vertices(x for x in range(size) if (x >> shift) & 1 == b))
    return bits.canonical(out)


def _lattice_coords(sides: tuple[int, ...]) -> list[tuple[int, ...]]:
    # row-major, matching repeated box products
    return list(product(*(range(s) for s in sides)))


def lattice_family(sides: tuple[int, ...]) -> tuple[int, ...]:
    coords = _lattice_coords(sides)
    out = []
    for i, s in enumerate(sides):
        out.append(bits.from_vertices(k for k, a in enumerate(coords) if a[i] > 0))
        out.append(bits.from_vertices(k for k, a in enumerate(coords) if a[i] < s - 1))
    return bits.canonical(out)


def _part_ranges(parts: tuple[int, ...]) -> list[range]:
    out, start = [], 0
    for p in parts:
        out.append(range(start, start + p))
        start += p
    return out


def multipartite_family(parts: tuple[int, ...]) -> tuple[int, ...]:
    ranges = _part_ranges(parts)
    n = sum(parts)
    large = [r for r in ranges if len(r) >= 2]
    if len(large) >= 2:
        return bits.canonical(bits.from_vertices(t) for t in product(*ranges))
    if large:
        return unique_generating_family(bits.from_vertices(large[0]), n)
    return unique_generating_family(bits.full(n), n)


def wheel_family(n: int) -> tuple[int, ...]:
    rim = n - 1
    full = bits.full(n)
    return bits.canonical(
        full & ~((1 << (1 + i)) | (1 << (1 + (i + 1) % rim))) for i in range(rim)
    )


def genwheel_family(m: int, n: int) -> tuple[int, ...] | None:
    if m == 1:
        return wheel_family(n + 1)
    if n == 3:
        return unique_generating_family(bits.full(m), m + n)
    return bits.canonical(
        (1 << c) | (1 << (m + j)) | (1 << (m + (j + 1) % n)) for c in range(m) for j in range(n)
    )


def petersen_family(g: Graph) -> tuple[int, ...]:
    """Closed neighbourhoods together with the induced 5-cycles."""
    closed = [g.adj[v] | 1 << v for v in range(g.n)]
    cycles = []
    for combo in combinations(range(g.n), 5):
        mask = bits.from_vertices(combo)
        if all(bits.size(g.adj[v] & mask) == 2 for v in combo) and _connected_within(g, mask):
            cycles.append(mask)
    return bits.canonical(closed + cycles)


def _connected_within(g: Graph, mask: int) -> bool:
    start = mask & -mask
    reach = start
    frontier = start
    while frontier:
        nxt = 0
        for v in bits.members(frontier):
            nxt |= g.adj[v] & mask
        frontier = nxt & ~reach
        reach |= nxt
    return reach == mask


def _labels_to_mask(g: Graph, names: str) -> int:
    lookup = {label: i for i, label in enumerate(g.labels)}
    return bits.from_vertices(lookup[x] for x in names.split())


def expected_family_N(spec: FamilySpec | str) -> tuple[int, ...] | None:
    """Maximal nongenerating sets (hull operator) built from the family results."""
    spec = _as_spec(spec)
    p = spec.params
    name = spec.name
    if name == "cycle":
        return cycle_family(p[0])
    if name == "hypercube" and p[0] >= 2:
        return hypercube_family(p[0])
    if name == "grid":
        return lattice_family(p)
    if name == "lattice":
        return lattice_family(p)
    if name == "wheel":
        return wheel_family(p[0])
    if name == "genwheel":
        return genwheel_family(p[0], p[1])
    if name == "multipartite":
        return multipartite_family(p)
    if name == "split" and p[1] >= 2:
        return unique_generating_family(bits.full(p[0] + p[1]) & ~bits.full(p[0]), p[0] + p[1])
    if name == "corona":
        h = family(spec.args[0]).n
        if h < 2:
            return None
        return unique_generating_family(bits.full(2 * h) & ~bits.full(h), 2 * h)
    g = family(spec)
    if name == "pan" and p[0] == 4:
        # v1 pendant, v2 attachment, v5 opposite: {v1v2v3, v1v2v4, v2v3v4v5}
        return bits.canonical([0b00111, 0b01011, 0b11110])
    if name == "petersen":
        return petersen_family(g)
    if name == "diamond":
        return bits.canonical([_labels_to_mask(g, "v1 v2 v3"), _labels_to_mask(g, "v2 v3 v4")])
    if name == "fig-barP3":
        return unique_generating_family(_labels_to_mask(g, "v3 v4 v5"), g.n)
    if name == "fig-disj":
        comps = ["v1", "v4", "v5 v6", "v7 v8"]
        return bits.complement_family((_labels_to_mask(g, c) for c in comps), g.n)
    if is_block_graph(g) and g.n >= 2:
        return unique_generating_family(simplicial_vertices(g), g.n)
    return None


# -- Frattini subsets -------------------------------------------------------


def expected_frattini(spec: FamilySpec | str) -> int | None:
    spec = _as_spec(spec)
    p = spec.params
    name = spec.name
    if name in ("cycle", "petersen"):
        return 0
    if name == "hypercube" and p[0] >= 2:
        return 0
    if name in ("grid", "lattice"):
        coords = _lattice_coords(p)
        return bits.from_vertices(
            k for k, a in enumerate(coords) if all(0 < x < s - 1 for x, s in zip(a, p))
        )
    if name == "multipartite":
        ranges = _part_ranges(p)
        if all(len(r) == 1 for r in ranges):
            return 0
        return bits.from_vertices(r[0] for r in ranges if len(r) == 1)
    if name == "wheel":
        return 1
    if name == "genwheel":
        m, n = p
        if m == 1:
            return 1
        return 0 if n >= 4 else bits.full(m + n) & ~bits.full(m)
    if name == "split" and p[1] >= 2:
        return bits.full(p[0])
    if name == "corona":
        h = family(spec.args[0]).n
        return bits.full(h) if h >= 2 else None
    g = family(spec)
    if name == "pan" and p[0] == 4:
        return 0b00010
    if name == "diamond":
        return _labels_to_mask(g, "v2 v3")
    if name == "fig-barP3":
        return _labels_to_mask(g, "v1 v2")
    if name == "fig-disj":
        return _labels_to_mask(g, "v2 v3")
    if is_block_graph(g):
        return blocks_and_cut_vertices(g)[1]
    return None


# -- summary-table sweep ---------------------------------------------------


@dataclass
class Case:
    """One graph of a table row with its formula values."""

    row: str
    param: str
    build: Callable[[], Graph]
    expected: dict[Game, int | None]
    note: str = ""


@dataclass
class Row:
    name: str
    cases: list[Case] = field(default_factory=list)


def _spec_case(row: str, text: str, formula: Callable[[Game], int | None], note: str = "") -> Case:
    return Case(row, text, lambda: family(text), {g: formula(g) for g in Game}, note)


def _partitions(total: int, min_part: int = 1) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    for first in range(min_part, total + 1):
        for rest in _partitions(total - first, first):
            yield (first,) + rest


def default_rows() -> list[Row]:
    """The parameter ranges swept by ``table1`` by default."""
    from .sampling import connected_graphs  # local: sampling imports families

    rows = [
        Row("complete split K_m+K_n-bar", [
            _spec_case("split", f"split:{m},{n}", lambda g, m=m, n=n: split_nim(m, n, g))
            for m in range(1, 5) for n in range(2, 5)
        ]),
        Row("corona H o K1", [
            Case("corona", "corona(" + ";".join(f"{u}-{v}" for u, v in h.edges) + f"|n={h.n})",
                 lambda h=h: _corona_of(h), {g: corona_nim(h.n, g) for g in Game})
            for k in range(2, 5) for h in connected_graphs(k)
        ]),
        Row("block", [
            *[_spec_case("block", f"path:{n}", lambda g, n=n: block_nim(n, g)) for n in range(2, 9)],
            *[_spec_case("block", f"star:{n}", lambda g, n=n: block_nim(n + 1, g)) for n in range(2, 7)],
            *[_spec_case("block", f"complete:{n}", lambda g, n=n: block_nim(n, g)) for n in range(2, 7)],
            *[_spec_case("block", f"windmill:3x{l}", lambda g, l=l: block_nim(1 + 2 * l, g)) for l in (2, 3)],
            _spec_case("block", "fig-block", lambda g: block_nim(12, g)),
        ]),
        Row("cycle C_n", [
            _spec_case("cycle", f"cycle:{n}", lambda g, n=n: cycle_nim(n, g)) for n in range(3, 13)
        ]),
        Row("hypercube Q_n", [
            _spec_case("hypercube", f"hypercube:{n}", lambda g, n=n: hypercube_nim(n, g)) for n in range(2, 5)
        ]),
        Row("grid P_m box P_n", [
            _spec_case("grid", f"grid:{m}x{n}" if n >= 3 else f"lattice:{m},{n}",
                       lambda g, m=m, n=n: grid_nim(m, n, g))
            for m in range(2, 5) for n in range(m, 6)
        ]),
        Row("complete multipartite", [
            _spec_case("multipartite", "multipartite:" + ",".join(map(str, parts)),
                       lambda g, parts=parts: multipartite_nim(parts, g))
            for total in range(2, 9) for parts in _partitions(total) if len(parts) >= 2
        ]),
        Row("wheel W_n", [
            _spec_case("wheel", f"wheel:{n}", lambda g, n=n: wheel_nim(n, g)) for n in range(5, 10)
        ]),
        Row("generalized wheel W_m,n", [
            _spec_case("genwheel", f"genwheel:{m},{n}", lambda g, m=m, n=n: genwheel_nim(m, n, g))
            for m in (2, 3) for n in range(3, 7)
        ]),
    ]
    rows[2].cases[-1].note = "block rows accept any graph whose blocks are cliques"
    return rows


def _corona_of(h: Graph) -> Graph:
    from .graph import corona

    return corona(h)


@dataclass
class Cell:
    row: str
    param: str
    game: str
    expected: int | None
    computed: int
    ok: bool
    note: str = ""

    def as_dict(self) -> dict:
        out = {
            "row": self.row, "param": self.param, "game": self.game,
            "expected": self.expected, "computed": self.computed, "ok": self.ok,
        }
        if self.note:
            out["note"] = self.note
        return out


def evaluate_case(case: Case, engine: Callable[[Graph, Game], int]) -> list[Cell]:
    g = case.build()
    cells = []
    for game in Game:
        want = case.expected[game]
        got = engine(g, game)
        cells.append(Cell(case.row, case.param, game.name, want, got, want == got, case.note))
    return cells


def table1(rows: list[Row] | None = None, engine: Callable[[Graph, Game], int] | None = None) -> list[Cell]:
    """Compare every formula against an engine (structure engine by default)."""
    if rows is None:
        rows = default_rows()
    if engine is None:
        engine = _structure_engine
    cells: list[Cell] = []
    for row in rows:
        for case in row.cases:
            cells.extend(evaluate_case(case, engine))
    return cells


def _structure_engine(g: Graph, game: Game) -> int:
    from .game import GameSpec
    from .structure import structure_nim

    return structure_nim(g, GameSpec(game))
