"""Named graph families and the small spec language used by the CLI.

Grammar::

    spec   := name [":" params] | comb "(" arg {"," arg} ")"
    arg    := spec                (cliquesum takes spec "@" vertex)
    params := int {("," | "x") int}

Vertex numbering is fixed per family so results are reproducible:

* ``path:n``, ``cycle:n``: ``0..n-1`` along the path / around the cycle.
* ``star:n``: centre 0, leaves ``1..n``.
* ``hypercube:n``: vertex ``i`` is the binary string of ``i`` (first digit
  most significant).
* ``grid:mxn`` and ``lattice:n1,...,nd``: row-major coordinates.
* ``wheel:n``: hub 0, rim ``1..n-1`` in cycle order.
* ``genwheel:m,n``: centres ``0..m-1``, rim ``m..m+n-1`` in cycle order.
* ``multipartite:m1,...,mk``: each part is a contiguous range, in order.
* ``split:m,n``: clique ``0..m-1``, independent set ``m..m+n-1``.
* ``windmill:n,l``: ``l`` copies of ``K_n`` sharing vertex 0.
* ``pan:n``: pendant 0 hung on cycle vertex 1; the cycle runs
  ``1, 2, 4, 6, ..., 5, 3`` so that ``pan:4`` matches the usual drawing
  of the 4-pan (``v1`` pendant, ``v5`` opposite the attachment vertex).
* fixtures (``petersen``, ``diamond``, ``fig-*``): vertex ``i`` is ``v{i+1}``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from typing import Callable

from .graph import (
    Graph,
    GraphError,
    box_product,
    corona,
    disjoint_union,
    join,
    make_graph,
    one_clique_sum,
)


class SpecError(ValueError):
    """Syntax or semantic error in a family spec."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


@dataclass(frozen=True)
class FamilySpec:
    """Parsed family spec: a named family or a combinator over sub-specs."""

    name: str
    params: tuple[int, ...] = ()
    args: tuple["FamilySpec", ...] = ()
    anchors: tuple[int, ...] = ()

    @property
    def is_combinator(self) -> bool:
        return self.name in COMBINATORS

    def __str__(self) -> str:
        return render_family_spec(self)


NAMES = (
    "path", "cycle", "complete", "star", "hypercube", "grid", "lattice", "wheel",
    "genwheel", "multipartite", "split", "windmill", "pan", "petersen", "diamond",
    "fig-nim7", "fig-disj", "fig-barP3", "fig-block",
)
COMBINATORS = ("union", "box", "join", "corona", "cliquesum")

# parameter count per family: int for exact, (min, None) for "at least"
_ARITY: dict[str, int | tuple[int, None]] = {
    "path": 1, "cycle": 1, "complete": 1, "star": 1, "hypercube": 1, "grid": 2,
    "lattice": (1, None), "wheel": 1, "genwheel": 2, "multipartite": (2, None),
    "split": 2, "windmill": 2, "pan": 1, "petersen": 0, "diamond": 0,
    "fig-nim7": 0, "fig-disj": 0, "fig-barP3": 0, "fig-block": 0,
}
_X_SEPARATED = {"grid", "windmill"}
_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9]*(?:-[A-Za-z0-9]+)*")
_INT_RE = re.compile(r"\d+")


# -- parsing ----------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str | None:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else None

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = self.peek()
            raise SpecError(f"expected {ch!r}, found {found!r}", self.pos)
        self.pos += 1

    def name(self) -> str:
        self._skip()
        m = _NAME_RE.match(self.text, self.pos)
        if not m:
            raise SpecError("expected a family or combinator name", self.pos)
        self.pos = m.end()
        return m.group()

    def integer(self) -> int:
        self._skip()
        m = _INT_RE.match(self.text, self.pos)
        if not m:
            raise SpecError("expected an integer", self.pos)
        self.pos = m.end()
        return int(m.group())

    def spec(self) -> FamilySpec:
        start = self.pos
        name = self.name()
        if name in COMBINATORS:
            self.expect("(")
            args, anchors = [], []
            while True:
                args.append(self.spec())
                if name == "cliquesum":
                    self.expect("@")
                    anchors.append(self.integer())
                if self.peek() == ",":
                    self.pos += 1
                    continue
                self.expect(")")
                break
            out = FamilySpec(name, (), tuple(args), tuple(anchors))
        elif name in _ARITY:
            params: list[int] = []
            if self.peek() == ":":
                self.pos += 1
                params.append(self.integer())
                while self.peek() in (",", "x") and self._param_follows():
                    self.pos += 1
                    params.append(self.integer())
            out = FamilySpec(name, tuple(params))
        else:
            raise SpecError(f"unknown family {name!r}", start)
        _check_arity(out, start)
        return out

    def _param_follows(self) -> bool:
        # a ',' inside a combinator argument list separates specs, not params
        rest = self.text[self.pos + 1:].lstrip()
        return bool(rest) and rest[0].isdigit()


def _check_arity(spec: FamilySpec, position: int) -> None:
    name = spec.name
    if name in COMBINATORS:
        want = {"corona": 1}.get(name)
        if want is not None and len(spec.args) != want:
            raise SpecError(f"{name} takes {want} argument, got {len(spec.args)}", position)
        if name != "corona" and len(spec.args) < 2:
            raise SpecError(f"{name} takes at least 2 arguments", position)
        return
    arity = _ARITY[name]
    got = len(spec.params)
    if isinstance(arity, int):
        if got != arity:
            raise SpecError(f"{name} takes {arity} parameter(s), got {got}", position)
    elif got < arity[0]:
        raise SpecError(f"{name} takes at least {arity[0]} parameter(s), got {got}", position)


def parse_family_spec(text: str) -> FamilySpec:
    parser = _Parser(text)
    spec = parser.spec()
    if parser.peek() is not None:
        raise SpecError("trailing input", parser.pos)
    return spec


def render_family_spec(spec: FamilySpec) -> str:
    if spec.name in COMBINATORS:
        if spec.name == "cliquesum":
            inner = ",".join(
                f"{render_family_spec(a)}@{c}" for a, c in zip(spec.args, spec.anchors)
            )
        else:
            inner = ",".join(render_family_spec(a) for a in spec.args)
        return f"{spec.name}({inner})"
    if not spec.params:
        return spec.name
    sep = "x" if spec.name in _X_SEPARATED else ","
    return f"{spec.name}:" + sep.join(str(p) for p in spec.params)


# -- generators -------------------------------------------------------------


def path_graph(n: int) -> Graph:
    _need(n >= 1, "path:n needs n >= 1")
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    _need(n >= 3, "cycle:n needs n >= 3")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    _need(n >= 1, "complete:n needs n >= 1")
    return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty_graph(n: int) -> Graph:
    return make_graph(n, [])


def star_graph(n: int) -> Graph:
    _need(n >= 1, "star:n needs n >= 1")
    return make_graph(n + 1, [(0, i) for i in range(1, n + 1)])


def hypercube_graph(n: int) -> Graph:
    _need(n >= 1, "hypercube:n needs n >= 1")
    size = 1 << n
    _need(size <= 1 << 30, "hypercube too large")
    return make_graph(
        size, [(v, v ^ (1 << b)) for v in range(size) for b in range(n) if not v >> b & 1]
    )


def lattice_graph(sides: tuple[int, ...]) -> Graph:
    _need(all(s >= 2 for s in sides), "lattice sides must all be >= 2")
    return reduce(box_product, (path_graph(s) for s in sides))


def grid_graph(m: int, n: int) -> Graph:
    _need(2 <= m <= n and n >= 3, "grid:mxn needs 2 <= m <= n and n >= 3")
    return box_product(path_graph(m), path_graph(n))


def wheel_graph(n: int) -> Graph:
    _need(n >= 5, "wheel:n needs n >= 5")
    return join(complete_graph(1), cycle_graph(n - 1))


def generalized_wheel_graph(m: int, n: int) -> Graph:
    # m == 1 is the ordinary wheel on n + 1 vertices
    _need(m >= 1 and n >= 3, "genwheel:m,n needs m >= 1 and n >= 3")
    _need(m >= 2 or n >= 4, "genwheel:1,n needs n >= 4 (it is wheel:n+1)")
    return join(empty_graph(m), cycle_graph(n))


def multipartite_graph(parts: tuple[int, ...]) -> Graph:
    _need(len(parts) >= 2, "multipartite needs at least 2 parts")
    _need(all(p >= 1 for p in parts), "multipartite part sizes must be >= 1")
    owner = [i for i, p in enumerate(parts) for _ in range(p)]
    n = len(owner)
    return make_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if owner[u] != owner[v]])


def split_graph(m: int, n: int) -> Graph:
    _need(m >= 1 and n >= 1, "split:m,n needs m >= 1 and n >= 1")
    return join(complete_graph(m), empty_graph(n))


def windmill_graph(n: int, copies: int) -> Graph:
    _need(n >= 2 and copies >= 2, "windmill:n,l needs n >= 2 and l >= 2")
    return one_clique_sum([(complete_graph(n), 0)] * copies)


def pan_graph(n: int) -> Graph:
    _need(n >= 3, "pan:n needs n >= 3")
    order = [1] + list(range(2, n + 1, 2)) + list(range(n - (n % 2 == 0), 2, -2))
    edges = [(order[i], order[(i + 1) % n]) for i in range(n)]
    return make_graph(n + 1, edges + [(0, 1)])


def _labeled_graph(n: int, edges_1based: list[tuple[int, int]]) -> Graph:
    return make_graph(
        n, [(u - 1, v - 1) for u, v in edges_1based], [f"v{i + 1}" for i in range(n)]
    )


def petersen_graph() -> Graph:
    outer = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]
    spokes = [(1, 6), (2, 7), (3, 8), (4, 9), (5, 10)]
    inner = [(10, 7), (7, 9), (9, 6), (6, 8), (8, 10)]
    return _labeled_graph(10, outer + spokes + inner)


def diamond_graph() -> Graph:
    return _labeled_graph(4, [(1, 2), (2, 4), (4, 3), (3, 1), (2, 3)])


def fig_nim7_graph() -> Graph:
    """Planar 9-vertex graph whose avoidance game has nim-number 7."""
    return _labeled_graph(9, [
        (8, 3), (3, 7), (7, 5), (5, 8), (7, 2), (2, 5), (2, 8), (8, 9), (9, 4),
        (4, 8), (2, 9), (9, 3), (3, 6), (6, 9), (6, 1), (1, 9), (1, 4),
    ])


def fig_disj_graph() -> Graph:
    """8 vertices; complements of its maximal nongenerating sets are disjoint."""
    return _labeled_graph(8, [
        (1, 2), (2, 3), (3, 4), (5, 6), (6, 3), (3, 8), (8, 7), (7, 2), (2, 5),
    ])


def fig_barP3_graph() -> Graph:
    """Complement of P3 + K1 + K1; its simplicial vertices generate."""
    return _labeled_graph(5, [
        (4, 2), (2, 5), (5, 1), (1, 3), (3, 2), (2, 1), (1, 4), (4, 3),
    ])


def fig_block_graph() -> Graph:
    """Block graph with seven blocks and six cut vertices."""
    return _labeled_graph(12, [
        (1, 2), (2, 3), (3, 4), (4, 2), (3, 1), (1, 4), (4, 5), (5, 6), (6, 4),
        (3, 7), (2, 8), (8, 9), (9, 2), (8, 10), (9, 11), (11, 12),
    ])


def _need(ok: bool, message: str) -> None:
    if not ok:
        raise SpecError(message)


_BUILDERS: dict[str, Callable[..., Graph]] = {
    "path": path_graph,
    "cycle": cycle_graph,
    "complete": complete_graph,
    "star": star_graph,
    "hypercube": hypercube_graph,
    "grid": grid_graph,
    "lattice": lambda *sides: lattice_graph(sides),
    "wheel": wheel_graph,
    "genwheel": generalized_wheel_graph,
    "multipartite": lambda *parts: multipartite_graph(parts),
    "split": split_graph,
    "windmill": windmill_graph,
    "pan": pan_graph,
    "petersen": petersen_graph,
    "diamond": diamond_graph,
    "fig-nim7": fig_nim7_graph,
    "fig-disj": fig_disj_graph,
    "fig-barP3": fig_barP3_graph,
    "fig-block": fig_block_graph,
}


def family(spec: FamilySpec | str) -> Graph:
    """Build the graph described by ``spec`` (a parsed spec or spec text)."""
    if isinstance(spec, str):
        spec = parse_family_spec(spec)
    try:
        if spec.name == "union":
            return reduce(disjoint_union, map(family, spec.args))
        if spec.name == "box":
            return reduce(box_product, map(family, spec.args))
        if spec.name == "join":
            return reduce(join, map(family, spec.args))
        if spec.name == "corona":
            return corona(family(spec.args[0]))
        if spec.name == "cliquesum":
            return one_clique_sum([(family(a), c) for a, c in zip(spec.args, spec.anchors)])
        return _BUILDERS[spec.name](*spec.params)
    except GraphError as exc:
        raise SpecError(f"{render_family_spec(spec)}: {exc}") from None
