"""Structure digraphs, type calculus and simplified structure diagrams.

Positions ``P`` and ``Q`` are structure equivalent when the same maximal
nongenerating sets contain them, i.e. when ``ceil(P) == ceil(Q)``.  The
classes are indexed by intersection sets ``I``; the nim-number of any
position is read off the type ``(parity(I), nim0, nim1)`` of its class by
the position's own parity.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field, replace
from typing import NamedTuple

from . import bits
from .convexity import DEFAULT_FAMILY_CAP, ceil, maximal_nongenerating
from .game import Game, GameSpec, IllegalPosition, mex
from .graph import Graph


class StructureError(RuntimeError):
    """The digraph violates a structural invariant (indicates a bug)."""


class TypeTriple(NamedTuple):
    parity: int | None  # None for the full class X_V, whose members have both parities
    nim0: int
    nim1: int

    def nim(self, parity: int) -> int:
        return self.nim1 if parity else self.nim0


@dataclass(frozen=True)
class StructureClass:
    mask: int
    options: tuple[int, ...]  # indices into StructureDigraph.classes
    is_full: bool = False
    type: TypeTriple | None = None
    longest: int = 0

    @property
    def parity(self) -> int | None:
        return None if self.is_full else bits.parity(self.mask)


@dataclass(frozen=True)
class StructureDigraph:
    graph: Graph
    spec: GameSpec
    maximal: tuple[int, ...]
    classes: tuple[StructureClass, ...]
    source: int
    index: dict[int, int] = field(repr=False, compare=False)

    @property
    def typed(self) -> bool:
        return all(c.type is not None for c in self.classes)

    @property
    def terminal(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.classes) if not c.options)

    @property
    def num_edges(self) -> int:
        return sum(len(c.options) for c in self.classes)

    def class_of(self, p: int) -> int:
        """Index of the class containing position ``p``."""
        full = self.graph.vertices
        i = ceil(p, self.maximal, full)
        if i == full and self.spec.game is Game.DNG:
            raise IllegalPosition(f"{bits.format_set(p)} generates, so it is not a DNG position")
        return self.index[i]

    def position_nim(self, p: int) -> int:
        c = self.classes[self.class_of(p)]
        if c.type is None:
            raise StructureError("run type_calculus first")
        return c.type.nim(bits.parity(p))


def build_structure_digraph(
    g: Graph,
    spec: GameSpec,
    maximal: tuple[int, ...] | None = None,
    cap: int = DEFAULT_FAMILY_CAP,
) -> StructureDigraph:
    """Breadth-first walk over classes from the Frattini class.

    Class ``X_I`` gets an edge to ``X_ceil(I + v)`` for every ``v`` outside
    ``I``; in DNG extensions that generate are dropped, in GEN they all land
    in the full class.
    """
    if maximal is None:
        maximal = maximal_nongenerating(g, spec.closure, cap)
    full = g.vertices
    phi = ceil(0, maximal, full)
    opts: dict[int, tuple[int, ...]] = {}
    queue = deque([phi])
    seen = {phi}
    while queue:
        i = queue.popleft()
        if i == full:
            opts[i] = ()
            continue
        targets = set()
        for v in bits.members(full & ~i):
            j = ceil(i | 1 << v, maximal, full)
            if j == full and spec.game is Game.DNG:
                continue
            targets.add(j)
        opts[i] = tuple(sorted(targets))
        for j in opts[i]:
            if j not in seen:
                seen.add(j)
                if len(seen) > cap:
                    raise StructureError(f"more than {cap} structure classes")
                queue.append(j)
    masks = sorted(opts)
    index = {m: k for k, m in enumerate(masks)}
    classes = tuple(
        StructureClass(m, tuple(index[j] for j in opts[m]), is_full=(m == full)) for m in masks
    )
    classes = _with_longest_paths(classes)
    return StructureDigraph(g, spec, maximal, classes, index[phi], index)


def _reverse_topological(classes: tuple[StructureClass, ...]) -> list[int]:
    """Sinks first; raises if the option relation has a cycle."""
    n = len(classes)
    outdeg = [len(c.options) for c in classes]
    preds: list[list[int]] = [[] for _ in range(n)]
    for i, c in enumerate(classes):
        for j in c.options:
            preds[j].append(i)
    order = []
    ready = deque(i for i in range(n) if outdeg[i] == 0)
    while ready:
        j = ready.popleft()
        order.append(j)
        for i in preds[j]:
            outdeg[i] -= 1
            if outdeg[i] == 0:
                ready.append(i)
    if len(order) != n:
        raise StructureError("structure digraph has a cycle")
    return order


def _with_longest_paths(classes: tuple[StructureClass, ...]) -> tuple[StructureClass, ...]:
    longest = [0] * len(classes)
    for i in _reverse_topological(classes):
        opts = classes[i].options
        longest[i] = 1 + max(longest[j] for j in opts) if opts else 0
    return tuple(replace(c, longest=longest[i]) for i, c in enumerate(classes))


def type_calculus(d: StructureDigraph) -> StructureDigraph:
    """Fill in every class type, sinks first."""
    types: list[TypeTriple | None] = [None] * len(d.classes)
    for i in _reverse_topological(d.classes):
        c = d.classes[i]
        if c.is_full:
            types[i] = TypeTriple(None, 0, 0)
            continue
        p = bits.parity(c.mask)
        opt_types = [types[j] for j in c.options]
        own = mex(t.nim(1 - p) for t in opt_types)
        other = mex([t.nim(p) for t in opt_types] + [own])
        types[i] = TypeTriple(p, other, own) if p else TypeTriple(p, own, other)
    classes = tuple(replace(c, type=types[i]) for i, c in enumerate(d.classes))
    return replace(d, classes=classes)


def game_nim(d: StructureDigraph) -> int:
    """Nim-number of the game: the even-parity entry of the source type."""
    t = d.classes[d.source].type
    if t is None:
        raise StructureError("run type_calculus first")
    return t.nim0


def structure_nim(g: Graph, spec: GameSpec, maximal: tuple[int, ...] | None = None, cap: int = DEFAULT_FAMILY_CAP) -> int:
    return game_nim(type_calculus(build_structure_digraph(g, spec, maximal, cap)))


# -- simplified diagrams ----------------------------------------------------


@dataclass(frozen=True)
class SimplifiedNode:
    members: tuple[int, ...]  # class masks, ascending
    type: TypeTriple
    longest: int

    @property
    def multiplicity(self) -> int:
        return len(self.members)

    @property
    def parity(self) -> int | None:
        return self.type.parity


@dataclass(frozen=True)
class SimplifiedDiagram:
    nodes: tuple[SimplifiedNode, ...]
    edges: tuple[tuple[int, int], ...]
    source: int

    def game_nim(self) -> int:
        return self.nodes[self.source].type.nim0


def _partition(keys: list) -> list[int]:
    """Block number per item, blocks numbered by first appearance."""
    numbering: dict = {}
    return [numbering.setdefault(k, len(numbering)) for k in keys]


def simplify(d: StructureDigraph) -> SimplifiedDiagram:
    """Merge classes with equal parity, option-type set and longest path.

    The initial partition is refined until every block sends edges to the
    same set of blocks from each of its members, so block edges are well
    defined.
    """
    if not d.typed:
        raise StructureError("run type_calculus first")
    cls = d.classes
    block = _partition([
        (
            "V" if c.is_full else c.parity,
            frozenset(cls[j].type for j in c.options),
            c.longest,
        )
        for c in cls
    ])
    while True:
        refined = _partition([
            (block[i], frozenset(block[j] for j in c.options)) for i, c in enumerate(cls)
        ])
        if max(refined, default=-1) == max(block, default=-1):
            break
        block = refined
    members: dict[int, list[int]] = {}
    for i, b in enumerate(block):
        members.setdefault(b, []).append(i)
    # classes are sorted by mask, so blocks are already in order of first member
    nodes = []
    for b in sorted(members):
        first = cls[members[b][0]]
        nodes.append(SimplifiedNode(tuple(cls[i].mask for i in members[b]), first.type, first.longest))
    edges = sorted({(block[i], block[j]) for i, c in enumerate(cls) for j in c.options})
    return SimplifiedDiagram(tuple(nodes), tuple(edges), block[d.source])


# -- DOT --------------------------------------------------------------------


def _node_attrs(t: TypeTriple, multiplicity: int) -> str:
    p = "*" if t.parity is None else str(t.parity)
    shape = {None: "oval", 0: "triangle", 1: "invtriangle"}[t.parity]
    label = f"p={p} n0={t.nim0} n1={t.nim1} ×{multiplicity}"
    style = ',style=filled,fillcolor="gray85"' if multiplicity > 1 else ""
    return f'[label="{label}",shape={shape}{style}]'


def export_dot(d: StructureDigraph | SimplifiedDiagram, name: str = "structure") -> str:
    """Render a typed digraph or a simplified diagram as Graphviz DOT."""
    lines = [f'digraph "{name}" {{', "  rankdir=TB;"]
    if isinstance(d, SimplifiedDiagram):
        ids = [f"I_{node.members[0]:x}" for node in d.nodes]
        for node_id, node in zip(ids, d.nodes):
            lines.append(f"  {node_id} {_node_attrs(node.type, node.multiplicity)};")
        for a, b in d.edges:
            lines.append(f"  {ids[a]} -> {ids[b]};")
    else:
        if not d.typed:
            raise StructureError("run type_calculus first")
        ids = [f"I_{c.mask:x}" for c in d.classes]
        for node_id, c in zip(ids, d.classes):
            lines.append(f"  {node_id} {_node_attrs(c.type, 1)};")
        for i, c in enumerate(d.classes):
            for j in c.options:
                lines.append(f"  {ids[i]} -> {ids[j]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def structure_winning_move(d: StructureDigraph, p: int = 0) -> int | None:
    """Least vertex whose selection leaves a position of nim-number 0."""
    full = d.graph.vertices
    if p & ~full:
        raise IllegalPosition(f"position {bits.format_set(p)} uses vertices outside 0..{d.graph.n - 1}")
    start = ceil(p, d.maximal, full)
    if start == full:
        if d.spec.game is Game.DNG:
            raise IllegalPosition(f"{bits.format_set(p)} generates, so it is not a DNG position")
        return None
    for v in bits.members(full & ~p):
        q = p | 1 << v
        cls = ceil(q, d.maximal, full)
        if cls == full:
            if d.spec.game is Game.GEN:
                return v  # the last move wins
            continue
        if d.position_nim(q) == 0:
            return v
    return None
