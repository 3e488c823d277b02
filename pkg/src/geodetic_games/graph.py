"""Immutable simple graphs with precomputed hop distances, plus combinators."""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from . import bits

UNREACHABLE = -1
DEFAULT_MAX_VERTICES = 30


class GraphError(ValueError):
    """Raised for malformed graphs and combinator misuse."""


def max_vertices() -> int:
    """Global vertex cap; ``GGL_MAX_VERTICES`` may lower (or raise) it."""
    raw = os.environ.get("GGL_MAX_VERTICES")
    if raw is None:
        return DEFAULT_MAX_VERTICES
    try:
        return int(raw)
    except ValueError:
        raise GraphError(f"GGL_MAX_VERTICES must be an integer, got {raw!r}") from None


def _check_size(n: int, what: str = "graph") -> None:
    cap = max_vertices()
    if n > cap:
        raise GraphError(f"{what} would have {n} vertices, above the cap of {cap}")


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbourhood of ``v`` as a bit mask and ``dist`` the
    BFS distance matrix, with :data:`UNREACHABLE` between components.
    """

    n: int
    adj: tuple[int, ...]
    dist: tuple[tuple[int, ...], ...] = field(repr=False)
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    @property
    def vertices(self) -> int:
        return bits.full(self.n)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (u, v) for u in range(self.n) for v in bits.members(self.adj[u]) if u < v
        )

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return bits.size(self.adj[v])

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    @cached_property
    def intervals(self) -> tuple[tuple[int, ...], ...]:
        """``intervals[u][v]``: every vertex on some shortest u-v path."""
        n, d = self.n, self.dist
        rows = []
        for u in range(n):
            row = []
            for v in range(n):
                duv = d[u][v]
                if duv == UNREACHABLE:
                    row.append((1 << u) | (1 << v))
                    continue
                mask = 0
                for w in range(n):
                    a, b = d[u][w], d[w][v]
                    if a != UNREACHABLE and b != UNREACHABLE and a + b == duv:
                        mask |= 1 << w
                row.append(mask)
            rows.append(tuple(row))
        return tuple(rows)

    @cached_property
    def is_connected(self) -> bool:
        return all(x != UNREACHABLE for x in self.dist[0])

    @cached_property
    def diameter(self) -> int | None:
        """Largest distance, or ``None`` for a disconnected graph."""
        if not self.is_connected:
            return None
        return max(max(row) for row in self.dist)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def relabeled(self, labels: Sequence[str] | None) -> Graph:
        if labels is not None and len(labels) != self.n:
            raise GraphError(f"expected {self.n} labels, got {len(labels)}")
        return Graph(self.n, self.adj, self.dist, tuple(labels) if labels else None)


def _bfs_distances(n: int, adj: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    rows = []
    for s in range(n):
        d = [UNREACHABLE] * n
        d[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in bits.members(adj[u]):
                if d[w] == UNREACHABLE:
                    d[w] = d[u] + 1
                    queue.append(w)
        rows.append(tuple(d))
    return tuple(rows)


def make_graph(
    n: int,
    edges: Iterable[tuple[int, int]],
    labels: Sequence[str] | None = None,
) -> Graph:
    """Build a graph from an edge list; duplicate edges are collapsed."""
    if n < 1:
        raise GraphError(f"a graph needs at least one vertex, got n={n}")
    _check_size(n)
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    if labels is not None and len(labels) != n:
        raise GraphError(f"expected {n} labels, got {len(labels)}")
    return Graph(n, tuple(adj), _bfs_distances(n, adj), tuple(labels) if labels else None)


# -- combinators ------------------------------------------------------------


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """G's vertices keep their indices; H's are shifted by ``g.n``."""
    _check_size(g.n + h.n, "disjoint union")
    off = g.n
    return make_graph(g.n + h.n, list(g.edges) + [(u + off, v + off) for u, v in h.edges])


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides."""
    _check_size(g.n + h.n, "join")
    off = g.n
    cross = [(u, off + v) for u in range(g.n) for v in range(h.n)]
    return make_graph(
        g.n + h.n,
        list(g.edges) + [(u + off, v + off) for u, v in h.edges] + cross,
    )


def box_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product; vertex ``(x, y)`` gets index ``x * h.n + y``."""
    _check_size(g.n * h.n, "box product")
    m = h.n
    edges = []
    for x in range(g.n):
        for a, b in h.edges:
            edges.append((x * m + a, x * m + b))
    for y in range(m):
        for a, b in g.edges:
            edges.append((a * m + y, b * m + y))
    return make_graph(g.n * m, edges)


def one_clique_sum(parts: Sequence[tuple[Graph, int]]) -> Graph:
    """Glue the marked vertex of every part into one shared vertex 0.

    The other vertices follow in part order, each part keeping its own
    ascending order.
    """
    if len(parts) < 2:
        raise GraphError("a 1-clique sum needs at least two parts")
    total = 1 - len(parts) + sum(g.n for g, _ in parts)
    _check_size(total, "1-clique sum")
    edges = []
    nxt = 1
    for g, c in parts:
        if not 0 <= c < g.n:
            raise GraphError(f"marked vertex {c} is not a vertex of a {g.n}-vertex part")
        index = {}
        for v in range(g.n):
            if v == c:
                index[v] = 0
            else:
                index[v] = nxt
                nxt += 1
        edges.extend((index[u], index[v]) for u, v in g.edges)
    return make_graph(total, edges)


def corona(h: Graph) -> Graph:
    """Attach a pendant ``h.n + v`` to every vertex ``v`` of ``h``."""
    _check_size(2 * h.n, "corona")
    return make_graph(2 * h.n, list(h.edges) + [(v, h.n + v) for v in range(h.n)])


def induced_subgraph(g: Graph, mask: int) -> Graph:
    keep = bits.to_list(mask)
    pos = {v: i for i, v in enumerate(keep)}
    edges = [(pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos]
    labels = [g.labels[v] for v in keep] if g.labels else None
    return make_graph(len(keep), edges, labels)


# -- blocks -----------------------------------------------------------------


def blocks_and_cut_vertices(g: Graph) -> tuple[list[int], int]:
    """Biconnected blocks (as masks) and the cut-vertex mask.

    Isolated vertices count as single-vertex blocks.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    blocks: list[int] = []
    cut = 0
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        if g.adj[root] == 0:
            disc[root] = timer
            timer += 1
            blocks.append(1 << root)
            continue
        disc[root] = low[root] = timer
        timer += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(bits.to_list(g.adj[root])))]
        root_children = 0
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((u, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, u, iter(bits.to_list(g.adj[w]))))
                    if u == root:
                        root_children += 1
                    advanced = True
                    break
                if w != parent and disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[u])
            if low[u] >= disc[parent]:
                if parent != root:
                    cut |= 1 << parent
                block = 0
                while True:
                    a, b = edge_stack.pop()
                    block |= (1 << a) | (1 << b)
                    if (a, b) == (parent, u):
                        break
                blocks.append(block)
        if root_children > 1:
            cut |= 1 << root
    return blocks, cut


def is_block_graph(g: Graph) -> bool:
    """True when every block induces a complete graph."""
    blocks, _ = blocks_and_cut_vertices(g)
    for block in blocks:
        for v in bits.members(block):
            if block & ~(1 << v) & ~g.adj[v]:
                return False
    return True


def simplicial_vertices(g: Graph) -> int:
    """Vertices whose neighbourhood induces a clique."""
    out = 0
    for v in range(g.n):
        nb = g.adj[v]
        if all(nb & ~(1 << w) & ~g.adj[w] == 0 for w in bits.members(nb)):
            out |= 1 << v
    return out


# -- text file format -------------------------------------------------------


def parse_graph_text(text: str) -> Graph:
    """Read ``n <count>`` followed by ``<u> <v>`` lines; ``#`` starts a comment."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n":
                raise GraphError(f"line {lineno}: expected 'n <count>', got {raw!r}")
            n = _int_field(fields[1], lineno)
            continue
        if len(fields) != 2:
            raise GraphError(f"line {lineno}: expected '<u> <v>', got {raw!r}")
        edges.append((_int_field(fields[0], lineno), _int_field(fields[1], lineno)))
    if n is None:
        raise GraphError("missing 'n <count>' header")
    return make_graph(n, edges)


def _int_field(s: str, lineno: int) -> int:
    try:
        return int(s)
    except ValueError:
        raise GraphError(f"line {lineno}: {s!r} is not an integer") from None


def format_graph_text(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"n {g.n}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_graph(path: str | os.PathLike) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph_text(fh.read())


def write_graph(g: Graph, path: str | os.PathLike, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_graph_text(g, comment))
