"""Shared fixtures for the test suite."""

from __future__ import annotations

from collections import Counter

from geodetic_games import bits
from geodetic_games.graph import Graph


def mask(g: Graph, names: str) -> int:
    """Vertex set from space-separated labels such as ``"v1 v3"``."""
    lookup = {g.label(v): v for v in range(g.n)}
    return bits.from_vertices(lookup[x] for x in names.split())


def masks(g: Graph, *groups: str) -> tuple[int, ...]:
    return bits.canonical(mask(g, s) for s in groups)


def diagram_shape(sd) -> tuple[Counter, Counter]:
    """Order-independent fingerprint of a simplified diagram."""
    key = [(n.type, n.longest) for n in sd.nodes]
    return Counter(key), Counter((key[a], key[b]) for a, b in sd.edges)


def minimal_transversals(edges) -> tuple[int, ...]:
    """Minimal hitting sets of a family of masks (Berge's incremental method)."""
    current = {0}
    for e in edges:
        grown = set()
        for t in current:
            if t & e:
                grown.add(t)
            else:
                for v in bits.members(e):
                    grown.add(t | 1 << v)
        current = {t for t in grown if not any(s != t and s & ~t == 0 for s in grown)}
    return bits.canonical(current)
