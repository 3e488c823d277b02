"""Exhaustive and random graph sources for verification sweeps."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator

from .graph import Graph, make_graph


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on ``n`` vertices (2^(n choose 2) of them)."""
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield make_graph(n, [e for k, e in enumerate(pairs) if code >> k & 1])


def connected_graphs(n: int) -> Iterator[Graph]:
    """Every labeled connected graph on ``n`` vertices."""
    for g in all_graphs(n):
        if g.is_connected:
            yield g


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    pairs = combinations(range(n), 2)
    return make_graph(n, [e for e in pairs if rng.random() < p])


def random_connected_graph(n: int, rng: random.Random, p: float = 0.4, max_tries: int = 10_000) -> Graph:
    """Erdos-Renyi G(n, p) conditioned on connectivity by rejection."""
    for _ in range(max_tries):
        g = random_graph(n, p, rng)
        if g.is_connected:
            return g
    raise RuntimeError(f"no connected G({n}, {p}) sample in {max_tries} tries")


def random_connected_graphs(count: int, n: int, seed: int, p: float = 0.4) -> list[Graph]:
    rng = random.Random(seed)
    return [random_connected_graph(n, rng, p) for _ in range(count)]
