"""Maximal nongenerating families and Frattini subsets of combined graphs.

Each function predicts the hull-operator result on the combined graph from the
results on its parts, using the vertex numbering of the matching combinator
in :mod:`geodetic_games.graph`.
"""

from __future__ import annotations

from typing import Sequence

from . import bits
from .convexity import ClosureKind, convex_hull, frattini, maximal_nongenerating
from .graph import Graph


def union_family(ng: tuple[int, ...], n_g: int, nh: tuple[int, ...], n_h: int) -> tuple[int, ...]:
    """``N(G + H)``: a maximal set of one side together with all of the other."""
    vg, vh = bits.full(n_g), bits.full(n_h) << n_g
    return bits.canonical([m | vh for m in ng] + [vg | m << n_g for m in nh])


def _product_set(a: int, b: int, n_h: int) -> int:
    out = 0
    for x in bits.members(a):
        out |= b << (x * n_h)
    return out


def box_family(ng: tuple[int, ...], n_g: int, nh: tuple[int, ...], n_h: int) -> tuple[int, ...]:
    vg, vh = bits.full(n_g), bits.full(n_h)
    return bits.canonical(
        [_product_set(m, vh, n_h) for m in ng] + [_product_set(vg, m, n_h) for m in nh]
    )


def box_frattini(phi_g: int, phi_h: int, n_h: int) -> int:
    return _product_set(phi_g, phi_h, n_h)


def projections(s: int, n_h: int) -> tuple[int, int]:
    """Coordinate projections of a vertex set of ``G box H``."""
    pg = ph = 0
    for v in bits.members(s):
        x, y = divmod(v, n_h)
        pg |= 1 << x
        ph |= 1 << y
    return pg, ph


def box_hull(g: Graph, h: Graph, s: int) -> int:
    """``[S] = [p_G(S)] x [p_H(S)]``."""
    pg, ph = projections(s, h.n)
    return _product_set(convex_hull(g, pg), convex_hull(h, ph), h.n)


def _clique_sum_embeddings(parts: Sequence[tuple[Graph, int]]) -> list[list[int]]:
    out, nxt = [], 1
    for g, c in parts:
        index = []
        for v in range(g.n):
            if v == c:
                index.append(0)
            else:
                index.append(nxt)
                nxt += 1
        out.append(index)
    return out


def _embed(mask: int, index: list[int]) -> int:
    return bits.from_vertices(index[v] for v in bits.members(mask))


def clique_sum_family(parts: Sequence[tuple[Graph, int]]) -> tuple[int, ...]:
    """``N`` of a 1-clique sum of nontrivial connected graphs.

    A maximal set of one part that contains the shared vertex, together with
    every other part.
    """
    emb = _clique_sum_embeddings(parts)
    whole = [_embed(g.vertices, e) for (g, _), e in zip(parts, emb)]
    out = []
    for i, ((g, c), e) in enumerate(zip(parts, emb)):
        rest = 0
        for j, w in enumerate(whole):
            if j != i:
                rest |= w
        for m in maximal_nongenerating(g, ClosureKind.HULL):
            if m >> c & 1:
                out.append(_embed(m, e) | rest)
    return bits.canonical(out)


def clique_sum_frattini(parts: Sequence[tuple[Graph, int]]) -> int:
    """Union over parts of the intersection of the maximal sets through the shared vertex."""
    out = 0
    for (g, c), e in zip(parts, _clique_sum_embeddings(parts)):
        psi = g.vertices
        for m in maximal_nongenerating(g, ClosureKind.HULL):
            if m >> c & 1:
                psi &= m
        out |= _embed(psi, e)
    return out


def union_frattini(g: Graph, h: Graph) -> int:
    return frattini(g) | frattini(h) << g.n
