"""Geodesic intervals, the two closure operators and the set families they induce.

All sets are bit masks (see :mod:`geodetic_games.bits`); families are
canonical tuples of masks sorted ascending.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from itertools import combinations

from . import bits
from .graph import Graph, simplicial_vertices

DEFAULT_FAMILY_CAP = 1 << 20


class ClosureKind(enum.Enum):
    HULL = "hull"
    GEODETIC = "geodetic"


class FamilyTooLarge(RuntimeError):
    """A set-family enumeration exceeded its size guard."""


def interval(g: Graph, u: int, v: int) -> int:
    """Vertices on some shortest u-v path; just ``{u, v}`` across components."""
    return g.intervals[u][v]


def geodetic_closure(g: Graph, p: int) -> int:
    iv = g.intervals
    verts = bits.to_list(p)
    out = p
    for i, u in enumerate(verts):
        row = iv[u]
        for v in verts[i + 1:]:
            out |= row[v]
    return out


def convex_hull(g: Graph, p: int) -> int:
    iv = g.intervals
    hull = p
    todo = p
    while todo:
        low = todo & -todo
        todo ^= low
        row = iv[low.bit_length() - 1]
        grown = hull
        for v in bits.members(hull):
            grown |= row[v]
        todo |= grown & ~hull
        hull = grown
    return hull


def close(g: Graph, p: int, kind: ClosureKind) -> int:
    if kind is ClosureKind.HULL:
        return convex_hull(g, p)
    return geodetic_closure(g, p)


def is_generating(g: Graph, p: int, kind: ClosureKind = ClosureKind.HULL) -> bool:
    return close(g, p, kind) == g.vertices


def is_convex(g: Graph, p: int) -> bool:
    return geodetic_closure(g, p) == p


def _guard(count: int, cap: int, what: str) -> None:
    if count > cap:
        raise FamilyTooLarge(f"{what} exceeded {cap} sets; raise the cap to continue")


def closed_sets(g: Graph, kind: ClosureKind = ClosureKind.HULL, cap: int = DEFAULT_FAMILY_CAP) -> tuple[int, ...]:
    """Every fixed point of ``close(., kind)``.

    A set is fixed by the geodetic closure exactly when it is convex, so both
    kinds return the convex sets; they are found by a breadth-first walk over
    one-point hull extensions starting from the empty set.
    """
    start = convex_hull(g, 0)
    seen = {start}
    queue = deque([start])
    full = g.vertices
    while queue:
        c = queue.popleft()
        for v in bits.members(full & ~c):
            d = convex_hull(g, c | 1 << v)
            if d not in seen:
                seen.add(d)
                _guard(len(seen), cap, "closed-set enumeration")
                queue.append(d)
    return bits.canonical(seen)


def maximal_nongenerating(g: Graph, kind: ClosureKind = ClosureKind.HULL, cap: int = DEFAULT_FAMILY_CAP) -> tuple[int, ...]:
    """The family of maximal nongenerating sets."""
    if kind is ClosureKind.HULL:
        full = g.vertices
        return bits.canonical(
            c for c in closed_sets(g, kind, cap)
            if c != full
            and all(convex_hull(g, c | 1 << v) == full for v in bits.members(full & ~c))
        )
    return maximal_nongenerating_downset(g, kind, cap)


def maximal_nongenerating_downset(g: Graph, kind: ClosureKind, cap: int = DEFAULT_FAMILY_CAP) -> tuple[int, ...]:
    """Maximal nongenerating sets by walking the down-closed nongenerating family.

    Works for any monotone operator, which is what the geodetic closure needs:
    its maximal nongenerating sets are not always fixed points.
    """
    full = g.vertices
    n = g.n
    gen_cache: dict[int, bool] = {}

    def generates(p: int) -> bool:
        r = gen_cache.get(p)
        if r is None:
            r = gen_cache[p] = close(g, p, kind) == full
        return r

    found = []
    visited = 0
    stack = [(0, 0)]  # (set, next vertex allowed)
    while stack:
        p, lo = stack.pop()
        visited += 1
        _guard(visited, cap, "nongenerating-set enumeration")
        if all(generates(p | 1 << v) for v in bits.members(full & ~p)):
            found.append(p)
        for v in range(lo, n):
            q = p | 1 << v
            if not generates(q):
                stack.append((q, v + 1))
    return bits.canonical(found)


def _contained_in_some(p: int, family: tuple[int, ...]) -> bool:
    return any(p & ~m == 0 for m in family)


def minimal_generating(
    g: Graph,
    kind: ClosureKind = ClosureKind.HULL,
    cap: int = DEFAULT_FAMILY_CAP,
    maximal: tuple[int, ...] | None = None,
) -> tuple[int, ...]:
    """Minimal generating sets, by ascending-size subset search.

    A set generates exactly when no maximal nongenerating set contains it.
    Under the hull every generating set contains all simplicial vertices, so
    those are forced.  A minimal generating set is a minimal transversal of
    the complements of the maximal nongenerating sets, hence has at most one
    element per such set.
    """
    if maximal is None:
        maximal = maximal_nongenerating(g, kind, cap)
    full = g.vertices
    forced = simplicial_vertices(g) if kind is ClosureKind.HULL else 0
    free = bits.to_list(full & ~forced)
    found: list[int] = []
    limit = min(len(maximal), g.n)
    checked = 0
    for k in range(0, len(free) + 1):
        if bits.size(forced) + k > limit:
            break
        for combo in combinations(free, k):
            checked += 1
            _guard(checked, cap, "generating-set search")
            s = forced | bits.from_vertices(combo)
            if any(f & ~s == 0 for f in found):
                continue
            if not _contained_in_some(s, maximal):
                found.append(s)
    return bits.canonical(found)


def frattini(g: Graph, kind: ClosureKind = ClosureKind.HULL, cap: int = DEFAULT_FAMILY_CAP, maximal: tuple[int, ...] | None = None) -> int:
    """Intersection of all maximal nongenerating sets."""
    if maximal is None:
        maximal = maximal_nongenerating(g, kind, cap)
    out = g.vertices
    for m in maximal:
        out &= m
    return out


def intersection_lattice(maximal: tuple[int, ...], full: int, cap: int = DEFAULT_FAMILY_CAP) -> tuple[int, ...]:
    """All intersections of subfamilies of ``maximal``; ``full`` is the empty one."""
    seen = {full}
    queue = deque([full])
    while queue:
        s = queue.popleft()
        for m in maximal:
            t = s & m
            if t not in seen:
                seen.add(t)
                _guard(len(seen), cap, "intersection-set enumeration")
                queue.append(t)
    return bits.canonical(seen)


def ceil(p: int, maximal: tuple[int, ...], full: int) -> int:
    """Smallest intersection set containing ``p``; ``full`` if none does."""
    out = full
    for m in maximal:
        if p & ~m == 0:
            out &= m
    return out


def complement_family(family: tuple[int, ...], n: int) -> tuple[int, ...]:
    return bits.complement_family(family, n)


@dataclass(frozen=True)
class ConvexityReport:
    kind: ClosureKind
    maximal: tuple[int, ...]
    minimal: tuple[int, ...]
    phi: int
    intersection_sets: tuple[int, ...]


def analyze_convexity(g: Graph, kind: ClosureKind = ClosureKind.HULL, cap: int = DEFAULT_FAMILY_CAP) -> ConvexityReport:
    maximal = maximal_nongenerating(g, kind, cap)
    return ConvexityReport(
        kind=kind,
        maximal=maximal,
        minimal=minimal_generating(g, kind, cap, maximal),
        phi=frattini(g, kind, cap, maximal),
        intersection_sets=intersection_lattice(maximal, g.vertices, cap),
    )
