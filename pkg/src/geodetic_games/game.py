"""Nim-numbers of the achievement (GEN) and avoidance (DNG) building games.

A position is the set of vertices selected so far; move order never matters,
so the game tree is explored over subsets with a memo table.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from . import bits
from .convexity import DEFAULT_FAMILY_CAP, ClosureKind, ceil, close, maximal_nongenerating
from .graph import Graph

DEFAULT_BRUTE_LIMIT = 22


class Game(enum.Enum):
    GEN = "gen"
    DNG = "dng"


@dataclass(frozen=True)
class GameSpec:
    game: Game = Game.DNG
    closure: ClosureKind = ClosureKind.HULL

    def __str__(self) -> str:
        return f"{self.game.name}/{self.closure.value}"


class IllegalPosition(ValueError):
    pass


class GameTooLarge(RuntimeError):
    pass


def mex(values: Iterable[int]) -> int:
    seen = set(values)
    k = 0
    while k in seen:
        k += 1
    return k


def nim_sum(a: int, b: int) -> int:
    return a ^ b


class _Closure:
    """Per-graph generating test with a memo table."""

    def __init__(self, g: Graph, kind: ClosureKind):
        self.g = g
        self.kind = kind
        self.full = g.vertices
        self._cache: dict[int, bool] = {}

    def generates(self, p: int) -> bool:
        r = self._cache.get(p)
        if r is None:
            r = self._cache[p] = close(self.g, p, self.kind) == self.full
        return r


def _check_position(g: Graph, spec: GameSpec, p: int, gen: _Closure) -> None:
    if p & ~g.vertices:
        raise IllegalPosition(f"position {bits.format_set(p)} uses vertices outside 0..{g.n - 1}")
    if spec.game is Game.DNG and gen.generates(p):
        raise IllegalPosition(f"{bits.format_set(p)} generates, so it is not a DNG position")


def _options(g: Graph, spec: GameSpec, p: int, gen: _Closure) -> list[int]:
    free = g.vertices & ~p
    if spec.game is Game.GEN:
        if gen.generates(p):
            return []
        return [p | 1 << v for v in bits.members(free)]
    return [q for q in (p | 1 << v for v in bits.members(free)) if not gen.generates(q)]


def options(g: Graph, spec: GameSpec, p: int) -> list[int]:
    """Options of position ``p`` in ascending order of the added vertex."""
    gen = _Closure(g, spec.closure)
    _check_position(g, spec, p, gen)
    return _options(g, spec, p, gen)


class BruteSolver:
    """Exact nim-numbers of every position, memoized on the selected set."""

    def __init__(self, g: Graph, spec: GameSpec, limit: int = DEFAULT_BRUTE_LIMIT):
        if g.n > limit:
            raise GameTooLarge(f"brute force is capped at {limit} vertices, graph has {g.n}")
        self.g = g
        self.spec = spec
        self.closure = _Closure(g, spec.closure)
        self.memo: dict[int, int] = {}

    def options(self, p: int) -> list[int]:
        return _options(self.g, self.spec, p, self.closure)

    def nim(self, p: int = 0) -> int:
        memo = self.memo
        if p in memo:
            return memo[p]
        stack = [p]
        while stack:
            q = stack[-1]
            if q in memo:
                stack.pop()
                continue
            opts = self.options(q)
            pending = [o for o in opts if o not in memo]
            if pending:
                stack.extend(pending)
                continue
            memo[q] = mex(memo[o] for o in opts)
            stack.pop()
        return memo[p]


def nim_brute(g: Graph, spec: GameSpec, limit: int = DEFAULT_BRUTE_LIMIT) -> int:
    return BruteSolver(g, spec, limit).nim(0)


class FastSolver:
    """Game-tree recursion memoized on (smallest intersection set, parity)."""

    def __init__(self, g: Graph, spec: GameSpec, maximal: tuple[int, ...] | None = None, cap: int = DEFAULT_FAMILY_CAP):
        self.g = g
        self.spec = spec
        self.maximal = maximal if maximal is not None else maximal_nongenerating(g, spec.closure, cap)
        self.full = g.vertices
        self.memo: dict[tuple[int, int], int] = {}

    def key(self, p: int) -> tuple[int, int]:
        return ceil(p, self.maximal, self.full), bits.parity(p)

    def _options(self, p: int, cls: int) -> list[int]:
        free = self.full & ~p
        if cls == self.full:
            return []  # generating: terminal in GEN, never reached in DNG
        out = []
        for v in bits.members(free):
            q = p | 1 << v
            if self.spec.game is Game.DNG and ceil(q, self.maximal, self.full) == self.full:
                continue
            out.append(q)
        return out

    def nim(self, p: int = 0) -> int:
        memo = self.memo
        start = self.key(p)
        stack = [p]
        while stack:
            q = stack[-1]
            k = self.key(q)
            if k in memo:
                stack.pop()
                continue
            opts = self._options(q, k[0])
            keys = [self.key(o) for o in opts]
            pending = [o for o, ko in zip(opts, keys) if ko not in memo]
            if pending:
                stack.extend(pending)
                continue
            memo[k] = mex(memo[ko] for ko in keys)
            stack.pop()
        return memo[start]


def nim_fast(g: Graph, spec: GameSpec, maximal: tuple[int, ...] | None = None, cap: int = DEFAULT_FAMILY_CAP) -> int:
    return FastSolver(g, spec, maximal, cap).nim(0)


def winning_move(g: Graph, spec: GameSpec, p: int = 0, limit: int = DEFAULT_BRUTE_LIMIT) -> int | None:
    """Least vertex whose selection leaves a position of nim-number 0."""
    solver = BruteSolver(g, spec, limit)
    _check_position(g, spec, p, solver.closure)
    for q in solver.options(p):
        if solver.nim(q) == 0:
            return (q & ~p).bit_length() - 1
    return None


def parity_forced_nim(maximal: tuple[int, ...]) -> int | None:
    """The DNG nim-number when every maximal nongenerating set has one parity."""
    if not maximal:
        raise ValueError("the family of maximal nongenerating sets is never empty")
    parities = {bits.parity(m) for m in maximal}
    return parities.pop() if len(parities) == 1 else None
