"""Vertex sets as integer bit masks.

Bit ``i`` of a mask is set when vertex ``i`` is a member.  Plain ``int`` is
used throughout so that union, intersection and hashing are native and cheap;
the helpers here cover the handful of operations Python does not spell
directly.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def full(n: int) -> int:
    return (1 << n) - 1


def from_vertices(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> Iterator[int]:
    """Yield the vertices of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_list(mask: int) -> list[int]:
    return list(members(mask))


def size(mask: int) -> int:
    return bin(mask).count("1")


def parity(mask: int) -> int:
    return size(mask) & 1


def complement(mask: int, n: int) -> int:
    return full(n) & ~mask


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def canonical(masks: Iterable[int]) -> tuple[int, ...]:
    """Deduplicate and sort a family of masks into its canonical form."""
    return tuple(sorted(set(masks)))


def complement_family(family: Iterable[int], n: int) -> tuple[int, ...]:
    return canonical(complement(m, n) for m in family)


def format_set(mask: int, labels: tuple[str, ...] | None = None) -> str:
    if labels is None:
        return "{" + ",".join(str(v) for v in members(mask)) + "}"
    return "{" + ",".join(labels[v] for v in members(mask)) + "}"
