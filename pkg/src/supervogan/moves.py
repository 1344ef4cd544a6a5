"""Painting flip moves as bitmask operations, shared by single and double diagrams.

A painted even vertex w flips every eligible neighbor u with odd <u, w^v>,
i.e. odd ``cartan[w][u]``.  Eligible vertices are the involution-fixed white
vertices outside an excluded set (the black set for double diagrams).
"""
from __future__ import annotations

from typing import Iterable

from . import kernels
from .dynkin import WHITE, DynkinDiagram


def to_mask(ids: Iterable[int]) -> int:
    m = 0
    for i in ids:
        m |= 1 << i
    return m


def bits(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def paint_key(mask: int) -> tuple[int, tuple[int, ...]]:
    b = bits(mask)
    return (len(b), b)


def eligible_mask(d: DynkinDiagram, perm: tuple[int, ...], excluded: int = 0) -> int:
    m = 0
    for v in d.vertices:
        if v.kind == WHITE and perm[v.id] == v.id and not (excluded >> v.id) & 1:
            m |= 1 << v.id
    return m


def flip_masks(d: DynkinDiagram, perm: tuple[int, ...], excluded: int = 0) -> list[int]:
    elig = eligible_mask(d, perm, excluded)
    out = []
    for w in range(d.size):
        fm = 0
        if (elig >> w) & 1:
            for u in d.neighbors(w):
                c = d.cartan[w][u]
                if (elig >> u) & 1 and c.denominator == 1 and c.numerator % 2:
                    fm |= 1 << u
        out.append(fm)
    return out


class FlipTable:
    """Best representative (fewest painted, then lexicographic) of every flip orbit."""

    def __init__(self, d: DynkinDiagram, perm: tuple[int, ...], excluded: int = 0):
        self.eligible = eligible_mask(d, perm, excluded)
        self.masks = flip_masks(d, perm, excluded)
        self.best: dict[int, int] = {}
        self.orbit_of: dict[int, tuple[int, ...]] = {}
        for orb in kernels.flip_orbits(self.eligible, self.masks):
            rep = min(orb, key=paint_key)
            t = tuple(orb)
            for s in orb:
                self.best[s] = rep
                self.orbit_of[s] = t

    def orbits(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for s in sorted(self.orbit_of):
            t = self.orbit_of[s]
            if t[0] not in seen:
                seen.add(t[0])
                out.append(t)
        return out


def flip_table(d: DynkinDiagram, perm: tuple[int, ...], excluded: int = 0) -> FlipTable:
    """Cached per diagram object, so relabelled or hand-built diagrams never share tables."""
    cache = d.__dict__.setdefault("_flip_tables", {})
    key = (perm, excluded)
    t = cache.get(key)
    if t is None:
        t = FlipTable(d, perm, excluded)
        cache[key] = t
    return t


def conjugate(g: tuple[int, ...], perm: tuple[int, ...]) -> tuple[int, ...]:
    """g . perm . g^-1 as an image tuple."""
    n = len(g)
    out = [0] * n
    for i in range(n):
        out[g[i]] = g[perm[i]]
    return tuple(out)


def map_mask(g: tuple[int, ...], mask: int) -> int:
    m = 0
    for i in bits(mask):
        m |= 1 << g[i]
    return m
