"""Vogan superdiagrams on finite Dynkin diagrams: enumeration, flip-move classes, real-form labels.

Painting and circling are independent bits on involution-fixed vertices: a
fixed white vertex may be painted, circled, both, or neither.  Flip moves
change the painting only and carry circlings along unchanged.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .dynkin import WHITE, DiagramMap, DynkinDiagram, involutions
from .errors import StructuralError
from .moves import bits, conjugate, flip_table, map_mask, paint_key, to_mask


@dataclass(frozen=True)
class VoganSuperdiagram:
    diagram: DynkinDiagram
    involution: DiagramMap
    painted: frozenset[int]
    circled: frozenset[int]

    def __post_init__(self) -> None:
        validate_vogan(self.diagram, self.involution, self.painted, self.circled)

    @property
    def key(self) -> tuple:
        """Ordering key: involution word, painted count, painted ids, circled ids."""
        return (self.involution.perm, len(self.painted), tuple(sorted(self.painted)), tuple(sorted(self.circled)))

    def __str__(self) -> str:
        return (
            f"{self.diagram.family} inv={list(self.involution.perm)} "
            f"painted={sorted(self.painted)} circled={sorted(self.circled)}"
        )


def validate_vogan(d: DynkinDiagram, inv: DiagramMap, painted: Iterable[int], circled: Iterable[int]) -> None:
    n = d.size
    if len(inv.perm) != n or sorted(inv.perm) != list(range(n)):
        raise StructuralError("involution is not a permutation of the vertices")
    if not inv.is_involution:
        raise StructuralError("diagram map has order greater than 2")
    fixed = inv.fixed_points()
    for v in painted:
        if v not in fixed:
            raise StructuralError(f"painted vertex {v} is moved by the involution")
        if d.kind(v) != WHITE:
            raise StructuralError(f"painted vertex {v} is not even")
    for v in circled:
        if v not in fixed:
            raise StructuralError(f"circled vertex {v} is moved by the involution")


@dataclass(frozen=True)
class RealFormLabel:
    display: str
    family: str | None = None
    params: tuple[int, ...] = ()

    @property
    def is_labeled(self) -> bool:
        return self.display != UNLABELED.display

    def __str__(self) -> str:
        return self.display


UNLABELED = RealFormLabel("unlabeled")


@dataclass(frozen=True)
class VoganClass:
    representative: VoganSuperdiagram
    members: tuple[VoganSuperdiagram, ...]


def _subsets(ids: Sequence[int]):
    for k in range(len(ids) + 1):
        for c in combinations(ids, k):
            yield frozenset(c)


def enumerate_vogan(d: DynkinDiagram) -> list[VoganSuperdiagram]:
    """Every (involution, painted, circled) triple, sorted by involution word then painted then circled."""
    out = []
    for inv in sorted(involutions(d), key=lambda g: g.perm):
        fixed = sorted(inv.fixed_points())
        whites = [v for v in fixed if d.kind(v) == WHITE]
        for p in _subsets(whites):
            for c in _subsets(fixed):
                out.append(VoganSuperdiagram(d, inv, p, c))
    out.sort(key=lambda v: (v.involution.perm, tuple(sorted(v.painted)), tuple(sorted(v.circled))))
    return out


def flip(v: VoganSuperdiagram, w: int) -> VoganSuperdiagram:
    """Single flip move at painted vertex w."""
    if w not in v.painted:
        raise StructuralError(f"flip requires a painted vertex, {w} is not painted")
    t = flip_table(v.diagram, v.involution.perm)
    mask = to_mask(v.painted) ^ t.masks[w]
    return VoganSuperdiagram(v.diagram, v.involution, frozenset(bits(mask)), v.circled)


def flip_orbit(v: VoganSuperdiagram) -> list[frozenset[int]]:
    """All paintings reachable from v by flip moves (fixed involution, automorphisms not applied)."""
    t = flip_table(v.diagram, v.involution.perm)
    return [frozenset(bits(m)) for m in sorted(t.orbit_of[to_mask(v.painted)], key=paint_key)]


def _class_key(d: DynkinDiagram, perm, painted: int, circled: int, ignore_circlings: bool) -> tuple:
    best = None
    for g in d.automorphism_group:
        p2 = conjugate(g.perm, perm)
        pm = flip_table(d, p2).best[map_mask(g.perm, painted)]
        cm = 0 if ignore_circlings else map_mask(g.perm, circled)
        k = (p2, paint_key(pm), bits(cm))
        if best is None or k < best:
            best = k
    return best


def canonicalize(v: VoganSuperdiagram, ignore_circlings: bool = False) -> VoganSuperdiagram:
    """Least member of the class under flips and diagram automorphisms.

    Members are compared by involution word, then painted count, then painted
    ids, then circled ids, so the result carries the fewest painted vertices
    the class allows.
    """
    perm, (_, p), c = _class_key(
        v.diagram, v.involution.perm, to_mask(v.painted), to_mask(v.circled), ignore_circlings
    )
    return VoganSuperdiagram(v.diagram, DiagramMap(perm), frozenset(p), frozenset(c))


def equivalent(a: VoganSuperdiagram, b: VoganSuperdiagram, ignore_circlings: bool = False) -> bool:
    return canonicalize(a, ignore_circlings) == canonicalize(b, ignore_circlings)


def equivalence_classes(vs: Iterable[VoganSuperdiagram], ignore_circlings: bool = False) -> list[VoganClass]:
    groups: dict[VoganSuperdiagram, list[VoganSuperdiagram]] = {}
    for v in vs:
        groups.setdefault(canonicalize(v, ignore_circlings), []).append(v)
    reps = sorted(groups, key=lambda r: r.key)
    return [VoganClass(r, tuple(groups[r])) for r in reps]


def vogan_classes(d: DynkinDiagram, ignore_circlings: bool = False) -> list[VoganClass]:
    return equivalence_classes(enumerate_vogan(d), ignore_circlings)


# real-form labels

def _label_a(m: int, n: int, eps_paint: list[int], dlt_paint: list[int], nontrivial: bool) -> RealFormLabel:
    """Label from painted positions (1-based) in the two even blocks of A(m,n)."""
    if nontrivial:
        if eps_paint or dlt_paint or (m + 1) % 2 or (n + 1) % 2:
            return UNLABELED
        return RealFormLabel(f"su*({m + 1}|{n + 1})", "A", (m + 1, n + 1))
    if len(eps_paint) > 1 or len(dlt_paint) > 1:
        return UNLABELED
    if not eps_paint and not dlt_paint:
        return RealFormLabel(f"su({m + 1}|{n + 1})-compact", "A", (m + 1, 0, n + 1, 0))
    p = eps_paint[0] if eps_paint else 0
    q = dlt_paint[0] if dlt_paint else 0
    return RealFormLabel(f"su({p},{m + 1 - p}|{q},{n + 1 - q})", "A", (p, m + 1 - p, q, n + 1 - q))


def real_form_label(v: VoganSuperdiagram) -> RealFormLabel:
    """Table lookup on a canonical representative; anything outside the table is UNLABELED."""
    f = v.diagram.family
    if f.permissive:
        return UNLABELED
    painted = sorted(v.painted)
    nontrivial = not v.involution.is_identity
    m, n = f.m, f.n
    if f.tag == "A":
        eps = [i + 1 for i in painted if i < m]
        dlt = [i - m for i in painted if i > m]
        return _label_a(m, n, eps, dlt, nontrivial)
    if f.tag == "B":
        if nontrivial or len(painted) > 1 or any(i < n for i in painted):
            return UNLABELED
        if not painted:
            return RealFormLabel(f"osp(0,{2 * m + 1}|{2 * n})", "B", (0, 2 * m + 1, 2 * n))
        i = painted[0] - n + 1
        return RealFormLabel(f"osp({2 * i},{2 * m + 1 - 2 * i}|{2 * n})", "B", (2 * i, 2 * m + 1 - 2 * i, 2 * n))
    if f.tag == "B0":
        if nontrivial or painted:
            return UNLABELED
        return RealFormLabel(f"osp(1|{2 * n})", "B0", (1, 2 * n))
    if f.tag == "C":
        rank = n - 1
        if nontrivial or len(painted) > 1:
            return UNLABELED
        if not painted:
            return RealFormLabel(f"osp*(2|{rank},0)", "C", (rank, 0))
        j = painted[0]
        if j == rank:
            return RealFormLabel(f"osp(2|{2 * rank};ℝ)", "C", (2 * rank,))
        return RealFormLabel(f"osp*(2|{j},{rank - j})", "C", (j, rank - j))
    if f.tag == "D":
        if len(painted) > 1 or any(i < n for i in painted):
            return UNLABELED
        tips = {n + m - 2, n + m - 1}
        if nontrivial:
            if not painted:
                return RealFormLabel(f"osp(1,{2 * m - 1}|{2 * n})", "D", (1, 2 * m - 1, 2 * n))
            i = painted[0] - n + 1
            return RealFormLabel(f"osp({2 * i + 1},{2 * m - 2 * i - 1}|{2 * n})", "D", (2 * i + 1, 2 * m - 2 * i - 1, 2 * n))
        if not painted:
            return RealFormLabel(f"osp(0,{2 * m}|{2 * n})", "D", (0, 2 * m, 2 * n))
        if painted[0] in tips:
            return RealFormLabel(f"osp*({2 * m}|{n},0)", "D", (2 * m, n, 0))
        i = painted[0] - n + 1
        return RealFormLabel(f"osp({2 * i},{2 * m - 2 * i}|{2 * n})", "D", (2 * i, 2 * m - 2 * i, 2 * n))
    return UNLABELED


@dataclass(frozen=True)
class ClassSummary:
    representative: VoganSuperdiagram
    size: int
    label: RealFormLabel


def summarize(classes: Iterable[VoganClass]) -> list[ClassSummary]:
    return [ClassSummary(c.representative, len(c.members), real_form_label(c.representative)) for c in classes]
