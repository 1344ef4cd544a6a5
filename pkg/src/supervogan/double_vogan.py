"""Almost-double and double Vogan superdiagrams on affine diagrams, filters, and superpair captions.

A double diagram carries a diagram involution, a black set (theta-fixed
directions), a circling of involution-fixed vertices, and a white painting on
fixed even vertices outside the black set.  Two diagrams are equivalent when
they differ by an affine diagram automorphism and flip moves of the white
painting (black vertices are excluded from flips).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .dynkin import GREY, WHITE, AffineDiagram, DiagramMap, involutions
from .errors import ParameterError, StructuralError
from .moves import bits, conjugate, flip_table, map_mask, paint_key, to_mask

PARITY_FAMILIES = frozenset({"A", "B", "B0"})


class _NotApplicable(enum.Enum):
    NOT_APPLICABLE = "not applicable"

    def __repr__(self) -> str:
        return "NOT_APPLICABLE"

    def __str__(self) -> str:
        return "n/a"


NOT_APPLICABLE = _NotApplicable.NOT_APPLICABLE

PRESERVES = "preserves"
INTERCHANGES = "interchanges"

XOR = "xor"
BLACK_ONLY = "black-only"
CONVENTIONS = (XOR, BLACK_ONLY)


@dataclass(frozen=True)
class DoubleVoganSuperdiagram:
    affine: AffineDiagram
    involution: DiagramMap
    black: frozenset[int]
    circled: frozenset[int]
    white_painting: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        validate_double(self.affine, self.involution, self.black, self.circled, self.white_painting)

    @property
    def key(self) -> tuple:
        return (
            self.involution.perm,
            tuple(sorted(self.black)),
            paint_key(to_mask(self.white_painting)),
            tuple(sorted(self.circled)),
        )

    @property
    def black_marks(self) -> tuple[int, ...]:
        return tuple(self.affine.marks[v] for v in sorted(self.black))

    def __str__(self) -> str:
        return (
            f"{self.affine.family} inv={list(self.involution.perm)} black={sorted(self.black)} "
            f"circled={sorted(self.circled)} painted={sorted(self.white_painting)}"
        )


def validate_double(ad: AffineDiagram, inv: DiagramMap, black, circled, wp) -> None:
    n = ad.size
    if len(inv.perm) != n or sorted(inv.perm) != list(range(n)):
        raise StructuralError("involution is not a permutation of the affine vertices")
    if not inv.is_involution:
        raise StructuralError("diagram map has order greater than 2")
    fixed = inv.fixed_points()
    for v in black:
        if ad.kind(v) != WHITE:
            raise StructuralError(f"black vertex {v} is not even")
    if inv.apply(black) != frozenset(black):
        raise StructuralError("involution does not preserve the black set")
    for v in circled:
        if v not in fixed:
            raise StructuralError(f"circled vertex {v} is moved by the involution")
    for v in wp:
        if v not in fixed or ad.kind(v) != WHITE or v in black:
            raise StructuralError(f"painted vertex {v} must be a fixed even non-black vertex")


@dataclass(frozen=True)
class HermitianTypeInfo:
    hermitian: bool
    black_action: str
    sign_on_z0: int
    sign_on_z1: int

    def __post_init__(self) -> None:
        expected = {PRESERVES: (1, 1), INTERCHANGES: (1, -1)}.get(self.black_action)
        if expected is None or (self.sign_on_z0, self.sign_on_z1) != expected:
            raise StructuralError(f"inconsistent Hermitian data {self}")


@dataclass(frozen=True)
class SymmetricSuperpair:
    numerator: str
    denominator: str
    tag: str

    @property
    def caption(self) -> str:
        return f"{self.numerator}/{self.denominator}" if self.denominator else self.numerator

    @property
    def is_classified(self) -> bool:
        return self.tag != ""

    def __str__(self) -> str:
        return self.caption


UNCLASSIFIED = SymmetricSuperpair("unclassified", "", "")


def _pair(caption: str, tag: str) -> SymmetricSuperpair:
    num, den = caption.split("/", 1)
    return SymmetricSuperpair(num, den, tag)


CAPTIONS: dict[str, SymmetricSuperpair] = {
    tag: _pair(cap, tag)
    for tag, cap in [
        ("A1", "(p)sl_r(m|n)/sl_r(p)⊕sl_r(m−p)⊕u(1)⊕ℝ"),
        ("A2", "su*(2m|2n)/sl(n)⊕u*(2m−2p)⊕u*(2p)⊕u(1)⊕ℝ"),
        ("A3", "su*(2m|2n)/o*(2m)⊕o*(2n)"),
        ("A4", "su*(2m|2n)/sp(2m,2p)⊕sp(2n,2q)"),
        ("A5", "(p)su(m,p|n,q)/su(p,m−p)⊕su(r,n−r)⊕iℝ"),
        ("A6", "(p)su(m,p|n,q)/osp(m,p|n)"),
        ("A7", "(p)su(m,p|n,q)/osp*(m,p|n)"),
        ("A8", "(p)su(m,p|n,q)/upq(m,p)"),
        ("B1", "osp(m,p|2n)/(sp(m,ℝ))"),
        ("B2", "osp(m,p|2n)/(sp(m,ℝ)⊕so(p,q))"),
        ("C1", "osp(2|2n)/(sp(n,ℝ)⊕so(2))"),
        ("C2", "osp(2|2n)/(sp(r,s)⊕so(2))"),
        ("D1", "osp*(2m|2n)/(sp(r,s)⊕so*(2p))"),
        ("D2", "osp*(2m|2n)/(sp(m,ℝ)⊕so(p,q))"),
        ("Dα1", "D(α)/(sl(2,ℝ)⊕sl(2,ℝ)⊕sl(2,ℝ))"),
        ("Dα2", "D(α)/(su(2)⊕su(2)⊕sl(2,ℝ))"),
        ("Dα3", "D(α)/(sl(2,ℂ)⊕sl(2,ℝ))"),
        ("F1", "F(4)/(su(2,ℝ)⊕so(1,6))"),
        ("F2", "F(4)/(su(2,ℝ)⊕so(2,5))"),
        ("F3", "F(4)/(sl(2,ℝ)⊕so(3,4))"),
        ("F4", "F(4)/(sl(2,ℝ)⊕so(7))"),
        ("G1", "G(3)/(sl(2,ℝ)⊕g_c)"),
        ("G2", "G(3)/(sl(2,ℝ)⊕g_s)"),
    ]
}

_ASCII = {"⊕": " + ", "ℝ": "R", "ℂ": "C", "α": "alpha", "−": "-", "*": "*"}


def to_ascii(s: str) -> str:
    """ASCII transliteration of a caption: ⊕ -> ' + ', ℝ -> R, ℂ -> C, α -> alpha, − -> -."""
    for k, v in _ASCII.items():
        s = s.replace(k, v)
    return s


# enumeration

def _black_sets(ad: AffineDiagram, inv: DiagramMap, max_black: int, marks: frozenset[int] | None):
    cands = [v.id for v in ad.vertices if v.kind == WHITE and (marks is None or v.mark in marks)]
    for k in range(max_black + 1):
        for c in combinations(cands, k):
            s = frozenset(c)
            if inv.apply(s) == s:
                yield s


def _subsets(ids):
    for k in range(len(ids) + 1):
        for c in combinations(ids, k):
            yield frozenset(c)


def iter_almost_double(
    ad: AffineDiagram, max_black: int = 2, black_marks: Iterable[int] | None = (1, 2)
) -> Iterator[DoubleVoganSuperdiagram]:
    marks = None if black_marks is None else frozenset(black_marks)
    for inv in sorted(involutions(ad), key=lambda g: g.perm):
        fixed = sorted(inv.fixed_points())
        for black in sorted(_black_sets(ad, inv, max_black, marks), key=lambda s: tuple(sorted(s))):
            paintable = [v for v in fixed if ad.kind(v) == WHITE and v not in black]
            for wp in _subsets(paintable):
                for c in _subsets(fixed):
                    yield DoubleVoganSuperdiagram(ad, inv, black, c, wp)


def enumerate_almost_double(
    ad: AffineDiagram, max_black: int = 2, black_marks: Iterable[int] | None = (1, 2)
) -> list[DoubleVoganSuperdiagram]:
    """All structures with at most ``max_black`` black vertices whose marks lie in ``black_marks``."""
    out = list(iter_almost_double(ad, max_black, black_marks))
    out.sort(key=lambda x: (x.involution.perm, tuple(sorted(x.black)), tuple(sorted(x.white_painting)), tuple(sorted(x.circled))))
    return out


def _check_r(r: int) -> None:
    if r not in (1, 2):
        raise ParameterError(f"r must be 1 or 2, got {r}")


def parity_applies(x: DoubleVoganSuperdiagram) -> bool:
    return x.affine.family.tag in PARITY_FAMILIES


def is_double(x: DoubleVoganSuperdiagram, r: int = 1) -> bool:
    """r times the black mark sum is even; only A and B type families are constrained."""
    _check_r(r)
    if not parity_applies(x):
        return True
    return (r * sum(x.black_marks)) % 2 == 0


def enumerate_double(ad: AffineDiagram, r: int = 1, **kw) -> list[DoubleVoganSuperdiagram]:
    _check_r(r)
    return [x for x in enumerate_almost_double(ad, **kw) if is_double(x, r)]


def is_hermitian(x: DoubleVoganSuperdiagram) -> bool:
    """Two black vertices, both of mark 1."""
    return len(x.black) == 2 and all(a == 1 for a in x.black_marks)


def black_mark_sum_check(x: DoubleVoganSuperdiagram):
    if len(x.black) != 2 or is_hermitian(x):
        return NOT_APPLICABLE
    return sum(x.black_marks) == 4


def hermitian_split(x: DoubleVoganSuperdiagram):
    if not is_hermitian(x):
        return NOT_APPLICABLE
    g, d = sorted(x.black)
    if x.involution(g) == g and x.involution(d) == d:
        return HermitianTypeInfo(True, PRESERVES, 1, 1)
    return HermitianTypeInfo(True, INTERCHANGES, 1, -1)


def sigma_signs(x: DoubleVoganSuperdiagram, convention: str = XOR) -> dict[int, int]:
    """Sign of sigma on the root vector of each involution-fixed vertex.

    ``xor``: painting and circling each contribute a factor -1.
    ``black-only``: painting contributes -1; circling counts only on black vertices.
    """
    if convention not in CONVENTIONS:
        raise ParameterError(f"unknown sign convention {convention!r}")
    out = {}
    for v in sorted(x.involution.fixed_points()):
        flips = v in x.white_painting
        if v in x.circled and (convention == XOR or v in x.black):
            flips = not flips
        out[v] = -1 if flips else 1
    return out


# equivalence

def _class_key(ad: AffineDiagram, perm, black: int, circled: int, wp: int, ignore_circlings: bool) -> tuple:
    best = None
    for g in ad.automorphism_group:
        p2 = conjugate(g.perm, perm)
        b2 = map_mask(g.perm, black)
        w2 = flip_table(ad, p2, b2).best[map_mask(g.perm, wp)]
        c2 = 0 if ignore_circlings else map_mask(g.perm, circled)
        k = (p2, bits(b2), paint_key(w2), bits(c2))
        if best is None or k < best:
            best = k
    return best


def _from_key(ad: AffineDiagram, k: tuple) -> DoubleVoganSuperdiagram:
    perm, b, (_, w), c = k
    return DoubleVoganSuperdiagram(ad, DiagramMap(perm), frozenset(b), frozenset(c), frozenset(w))


def canonicalize(x: DoubleVoganSuperdiagram, ignore_circlings: bool = False) -> DoubleVoganSuperdiagram:
    k = _class_key(
        x.affine, x.involution.perm, to_mask(x.black), to_mask(x.circled), to_mask(x.white_painting), ignore_circlings
    )
    return _from_key(x.affine, k)


def double_classes(
    ad: AffineDiagram, r: int = 1, almost: bool = False, ignore_circlings: bool = False
) -> list[DoubleVoganSuperdiagram]:
    """Canonical representatives of all (almost-)double classes, sorted by key."""
    _check_r(r)
    keys = set()
    for inv in involutions(ad):
        fixed = sorted(inv.fixed_points())
        circles = [frozenset()] if ignore_circlings else list(_subsets(fixed))
        for black in _black_sets(ad, inv, 2, frozenset((1, 2))):
            probe = DoubleVoganSuperdiagram(ad, inv, black, frozenset())
            if not almost and not is_double(probe, r):
                continue
            bm = to_mask(black)
            table = flip_table(ad, inv.perm, bm)
            reps = sorted(set(table.best.values()))
            for c in circles:
                cm = to_mask(c)
                for w in reps:
                    keys.add(_class_key(ad, inv.perm, bm, cm, w, ignore_circlings))
    return [_from_key(ad, k) for k in sorted(keys)]


# classification

def _a_arcs(ad: AffineDiagram) -> tuple[frozenset[int], frozenset[int]]:
    m = ad.family.m
    ids = range(ad.size)
    eps = frozenset(i for i in ids if i < m)
    dlt = frozenset(i for i in ids if m < i < ad.size - 1)
    return eps, dlt


def _same_arc(ad: AffineDiagram, vs: frozenset[int]) -> bool:
    eps, dlt = _a_arcs(ad)
    return vs <= eps or vs <= dlt


def _classify_a(x: DoubleVoganSuperdiagram) -> str | None:
    ad = x.affine
    greys = ad.ids_of_kind(GREY)
    inv = x.involution
    if x.white_painting:
        return None
    if inv.is_identity:
        if len(x.black) == 2 and not x.circled:
            return "A1" if _same_arc(ad, x.black) else "A8"
        if len(x.circled) == 2 and all(ad.kind(v) == WHITE for v in x.circled) and not _same_arc(ad, x.circled):
            if x.black == x.circled:
                return "A5"
            if len(x.black) == 1 and x.black < x.circled:
                return "A6"
            if not x.black:
                return "A7"
        return None
    fixes_greys = all(inv(g) == g for g in greys)
    if not fixes_greys:
        return "A2" if not x.black and not x.circled else None
    if not x.circled:
        if not x.black:
            return "A3"
        if len(x.black) == 2 and hermitian_split(x) != NOT_APPLICABLE and hermitian_split(x).black_action == INTERCHANGES:
            return "A4"
    return None


def _classify_b(x: DoubleVoganSuperdiagram) -> str | None:
    f = x.affine.family
    if not x.involution.is_identity or x.white_painting or len(x.circled) != 1:
        return None
    (c,) = x.circled
    if not (f.n < c < x.affine.size) or x.affine.kind(c) != WHITE:
        return None
    if x.black == {0}:
        return "B1"
    if x.black == {0, x.affine.size - 1}:
        return "B2"
    return None


def _classify_c(x: DoubleVoganSuperdiagram) -> str | None:
    tail = x.affine.size - 1
    if not x.involution.is_identity or x.white_painting or x.circled != {tail}:
        return None
    if x.black == {tail}:
        return "C1"
    if x.black == {2} and tail != 2:
        return "C2"
    return None


def _classify_d(x: DoubleVoganSuperdiagram) -> str | None:
    ad = x.affine
    if x.white_painting or x.circled:
        return None
    if x.involution.is_identity:
        return "D1" if not x.black else None
    hub = ad.size - 3
    if ad.kind(hub) == WHITE and x.black == {0, hub}:
        return "D2"
    return None


def _classify_d21(x: DoubleVoganSuperdiagram) -> str | None:
    if x.white_painting or x.circled:
        return None
    if x.involution.is_identity:
        if not x.black:
            return "Dα1"
        if x.black == {x.affine.affine_vertex_id}:
            return "Dα2"
        return None
    return "Dα3" if not x.black else None


_F_BLACK = {frozenset({2}): "F1", frozenset({3}): "F2", frozenset({0, 4}): "F3", frozenset({0}): "F4"}
_G_BLACK = {frozenset({3}): "G1", frozenset({0}): "G2"}


def _classify_rep(x: DoubleVoganSuperdiagram) -> str | None:
    tag = x.affine.family.tag
    if tag == "A":
        return _classify_a(x)
    if tag == "B":
        return _classify_b(x)
    if tag == "C":
        return _classify_c(x)
    if tag == "D":
        return _classify_d(x)
    if tag == "D21":
        return _classify_d21(x)
    if tag in ("F4", "G3"):
        if not x.involution.is_identity or x.white_painting or x.circled:
            return None
        return (_F_BLACK if tag == "F4" else _G_BLACK).get(x.black)
    return None


def classify(x: DoubleVoganSuperdiagram, r: int = 1) -> SymmetricSuperpair:
    """Caption of the class of x; UNCLASSIFIED outside the table or when x fails the parity filter."""
    if not is_double(x, r):
        return UNCLASSIFIED
    tag = _classify_rep(canonicalize(x))
    return CAPTIONS[tag] if tag else UNCLASSIFIED


@dataclass(frozen=True)
class PairRow:
    representative: DoubleVoganSuperdiagram
    label: SymmetricSuperpair
    hermitian: object
    black_marks: tuple[int, ...]


@dataclass(frozen=True)
class ClassificationTable:
    family: object
    r: int
    rows: tuple[PairRow, ...]

    def captions(self) -> list[str]:
        seen = []
        for row in self.rows:
            if row.label.is_classified and row.label.caption not in seen:
                seen.append(row.label.caption)
        return seen


def enumerate_pairs(family, r: int = 1, ignore_circlings: bool = False) -> ClassificationTable:
    from .dynkin import affine_diagram

    ad = affine_diagram(family)
    rows = []
    for rep in double_classes(ad, r, ignore_circlings=ignore_circlings):
        tag = _classify_rep(rep)
        label = CAPTIONS[tag] if tag else UNCLASSIFIED
        rows.append(PairRow(rep, label, hermitian_split(rep), rep.black_marks))
    return ClassificationTable(family, r, tuple(rows))
