"""Dynkin and affine Dynkin diagrams, marks, and diagram automorphisms."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Iterable

from . import kernels
from .algebra_catalog import (
    EVEN,
    BilinearForm,
    FamilyId,
    Root,
    SimpleSystem,
    affine_position,
    build_simple_system,
    cartan_matrix,
    inner,
    lowest_root,
    vector,
)
from .errors import DegeneracyError, StructuralError
from .linalg import kernel, primitive

WHITE = "white"
GREY = "grey"
ODD_NONISO = "odd_nonisotropic"
KINDS = (WHITE, GREY, ODD_NONISO)

NO_ARROW = "none"
TOWARD_FIRST = "toward-first"
TOWARD_SECOND = "toward-second"


@dataclass(frozen=True)
class Vertex:
    id: int
    kind: str
    mark: int | None = None


@dataclass(frozen=True)
class Edge:
    a: int
    b: int
    bond: int
    arrow: str = NO_ARROW

    def __post_init__(self) -> None:
        if self.a >= self.b:
            raise StructuralError(f"edge endpoints must be ordered, got ({self.a}, {self.b})")


@dataclass(frozen=True)
class DiagramMap:
    perm: tuple[int, ...]

    @staticmethod
    def identity(n: int) -> "DiagramMap":
        return DiagramMap(tuple(range(n)))

    def __call__(self, i: int) -> int:
        return self.perm[i]

    def compose(self, other: "DiagramMap") -> "DiagramMap":
        """self after other."""
        return DiagramMap(tuple(self.perm[j] for j in other.perm))

    def inverse(self) -> "DiagramMap":
        inv = [0] * len(self.perm)
        for i, j in enumerate(self.perm):
            inv[j] = i
        return DiagramMap(tuple(inv))

    @property
    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.perm))

    @property
    def is_involution(self) -> bool:
        return all(self.perm[j] == i for i, j in enumerate(self.perm))

    def fixed_points(self) -> frozenset[int]:
        return frozenset(i for i, j in enumerate(self.perm) if i == j)

    def apply(self, ids: Iterable[int]) -> frozenset[int]:
        return frozenset(self.perm[i] for i in ids)

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for i in range(len(self.perm)):
            if i in seen:
                continue
            cyc = [i]
            seen.add(i)
            j = self.perm[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self.perm[j]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out


@dataclass(frozen=True)
class DynkinDiagram:
    family: FamilyId
    form: BilinearForm
    roots: tuple[Root, ...]
    cartan: tuple[tuple[Fraction, ...], ...]
    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def is_affine(self) -> bool:
        return False

    def kind(self, i: int) -> str:
        return self.vertices[i].kind

    def ids_of_kind(self, kind: str) -> list[int]:
        return [v.id for v in self.vertices if v.kind == kind]

    def neighbors(self, i: int) -> list[int]:
        out = []
        for e in self.edges:
            if e.a == i:
                out.append(e.b)
            elif e.b == i:
                out.append(e.a)
        return sorted(out)

    def edge(self, i: int, j: int) -> Edge | None:
        a, b = min(i, j), max(i, j)
        for e in self.edges:
            if e.a == a and e.b == b:
                return e
        return None

    @cached_property
    def automorphism_group(self) -> tuple[DiagramMap, ...]:
        return tuple(automorphisms(self))


@dataclass(frozen=True)
class AffineDiagram(DynkinDiagram):
    affine_vertex_id: int
    marks: tuple[int, ...]

    @property
    def is_affine(self) -> bool:
        return True

    def finite_to_affine(self, i: int) -> int:
        """Affine id of finite vertex i."""
        return i if i < self.affine_vertex_id else i + 1

    def affine_to_finite(self, i: int) -> int | None:
        if i == self.affine_vertex_id:
            return None
        return i if i < self.affine_vertex_id else i - 1


def _kind_of(r: Root) -> str:
    if r.parity == EVEN:
        return WHITE
    return GREY if r.isotropic else ODD_NONISO


def _integral(x: Fraction) -> int | None:
    return int(x) if x.denominator == 1 else None


def _edges(roots: tuple[Root, ...], form: BilinearForm, cartan) -> tuple[Edge, ...]:
    k = len(roots)
    kinds = [_kind_of(r) for r in roots]
    gram = [[inner(roots[i], roots[j], form) for j in range(k)] for i in range(k)]
    out = []
    for i in range(k):
        for j in range(i + 1, k):
            if gram[i][j] == 0:
                continue
            gi, gj = kinds[i] == GREY, kinds[j] == GREY
            arrow = NO_ARROW
            if gi and gj:
                row_min = min(abs(gram[i][t]) for t in range(k) if t != i and gram[i][t] != 0)
                bond = _integral(abs(gram[i][j]) / row_min) or 1
            elif gi or gj:
                w, g = (j, i) if gi else (i, j)
                bond = _integral(abs(cartan[w][g])) or 1
                if bond > 1:
                    arrow = TOWARD_FIRST if w == i else TOWARD_SECOND
            else:
                aij, aji = abs(cartan[i][j]), abs(cartan[j][i])
                bond = int(aij * aji)
                if aij > aji:
                    arrow = TOWARD_FIRST
                elif aji > aij:
                    arrow = TOWARD_SECOND
            out.append(Edge(i, j, bond, arrow))
    return tuple(out)


def diagram_of(s: SimpleSystem) -> DynkinDiagram:
    verts = tuple(Vertex(i, _kind_of(r)) for i, r in enumerate(s.simple_roots))
    return DynkinDiagram(s.family, s.form, s.simple_roots, s.cartan, verts, _edges(s.simple_roots, s.form, s.cartan))


def marks_from_roots(roots: tuple[Root, ...], basis: tuple[str, ...]) -> tuple[int, ...]:
    """Primitive positive integer a with sum a_i * roots[i] == 0."""
    cols = [vector(r, basis) for r in roots]
    mat = [[cols[j][i] for j in range(len(roots))] for i in range(len(basis))]
    ker = kernel(mat, len(roots))
    if len(ker) != 1:
        raise DegeneracyError(f"mark kernel has dimension {len(ker)}, expected 1")
    v = primitive(ker[0])
    if v[0] < 0:
        v = [-x for x in v]
    if any(x <= 0 for x in v):
        raise DegeneracyError(f"mark vector {v} is not strictly positive")
    return tuple(v)


def compute_marks(ad: AffineDiagram) -> tuple[int, ...]:
    return marks_from_roots(ad.roots, ad.form.basis)


def affine_extension(d: DynkinDiagram, low: Root) -> AffineDiagram:
    if low != lowest_root(d.family):
        raise StructuralError(f"{low} is not the lowest root of {d.family}")
    pos = affine_position(d.family)
    roots = d.roots[:pos] + (low,) + d.roots[pos:]
    cartan, _ = cartan_matrix(roots, d.form)
    marks = marks_from_roots(roots, d.form.basis)
    verts = tuple(Vertex(i, _kind_of(r), marks[i]) for i, r in enumerate(roots))
    return AffineDiagram(d.family, d.form, roots, cartan, verts, _edges(roots, d.form, cartan), pos, marks)


def finite_diagram(family: FamilyId) -> DynkinDiagram:
    return diagram_of(build_simple_system(family))


def affine_diagram(family: FamilyId) -> AffineDiagram:
    return affine_extension(finite_diagram(family), lowest_root(family))


def _edge_codes(d: DynkinDiagram) -> list[list[int]]:
    n = d.size
    codes = [[0] * n for _ in range(n)]
    for e in d.edges:
        to_b = 1 if e.arrow == TOWARD_SECOND else 0
        to_a = 1 if e.arrow == TOWARD_FIRST else 0
        codes[e.a][e.b] = e.bond * 4 + (1 if to_b else 2 if to_a else 0)
        codes[e.b][e.a] = e.bond * 4 + (1 if to_a else 2 if to_b else 0)
    return codes


def _labels(d: DynkinDiagram) -> list[int]:
    return [KINDS.index(v.kind) + 3 * (v.mark or 0) for v in d.vertices]


def _cartan_compatible(d: DynkinDiagram, p: tuple[int, ...]) -> bool:
    """Cartan preserved exactly on non-grey rows and up to a scalar on grey rows."""
    c = d.cartan
    n = d.size
    for i in range(n):
        row = c[i]
        img = [c[p[i]][p[j]] for j in range(n)]
        if d.vertices[i].kind != GREY:
            if list(row) != img:
                return False
            continue
        ratio = None
        for j in range(n):
            if row[j] == 0 or img[j] == 0:
                if row[j] != img[j]:
                    return False
                continue
            r = img[j] / row[j]
            if ratio is None:
                ratio = r
            elif r != ratio:
                return False
    return True


def automorphisms(d: DynkinDiagram) -> list[DiagramMap]:
    """Kind-, mark-, bond- and arrow-preserving vertex permutations compatible with the Cartan data."""
    perms = kernels.graph_automorphisms(_labels(d), _edge_codes(d))
    return [DiagramMap(p) for p in perms if _cartan_compatible(d, p)]


def involutions(d: DynkinDiagram) -> list[DiagramMap]:
    return [g for g in d.automorphism_group if g.is_involution]


def check_marks_relation(ad: AffineDiagram, marks: Iterable[int] | None = None) -> bool:
    marks = tuple(ad.marks if marks is None else marks)
    total = {s: Fraction(0) for s in ad.form.basis}
    for a, r in zip(marks, ad.roots):
        for k, v in r.coords:
            total[k] += a * v
    g = 0
    for a in marks:
        g = gcd(g, a)
    return all(v == 0 for v in total.values()) and all(a >= 1 for a in marks) and g == 1
