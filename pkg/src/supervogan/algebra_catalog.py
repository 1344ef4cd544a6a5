"""Distinguished simple systems of the basic classical Lie superalgebras.

Everything here is exact: coordinates and form values are ``Fraction``.
Vertex order follows the usual left-to-right drawing of each diagram.
"""
from __future__ import annotations

import re
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Mapping

from .errors import ParameterError, StructuralError

TAGS = ("A", "B", "B0", "C", "D", "D21", "F4", "G3")

EVEN = "even"
ODD = "odd"


@dataclass(frozen=True)
class FamilyId:
    tag: str
    m: int = 0
    n: int = 0
    alpha: Fraction | None = None
    permissive: bool = False

    def __post_init__(self) -> None:
        if self.alpha is not None and not isinstance(self.alpha, Fraction):
            object.__setattr__(self, "alpha", Fraction(self.alpha))
        validate_family(self)

    def __str__(self) -> str:
        t = self.tag
        if t == "A":
            return f"A({self.m},{self.n})"
        if t in ("B", "B0"):
            return f"B({self.m},{self.n})"
        if t == "C":
            return f"C({self.n})"
        if t == "D":
            return f"D({self.m},{self.n})"
        if t == "D21":
            a = self.alpha
            return f"D(2,1;a={a.numerator}/{a.denominator})"
        if t == "F4":
            return "F(4)"
        return "G(3)"

    @property
    def is_exceptional(self) -> bool:
        return self.tag in ("D21", "F4", "G3")


def validate_family(f: FamilyId) -> None:
    t, m, n = f.tag, f.m, f.n
    if t not in TAGS:
        raise ParameterError(f"unknown family tag {t!r}")
    if t == "A":
        if m < 0 or n < 0:
            raise ParameterError("A(m,n) requires m >= 0 and n >= 0")
        if m == n:
            if not f.permissive:
                raise ParameterError("A(m,n) requires m != n (pass permissive=True for psl(n|n))")
            warnings.warn(f"A({m},{n}) admitted permissively; real-form labels are disabled", stacklevel=3)
    elif t == "B":
        if m < 1 or n < 1:
            raise ParameterError("B(m,n) requires m >= 1 and n >= 1")
    elif t == "B0":
        if m != 0 or n < 1:
            raise ParameterError("B(0,n) requires n >= 1")
    elif t == "C":
        if n < 2:
            raise ParameterError("C(n) requires n >= 2")
    elif t == "D":
        if m < 2 or n < 1:
            raise ParameterError("D(m,n) requires m >= 2 and n >= 1")
    elif t == "D21":
        if f.alpha is None:
            raise ParameterError("D(2,1;alpha) requires alpha")
        if f.alpha in (0, -1):
            raise ParameterError("D(2,1;alpha) requires alpha not in {0, -1}")
    if t != "D21" and f.alpha is not None:
        raise ParameterError("alpha is only meaningful for D(2,1;alpha)")


def A(m: int, n: int, permissive: bool = False) -> FamilyId:
    return FamilyId("A", m, n, permissive=permissive)


def B(m: int, n: int) -> FamilyId:
    return FamilyId("B0" if m == 0 else "B", m, n)


def C(n: int) -> FamilyId:
    return FamilyId("C", 0, n)


def D(m: int, n: int) -> FamilyId:
    return FamilyId("D", m, n)


def D21(alpha=2) -> FamilyId:
    return FamilyId("D21", 2, 1, alpha=Fraction(alpha))


def F4() -> FamilyId:
    return FamilyId("F4", 0, 0)


def G3() -> FamilyId:
    return FamilyId("G3", 0, 0)


_SPEC_RE = re.compile(
    r"^\s*([ABCDFG])\s*\(\s*(\d+)\s*(?:,\s*(\d+)\s*)?(?:;\s*(?:a|alpha)\s*=\s*(-?\d+(?:/\d+)?)\s*)?\)\s*$"
)


def parse_family(spec: str, permissive: bool = False) -> FamilyId:
    """Parse ``NAME "(" int ["," int] [";a=" rational] ")"``."""
    mt = _SPEC_RE.match(spec)
    if not mt:
        raise ParameterError(f"cannot parse family spec {spec!r}")
    name, a, b, alpha = mt.groups()
    a = int(a)
    b = int(b) if b is not None else None
    if alpha is not None:
        if (name, a, b) != ("D", 2, 1):
            raise ParameterError("';a=' is only valid as D(2,1;a=p/q)")
        return D21(Fraction(alpha))
    if name == "A" and b is not None:
        return A(a, b, permissive=permissive)
    if name == "B" and b is not None:
        return B(a, b)
    if name == "C" and b is None:
        return C(a)
    if name == "D" and b is not None:
        return D(a, b)
    if name == "F" and b is None and a == 4:
        return F4()
    if name == "G" and b is None and a == 3:
        return G3()
    raise ParameterError(f"unsupported family spec {spec!r}")


# --- roots and forms ---------------------------------------------------------


@dataclass(frozen=True)
class Root:
    """Weight vector in the e/d basis; ``coords`` holds only nonzero entries."""

    coords: tuple[tuple[str, Fraction], ...]
    parity: str
    isotropic: bool = False

    @staticmethod
    def make(coords: Mapping[str, object], parity: str, isotropic: bool = False) -> "Root":
        items = tuple(sorted((k, Fraction(v)) for k, v in coords.items() if Fraction(v) != 0))
        return Root(items, parity, isotropic)

    def as_dict(self) -> dict[str, Fraction]:
        return dict(self.coords)

    def __neg__(self) -> "Root":
        return Root(tuple((k, -v) for k, v in self.coords), self.parity, self.isotropic)

    def __str__(self) -> str:
        if not self.coords:
            return "0"
        parts = []
        for k, v in self.coords:
            if v == 1:
                parts.append(f"+{k}")
            elif v == -1:
                parts.append(f"-{k}")
            else:
                parts.append(f"{'+' if v > 0 else '-'}{abs(v)}{k}")
        s = "".join(parts)
        return s[1:] if s.startswith("+") else s


@dataclass(frozen=True)
class BilinearForm:
    basis: tuple[str, ...]
    gram: tuple[tuple[Fraction, ...], ...]

    @staticmethod
    def diagonal(basis: Iterable[str], diag: Iterable[object]) -> "BilinearForm":
        basis = tuple(basis)
        diag = [Fraction(d) for d in diag]
        k = len(basis)
        gram = tuple(tuple(diag[i] if i == j else Fraction(0) for j in range(k)) for i in range(k))
        return BilinearForm(basis, gram)

    def index(self, sym: str) -> int:
        try:
            return self.basis.index(sym)
        except ValueError:
            raise StructuralError(f"basis symbol {sym!r} not in form basis {self.basis}") from None


def inner(a: Root, b: Root, form: BilinearForm) -> Fraction:
    ia = [(form.index(k), v) for k, v in a.coords]
    ib = [(form.index(k), v) for k, v in b.coords]
    total = Fraction(0)
    for i, x in ia:
        row = form.gram[i]
        for j, y in ib:
            g = row[j]
            if g:
                total += x * y * g
    return total


def vector(r: Root, basis: tuple[str, ...]) -> tuple[Fraction, ...]:
    d = r.as_dict()
    extra = set(d) - set(basis)
    if extra:
        raise StructuralError(f"root uses symbols {sorted(extra)} outside basis")
    return tuple(d.get(s, Fraction(0)) for s in basis)


def _eps(i: int) -> str:
    return f"e{i}"


def _dlt(j: int) -> str:
    return f"d{j}"


def family_form(f: FamilyId) -> BilinearForm:
    """(e_i,e_j) = delta_ij and (d_i,d_j) = -delta_ij, except for the exceptional Gram matrices."""
    t = f.tag
    if t == "A":
        return BilinearForm.diagonal(
            [_eps(i) for i in range(1, f.m + 2)] + [_dlt(j) for j in range(1, f.n + 2)],
            [1] * (f.m + 1) + [-1] * (f.n + 1),
        )
    if t in ("B", "B0", "D"):
        return BilinearForm.diagonal(
            [_eps(i) for i in range(1, f.m + 1)] + [_dlt(j) for j in range(1, f.n + 1)],
            [1] * f.m + [-1] * f.n,
        )
    if t == "C":
        return BilinearForm.diagonal(["e1"] + [_dlt(j) for j in range(1, f.n)], [1] + [-1] * (f.n - 1))
    if t == "D21":
        a = f.alpha
        return BilinearForm.diagonal(["e1", "e2", "e3"], [-(1 + a) / 2, Fraction(1, 2), a / 2])
    if t == "F4":
        return BilinearForm.diagonal(["e1", "e2", "e3", "d"], [1, 1, 1, -3])
    # G(3): e3 = -e1 - e2 eliminated, (e_i, e_j) = 1 - 3 delta_ij
    g = Fraction
    return BilinearForm(
        ("e1", "e2", "d"),
        ((g(-2), g(1), g(0)), (g(1), g(-2), g(0)), (g(0), g(0), g(2))),
    )


def _root(form: BilinearForm, coords: Mapping[str, object], parity: str) -> Root:
    r = Root.make(coords, parity)
    iso = inner(r, r, form) == 0
    if iso and parity == EVEN:
        raise StructuralError(f"even root {r} is isotropic")
    return Root(r.coords, parity, iso)


# --- simple systems ----------------------------------------------------------


@dataclass(frozen=True)
class SimpleSystem:
    family: FamilyId
    form: BilinearForm
    simple_roots: tuple[Root, ...]
    cartan: tuple[tuple[Fraction, ...], ...]
    symmetrizer: tuple[Fraction, ...]
    coweights_even: Mapping[int, tuple[Fraction, ...]] = field(compare=False)

    @property
    def rank(self) -> int:
        return len(self.simple_roots)

    def even_indices(self) -> list[int]:
        return [i for i, r in enumerate(self.simple_roots) if r.parity == EVEN]


def cartan_matrix(roots: tuple[Root, ...], form: BilinearForm):
    """Return (cartan, symmetrizer) with ``symmetrizer[i] * cartan[i][j] == (a_i, a_j)``."""
    k = len(roots)
    gram = [[inner(roots[i], roots[j], form) for j in range(k)] for i in range(k)]
    rows = []
    sym = []
    for i in range(k):
        d = gram[i][i]
        if d != 0:
            scale = 2 / d
        else:
            first = next((gram[i][j] for j in range(k) if j != i and gram[i][j] != 0), Fraction(1))
            scale = 1 / abs(first)
        rows.append(tuple(scale * x for x in gram[i]))
        sym.append(1 / scale)
    return tuple(rows), tuple(sym)


def _solve(mat: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    from .linalg import solve

    return solve(mat, rhs)


def _simple_coords(f: FamilyId) -> list[tuple[dict, str]]:
    t, m, n = f.tag, f.m, f.n
    out: list[tuple[dict, str]] = []
    if t == "A":
        for i in range(1, m + 1):
            out.append(({_eps(i): 1, _eps(i + 1): -1}, EVEN))
        out.append(({_eps(m + 1): 1, _dlt(1): -1}, ODD))
        for j in range(1, n + 1):
            out.append(({_dlt(j): 1, _dlt(j + 1): -1}, EVEN))
    elif t in ("B", "D"):
        for j in range(1, n):
            out.append(({_dlt(j): 1, _dlt(j + 1): -1}, EVEN))
        out.append(({_dlt(n): 1, _eps(1): -1}, ODD))
        for i in range(1, m):
            out.append(({_eps(i): 1, _eps(i + 1): -1}, EVEN))
        if t == "B":
            out.append(({_eps(m): 1}, EVEN))
        else:
            out.append(({_eps(m - 1): 1, _eps(m): 1}, EVEN))
    elif t == "B0":
        for j in range(1, n):
            out.append(({_dlt(j): 1, _dlt(j + 1): -1}, EVEN))
        out.append(({_dlt(n): 1}, ODD))
    elif t == "C":
        out.append(({"e1": 1, "d1": -1}, ODD))
        for j in range(1, n - 1):
            out.append(({_dlt(j): 1, _dlt(j + 1): -1}, EVEN))
        out.append(({_dlt(n - 1): 2}, EVEN))
    elif t == "D21":
        out = [({"e2": -2}, EVEN), ({"e1": 1, "e2": 1, "e3": 1}, ODD), ({"e3": -2}, EVEN)]
    elif t == "F4":
        h = Fraction(1, 2)
        out = [
            ({"d": h, "e1": -h, "e2": -h, "e3": -h}, ODD),
            ({"e3": 1}, EVEN),
            ({"e2": 1, "e3": -1}, EVEN),
            ({"e1": 1, "e2": -1}, EVEN),
        ]
    else:  # G3: d + e3, e1, e2 - e1 with e3 = -e1 - e2
        out = [({"d": 1, "e1": -1, "e2": -1}, ODD), ({"e1": 1}, EVEN), ({"e2": 1, "e1": -1}, EVEN)]
    return out


def build_simple_system(family: FamilyId) -> SimpleSystem:
    form = family_form(family)
    roots = tuple(_root(form, c, p) for c, p in _simple_coords(family))
    cartan, sym = cartan_matrix(roots, form)
    k = len(roots)
    gram = [[inner(roots[i], roots[j], form) for j in range(k)] for i in range(k)]
    coweights = {}
    for j in range(k):
        if roots[j].parity != EVEN:
            continue
        rhs = [Fraction(1) / sym[j] if kk == j else Fraction(0) for kk in range(k)]
        # omega_j = sum_i c_i alpha_i with (omega_j, alpha_k) = delta_jk / eps_kk
        try:
            coweights[j] = tuple(_solve(gram, rhs))
        except ArithmeticError:
            # degenerate form on the simple roots (psl(n|n))
            continue
    return SimpleSystem(family, form, roots, cartan, sym, coweights)


def coweight_pairing(s: SimpleSystem, j: int, k: int) -> Fraction:
    """<omega_j, alpha_k> with omega_j expanded over the simple roots."""
    c = s.coweights_even[j]
    return sum((c[i] * inner(s.simple_roots[i], s.simple_roots[k], s.form) for i in range(s.rank)), Fraction(0))


# --- full root sets ----------------------------------------------------------


def full_root_set(family: FamilyId) -> tuple[list[Root], list[Root]]:
    """Closed-form even and odd roots; each list sorted and duplicate free."""
    form = family_form(family)
    t, m, n = family.tag, family.m, family.n
    even: list[dict] = []
    odd: list[dict] = []

    def pm_pairs(syms: list[str], signs_both: bool = True):
        for a, b in combinations(syms, 2):
            for s1, s2 in product((1, -1), repeat=2):
                if not signs_both and s1 == s2:
                    continue
                yield {a: s1, b: s2}

    if t == "A":
        es = [_eps(i) for i in range(1, m + 2)]
        ds = [_dlt(j) for j in range(1, n + 2)]
        even += list(pm_pairs(es, signs_both=False)) + list(pm_pairs(ds, signs_both=False))
        odd += [{e: s, d: -s} for e in es for d in ds for s in (1, -1)]
    elif t in ("B", "B0", "D"):
        es = [_eps(i) for i in range(1, m + 1)]
        ds = [_dlt(j) for j in range(1, n + 1)]
        even += list(pm_pairs(es)) + list(pm_pairs(ds)) + [{d: 2 * s} for d in ds for s in (1, -1)]
        odd += [{e: s1, d: s2} for e in es for d in ds for s1 in (1, -1) for s2 in (1, -1)]
        if t in ("B", "B0"):
            even += [{e: s} for e in es for s in (1, -1)]
            odd += [{d: s} for d in ds for s in (1, -1)]
    elif t == "C":
        ds = [_dlt(j) for j in range(1, n)]
        even += list(pm_pairs(ds)) + [{d: 2 * s} for d in ds for s in (1, -1)]
        odd += [{"e1": s1, d: s2} for d in ds for s1 in (1, -1) for s2 in (1, -1)]
    elif t == "D21":
        even += [{e: 2 * s} for e in ("e1", "e2", "e3") for s in (1, -1)]
        odd += [{"e1": a, "e2": b, "e3": c} for a, b, c in product((1, -1), repeat=3)]
    elif t == "F4":
        es = ["e1", "e2", "e3"]
        even += list(pm_pairs(es)) + [{e: s} for e in es for s in (1, -1)] + [{"d": 1}, {"d": -1}]
        h = Fraction(1, 2)
        odd += [
            {"e1": a * h, "e2": b * h, "e3": c * h, "d": e * h} for a, b, c, e in product((1, -1), repeat=4)
        ]
    else:
        g2_short = [{"e1": 1}, {"e2": 1}, {"e1": -1, "e2": -1}]
        g2_long = [{"e1": 1, "e2": -1}, {"e1": 2, "e2": 1}, {"e1": 1, "e2": 2}]
        for r in g2_short + g2_long:
            even.append(r)
            even.append({k: -v for k, v in r.items()})
        even += [{"d": 2}, {"d": -2}]
        for r in g2_short:
            for s in (1, -1):
                for sd in (1, -1):
                    odd.append({**{k: s * v for k, v in r.items()}, "d": sd})
        odd += [{"d": 1}, {"d": -1}]

    ev = sorted({_root(form, c, EVEN) for c in even}, key=lambda r: r.coords)
    od = sorted({_root(form, c, ODD) for c in odd}, key=lambda r: r.coords)
    return ev, od


def lowest_root(family: FamilyId) -> Root:
    """Negative of the highest root of the distinguished positive system."""
    form = family_form(family)
    t, m, n = family.tag, family.m, family.n
    if t == "A":
        c, p = {_dlt(n + 1): 1, _eps(1): -1}, ODD
    elif t in ("B", "B0", "D"):
        c, p = {_dlt(1): -2}, EVEN
    elif t == "C":
        c, p = {"e1": -1, "d1": -1}, ODD
    elif t == "D21":
        c, p = {"e1": -2}, EVEN
    elif t == "F4":
        c, p = {"d": -1}, EVEN
    else:
        c, p = {"d": -2}, EVEN
    return _root(form, c, p)


def affine_position(family: FamilyId) -> int:
    """Index at which the lowest root is drawn in the affine diagram."""
    if family.tag in ("A", "D21"):
        return len(_simple_coords(family))
    return 0


@dataclass(frozen=True)
class FamilyInfo:
    name: str
    spec: str
    algebra: str
    rule: str


FAMILY_INFO: tuple[FamilyInfo, ...] = (
    FamilyInfo("A", "A(m,n)", "sl(m+1|n+1)", "m, n >= 0, m != n (A(n,n) only with --permissive)"),
    FamilyInfo("B", "B(m,n)", "osp(2m+1|2n)", "m >= 1, n >= 1"),
    FamilyInfo("B0", "B(0,n)", "osp(1|2n)", "n >= 1"),
    FamilyInfo("C", "C(n)", "osp(2|2n-2)", "n >= 2"),
    FamilyInfo("D", "D(m,n)", "osp(2m|2n)", "m >= 2, n >= 1"),
    FamilyInfo("D21", "D(2,1;a=p/q)", "D(2,1;alpha)", "alpha rational, alpha not in {0, -1}"),
    FamilyInfo("F4", "F(4)", "F(4)", "no parameters"),
    FamilyInfo("G3", "G(3)", "G(3)", "no parameters"),
)
