"""Independent checks: the gl(m|n) supermatrix model, mark relations from full root sets,
and a brute-force count of commuting involution pairs on sl(m|n).

Automorphisms in the pair search are monomial on the E_ij basis: every basis
vector goes to i**k times another basis vector.  Candidates are Ad(D) for
diagonal D with entries powers of i, optionally composed with the twist
X -> -P X^st P^-1 (P reverses each block).  Classes are taken up to
conjugation by the same diagonal matrices and by block-preserving basis
permutations; the resulting count is an upper bound for conjugacy under the
full inner automorphism group.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from math import gcd
from typing import Iterable, Sequence

from .algebra_catalog import FamilyId, Root, full_root_set, lowest_root, build_simple_system, vector
from .dynkin import GREY, AffineDiagram
from .errors import ParameterError, SizeBoundError
from .linalg import coordinates

MAX_MODEL = 5
MAX_PAIRS = 3
CONJUGATION_GROUP = "diagonal i-power matrices x block-preserving permutations"


# supermatrices

@dataclass(frozen=True)
class SuperMatrix:
    m: int
    n: int
    entries: tuple[tuple[Fraction, ...], ...]

    @staticmethod
    def zero(m: int, n: int) -> "SuperMatrix":
        k = m + n
        return SuperMatrix(m, n, tuple((Fraction(0),) * k for _ in range(k)))

    @staticmethod
    def unit(m: int, n: int, i: int, j: int, c=1) -> "SuperMatrix":
        k = m + n
        rows = [[Fraction(0)] * k for _ in range(k)]
        rows[i][j] = Fraction(c)
        return SuperMatrix(m, n, tuple(tuple(r) for r in rows))

    @staticmethod
    def from_rows(m: int, n: int, rows: Sequence[Sequence]) -> "SuperMatrix":
        return SuperMatrix(m, n, tuple(tuple(Fraction(x) for x in r) for r in rows))

    @property
    def size(self) -> int:
        return self.m + self.n

    def _odd_slot(self, i: int, j: int) -> bool:
        return (i < self.m) != (j < self.m)

    @property
    def parity(self) -> int | None:
        """0 even, 1 odd, None if inhomogeneous; the zero matrix counts as even."""
        has_even = has_odd = False
        for i, row in enumerate(self.entries):
            for j, x in enumerate(row):
                if x:
                    if self._odd_slot(i, j):
                        has_odd = True
                    else:
                        has_even = True
        if has_even and has_odd:
            return None
        return 1 if has_odd else 0

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def _zip(self, other: "SuperMatrix", op) -> "SuperMatrix":
        if (self.m, self.n) != (other.m, other.n):
            raise ParameterError("supermatrix shapes differ")
        return SuperMatrix(
            self.m, self.n, tuple(tuple(op(a, b) for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries))
        )

    def __add__(self, other: "SuperMatrix") -> "SuperMatrix":
        return self._zip(other, lambda a, b: a + b)

    def __sub__(self, other: "SuperMatrix") -> "SuperMatrix":
        return self._zip(other, lambda a, b: a - b)

    def scale(self, c) -> "SuperMatrix":
        c = Fraction(c)
        return SuperMatrix(self.m, self.n, tuple(tuple(c * x for x in r) for r in self.entries))

    def __matmul__(self, other: "SuperMatrix") -> "SuperMatrix":
        k = self.size
        cols = list(zip(*other.entries))
        return SuperMatrix(
            self.m, self.n, tuple(tuple(sum((a * b for a, b in zip(self.entries[i], cols[j])), Fraction(0)) for j in range(k)) for i in range(k))
        )

    def supertrace(self) -> Fraction:
        return sum((self.entries[i][i] for i in range(self.m)), Fraction(0)) - sum(
            (self.entries[i][i] for i in range(self.m, self.size)), Fraction(0)
        )

    def supertranspose(self) -> "SuperMatrix":
        k = self.size
        rows = [[Fraction(0)] * k for _ in range(k)]
        for i in range(k):
            for j in range(k):
                x = self.entries[i][j]
                # [[A, B], [C, D]] -> [[A^t, C^t], [-B^t, D^t]]
                rows[j][i] = -x if (i < self.m and j >= self.m) else x
        return SuperMatrix(self.m, self.n, tuple(tuple(r) for r in rows))


def supercommutator(x: SuperMatrix, y: SuperMatrix) -> SuperMatrix:
    px, py = x.parity, y.parity
    if px is None or py is None:
        raise ParameterError("supercommutator needs homogeneous arguments")
    xy, yx = x @ y, y @ x
    return xy + yx if px and py else xy - yx


@dataclass(frozen=True)
class BasisElement:
    label: str
    i: int
    j: int
    matrix: SuperMatrix
    parity: int
    root: Root | None


def _weight_symbol(m: int, k: int) -> str:
    return f"e{k + 1}" if k < m else f"d{k - m + 1}"


def gl_model(m: int, n: int) -> list[BasisElement]:
    """E_ij basis of gl(m|n); off-diagonal units carry their root e_i - e_j in eps/delta symbols."""
    if m < 0 or n < 0 or m + n == 0:
        raise ParameterError(f"gl({m}|{n}) needs nonnegative sizes with m + n > 0")
    if m + n > MAX_MODEL:
        raise SizeBoundError(f"gl({m}|{n}) exceeds the model bound m + n <= {MAX_MODEL}")
    out = []
    for i in range(m + n):
        for j in range(m + n):
            odd = int((i < m) != (j < m))
            root = None
            if i != j:
                root = Root.make({_weight_symbol(m, i): 1, _weight_symbol(m, j): -1}, "odd" if odd else "even")
            out.append(BasisElement(f"E{i + 1}{j + 1}", i, j, SuperMatrix.unit(m, n, i, j), odd, root))
    return out


def root_value(root: Root, h: Sequence, m: int) -> Fraction:
    """alpha(H) for H = diag(h)."""
    total = Fraction(0)
    for sym, c in root.coords:
        k = int(sym[1:]) - 1 + (m if sym[0] == "d" else 0)
        total += c * Fraction(h[k])
    return total


# mark relation

def _find(root: Root, pool: Iterable[Root]) -> Root | None:
    for r in pool:
        if r.coords == root.coords:
            return r
    return None


def highest_root(family: FamilyId) -> Root:
    """Root of maximal height, heights read from exact simple-root coordinates."""
    s = build_simple_system(family)
    basis = s.form.basis
    cols = [vector(r, basis) for r in s.simple_roots]
    mat = [[cols[j][i] for j in range(len(cols))] for i in range(len(basis))]
    even, odd = full_root_set(family)
    best, best_h = None, None
    for r in even + odd:
        c = coordinates(mat, list(vector(r, basis)))
        if c is not None and all(x >= 0 for x in c):
            h = sum(c)
            if best_h is None or h > best_h:
                best, best_h = r, h
    return best


def check_kernel(ad: AffineDiagram, marks: Sequence[int] | None = None) -> bool:
    """Affine roots lie in the full root set, the lowest root is minus the highest,
    and the marks are positive, coprime and annihilate the roots."""
    marks = tuple(ad.marks if marks is None else marks)
    if len(marks) != ad.size or any(a <= 0 for a in marks):
        return False
    g = 0
    for a in marks:
        g = gcd(g, a)
    if g != 1:
        return False
    even, odd = full_root_set(ad.family)
    pool = even + odd
    found = []
    for r in ad.roots:
        hit = _find(r, pool)
        if hit is None:
            return False
        found.append(hit)
    low = found[ad.affine_vertex_id]
    if low.coords != (-highest_root(ad.family)).coords or low.coords != lowest_root(ad.family).coords:
        return False
    total: dict[str, Fraction] = {}
    for a, r in zip(marks, found):
        for sym, c in r.coords:
            total[sym] = total.get(sym, Fraction(0)) + a * c
    return all(v == 0 for v in total.values())


# monomial automorphisms

@dataclass(frozen=True)
class MonomialMap:
    """E_ij -> i**phase[(i,j)] * E_target[(i,j)], stored in row-major basis order."""

    m: int
    n: int
    target: tuple[tuple[int, int], ...]
    phase: tuple[int, ...]

    @property
    def size(self) -> int:
        return self.m + self.n

    def _index(self, ij: tuple[int, int]) -> int:
        return ij[0] * self.size + ij[1]

    def image(self, i: int, j: int) -> tuple[int, tuple[int, int]]:
        k = i * self.size + j
        return self.phase[k], self.target[k]

    def compose(self, other: "MonomialMap") -> "MonomialMap":
        """self after other."""
        tg, ph = [], []
        for k in range(len(other.target)):
            p1, t1 = other.phase[k], other.target[k]
            p2, t2 = self.image(*t1)
            tg.append(t2)
            ph.append((p1 + p2) % 4)
        return MonomialMap(self.m, self.n, tuple(tg), tuple(ph))

    def inverse(self) -> "MonomialMap":
        k = len(self.target)
        tg = [None] * k
        ph = [0] * k
        for idx in range(k):
            src = divmod(idx, self.size)
            dst = self._index(self.target[idx])
            tg[dst] = src
            ph[dst] = (-self.phase[idx]) % 4
        return MonomialMap(self.m, self.n, tuple(tg), tuple(ph))

    def is_identity(self) -> bool:
        return all(p == 0 for p in self.phase) and all(
            t == divmod(k, self.size) for k, t in enumerate(self.target)
        )

    def is_odd_slot(self, i: int, j: int) -> bool:
        return (i < self.m) != (j < self.m)

    def square_type(self) -> str | None:
        """'id', 'parity', or None when the square is neither."""
        sq = self.compose(self)
        if any(t != divmod(k, self.size) for k, t in enumerate(sq.target)):
            return None
        even_ph = {sq.phase[k] for k in range(len(sq.phase)) if not self.is_odd_slot(*divmod(k, self.size))}
        odd_ph = {sq.phase[k] for k in range(len(sq.phase)) if self.is_odd_slot(*divmod(k, self.size))}
        if even_ph - {0}:
            return None
        if odd_ph <= {0}:
            return "id"
        if odd_ph == {2}:
            return "parity"
        return None

    def apply(self, x: SuperMatrix) -> SuperMatrix:
        """Action on a supermatrix with real entries; only valid when all phases are even."""
        if any(p % 2 for p in self.phase):
            raise ParameterError("matrix action needs real phases")
        k = self.size
        rows = [[Fraction(0)] * k for _ in range(k)]
        for i in range(k):
            for j in range(k):
                c = x.entries[i][j]
                if c:
                    p, (a, b) = self.image(i, j)
                    rows[a][b] += c if p == 0 else -c
        return SuperMatrix(x.m, x.n, tuple(tuple(r) for r in rows))

    def _cycles(self, keys):
        seen = set()
        out = []
        for k in keys:
            if k in seen:
                continue
            total = 0
            cur = k
            while True:
                seen.add(cur)
                p, t = self.image(*cur)
                total += p
                cur = t
                if cur == k:
                    break
            out.append(total % 4)
        return out

    def fixed_dims(self) -> tuple[int, int]:
        """Dimensions of the fixed subspace on the even and odd parts of sl(m|n)."""
        k = self.size
        offdiag_even = [(i, j) for i in range(k) for j in range(k) if i != j and not self.is_odd_slot(i, j)]
        odd = [(i, j) for i in range(k) for j in range(k) if self.is_odd_slot(i, j)]
        diag = [(i, i) for i in range(k)]
        ev = sum(1 for t in self._cycles(offdiag_even) if t == 0)
        od = sum(1 for t in self._cycles(odd) if t == 0)
        cart = sum(1 for t in self._cycles(diag) if t == 0)
        fixes_identity = all(self.phase[self._index(d)] == 0 for d in diag)
        return ev + cart - (1 if fixes_identity else 0), od


def diagonal_map(m: int, n: int, e: Sequence[int]) -> MonomialMap:
    k = m + n
    tg, ph = [], []
    for i in range(k):
        for j in range(k):
            tg.append((i, j))
            ph.append((e[i] - e[j]) % 4)
    return MonomialMap(m, n, tuple(tg), tuple(ph))


def _block_reverse(m: int, n: int) -> list[int]:
    return list(range(m - 1, -1, -1)) + list(range(m + n - 1, m - 1, -1))


def twist_map(m: int, n: int) -> MonomialMap:
    """X -> -P X^st P^-1 with P reversing each block."""
    k = m + n
    p = _block_reverse(m, n)
    tg, ph = [], []
    for i in range(k):
        for j in range(k):
            ie, je = i < m, j < m
            # -st(E_ij): -E_ji on diagonal blocks, +E_ji from the upper-right block, -E_ji from the lower-left
            sign = 0 if (ie and not je) else 2
            tg.append((p[j], p[i]))
            ph.append(sign)
    return MonomialMap(m, n, tuple(tg), tuple(ph))


def permutation_map(m: int, n: int, q: Sequence[int]) -> MonomialMap:
    k = m + n
    tg, ph = [], []
    for i in range(k):
        for j in range(k):
            tg.append((q[i], q[j]))
            ph.append(0)
    return MonomialMap(m, n, tuple(tg), tuple(ph))


@dataclass(frozen=True)
class InvolutionCandidate:
    exponents: tuple[int, ...]
    twisted: bool
    map: MonomialMap

    @property
    def square(self) -> str:
        return self.map.square_type()


def _check_pair_size(m: int, n: int) -> None:
    if m < 1 or n < 1 or m == n:
        raise ParameterError(f"pair search needs m, n >= 1 and m != n, got ({m}, {n})")
    if m + n > MAX_PAIRS:
        raise SizeBoundError(f"pair search bound m + n <= {MAX_PAIRS} exceeded by ({m}, {n})")


def involution_candidates(m: int, n: int) -> list[InvolutionCandidate]:
    """Candidates with square equal to the identity or to the parity automorphism."""
    _check_pair_size(m, n)
    k = m + n
    tw = twist_map(m, n)
    out = []
    for e in product(range(4), repeat=k - 1):
        exps = tuple(e) + (0,)
        d = diagonal_map(m, n, exps)
        for twisted in (False, True):
            mp = d.compose(tw) if twisted else d
            if mp.square_type() is not None:
                out.append(InvolutionCandidate(exps, twisted, mp))
    return out


def _conjugators(m: int, n: int) -> list[MonomialMap]:
    k = m + n
    out = []
    for qa in permutations(range(m)):
        for qb in permutations(range(m, k)):
            pm = permutation_map(m, n, list(qa) + list(qb))
            for e in product(range(4), repeat=k - 1):
                out.append(diagonal_map(m, n, tuple(e) + (0,)).compose(pm))
    return out


def _encode(mp: MonomialMap) -> tuple:
    return (mp.target, mp.phase)


Fingerprint = tuple[int, int, int, int, int, int]


def fingerprint(theta: MonomialMap, sigma: MonomialMap) -> Fingerprint:
    """Even/odd fixed dimensions of sigma, theta and sigma*theta on sl(m|n)."""
    return sigma.fixed_dims() + theta.fixed_dims() + sigma.compose(theta).fixed_dims()


@dataclass(frozen=True)
class PairClass:
    theta: MonomialMap
    sigma: MonomialMap
    fingerprint: Fingerprint
    size: int


@dataclass(frozen=True)
class BrutePairsResult:
    m: int
    n: int
    count: int
    classes: tuple[PairClass, ...]
    conjugation: str = CONJUGATION_GROUP

    @property
    def fingerprints(self) -> list[Fingerprint]:
        return sorted({c.fingerprint for c in self.classes})


def brute_involution_pairs(m: int, n: int) -> BrutePairsResult:
    cands = involution_candidates(m, n)
    conj = [(g, g.inverse()) for g in _conjugators(m, n)]
    seen: dict[tuple, list] = {}
    maps = [c.map for c in cands]
    for th in maps:
        for sg in maps:
            if _encode(th.compose(sg)) != _encode(sg.compose(th)):
                continue
            key = min((_encode(g.compose(th).compose(gi)), _encode(g.compose(sg).compose(gi))) for g, gi in conj)
            entry = seen.setdefault(key, [th, sg, 0])
            entry[2] += 1
    classes = []
    for key in sorted(seen):
        th, sg, size = seen[key]
        classes.append(PairClass(th, sg, fingerprint(th, sg), size))
    return BrutePairsResult(m, n, len(classes), tuple(classes))


# double diagrams of A type as commuting pairs

def _simple_vectors(m: int, n: int) -> list[tuple[int, int]]:
    k = m + n
    return [(v, v + 1) for v in range(k - 1)] + [(k - 1, 0)]


def realizes(mp: MonomialMap, perm: Sequence[int], signs: dict[int, int], kinds: Sequence[str]) -> bool:
    """mp permutes the affine simple root vectors along perm with the given signs on fixed vertices.

    A grey vertex also accepts the phase i*sign, the freedom an order-4 odd action allows.
    """
    xs = _simple_vectors(mp.m, mp.n)
    for v, x in enumerate(xs):
        p, t = mp.image(*x)
        if t != xs[perm[v]]:
            return False
        if perm[v] == v:
            want = 0 if signs[v] == 1 else 2
            ok = {want, (want + 1) % 4} if kinds[v] == GREY else {want}
            if p not in ok:
                return False
    return True


def diagram_to_pair(x, convention: str = "xor", candidates: list[InvolutionCandidate] | None = None):
    """A commuting (theta, sigma) realizing the double diagram x of family A(m-1, n-1), or None."""
    from .double_vogan import sigma_signs

    f = x.affine.family
    if f.tag != "A":
        raise ParameterError("diagram_to_pair handles A-type families only")
    m, n = f.m + 1, f.n + 1
    cands = candidates if candidates is not None else involution_candidates(m, n)
    kinds = [v.kind for v in x.affine.vertices]
    size = x.affine.size
    ident = list(range(size))
    theta_signs = {v: (-1 if v in x.black else 1) for v in range(size)}
    s_signs = sigma_signs(x, convention)
    thetas = [c.map for c in cands if realizes(c.map, ident, theta_signs, kinds)]
    sigmas = [c.map for c in cands if realizes(c.map, x.involution.perm, s_signs, kinds)]
    for th in thetas:
        for sg in sigmas:
            if _encode(th.compose(sg)) == _encode(sg.compose(th)):
                return th, sg
    return None
