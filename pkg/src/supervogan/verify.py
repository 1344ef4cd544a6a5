"""Run every applicable consistency check on one family instance."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import double_vogan as dv
from .algebra_catalog import FamilyId, full_root_set
from .dynkin import AffineDiagram, affine_diagram, check_marks_relation, compute_marks, finite_diagram
from .oracle import brute_involution_pairs, check_kernel, diagram_to_pair, fingerprint, involution_candidates
from .vogan import vogan_classes

MAX_VOGAN_RANK = 7
MAX_DOUBLE_SIZE = 6
PAINT_BOUND_FAMILIES = ("A", "B", "B0", "C", "D", "D21")


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool | None
    detail: str = ""

    @property
    def status(self) -> str:
        return "skip" if self.passed is None else ("pass" if self.passed else "FAIL")


@dataclass(frozen=True)
class VerifyReport:
    family: FamilyId
    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed is not False for c in self.checks)


def _marks(ad: AffineDiagram) -> CheckResult:
    ok = compute_marks(ad) == ad.marks and check_marks_relation(ad)
    return CheckResult("marks", ok, " ".join(map(str, ad.marks)))


def _kernel(ad: AffineDiagram) -> CheckResult:
    return CheckResult("kernel", check_kernel(ad), "sum of mark-weighted affine roots vanishes")


def _isotropy(f: FamilyId) -> CheckResult:
    _, odd = full_root_set(f)
    noniso = [str(r) for r in odd if not r.isotropic]
    if f.tag in ("B", "B0", "G3"):
        ok = all(len(r.coords) == 1 and r.coords[0][0].startswith("d") for r in odd if not r.isotropic)
        return CheckResult("isotropy", ok, f"{len(noniso)} non-isotropic odd roots, all of the form ±d_i")
    return CheckResult("isotropy", not noniso, "all odd roots isotropic" if not noniso else ", ".join(noniso))


def _automorphisms(ad: AffineDiagram) -> CheckResult:
    group = {g.perm for g in ad.automorphism_group}
    closed = all(a.compose(b).perm in group for a in ad.automorphism_group for b in ad.automorphism_group)
    labels = all(
        ad.vertices[g(i)].kind == ad.vertices[i].kind and ad.vertices[g(i)].mark == ad.vertices[i].mark
        for g in ad.automorphism_group
        for i in range(ad.size)
    )
    return CheckResult("automorphisms", closed and labels, f"group of order {len(group)}")


def _paint_bound(f: FamilyId, ad: AffineDiagram) -> CheckResult:
    d = finite_diagram(f)
    if f.tag not in PAINT_BOUND_FAMILIES:
        return CheckResult("painting-bound", None, "no bound stated for this family")
    if d.size > MAX_VOGAN_RANK:
        return CheckResult("painting-bound", None, f"rank {d.size} above {MAX_VOGAN_RANK}")
    bound = 3 if f.tag == "D21" else 2
    worst = 0
    bad_marks = 0
    for c in vogan_classes(d, ignore_circlings=True):
        p = c.representative.painted
        worst = max(worst, len(p))
        bad_marks += sum(1 for i in p if ad.marks[ad.finite_to_affine(i)] not in (1, 2))
    return CheckResult(
        "painting-bound", worst <= bound and bad_marks == 0, f"max painted {worst} (bound {bound}), bad marks {bad_marks}"
    )


def _parity_identity(ad: AffineDiagram) -> CheckResult:
    if ad.size > MAX_DOUBLE_SIZE:
        return CheckResult("double-filter", None, f"affine size {ad.size} above {MAX_DOUBLE_SIZE}")
    almost = dv.enumerate_almost_double(ad)
    double = dv.enumerate_double(ad)
    parity = ad.family.tag in dv.PARITY_FAMILIES
    recount = [x for x in almost if not parity or sum(ad.marks[v] for v in x.black) % 2 == 0]
    return CheckResult("double-filter", recount == double, f"{len(almost)} almost-double, {len(double)} double")


def _mark_sum(ad: AffineDiagram) -> CheckResult:
    if ad.size > MAX_DOUBLE_SIZE + 1:
        return CheckResult("black-mark-sum", None, f"affine size {ad.size} above {MAX_DOUBLE_SIZE + 1}")
    bad = 0
    seen = 0
    for x in dv.double_classes(ad, ignore_circlings=True):
        res = dv.black_mark_sum_check(x)
        if res is not dv.NOT_APPLICABLE and dv.classify(x).is_classified:
            seen += 1
            bad += not res
    return CheckResult("black-mark-sum", bad == 0, f"{seen} classified non-Hermitian two-black classes, {bad} with mark sum != 4")


def _oracle(f: FamilyId, ad: AffineDiagram) -> CheckResult:
    if f.tag != "A" or f.m + f.n + 2 > 3:
        return CheckResult("oracle", None, "pair oracle covers sl(2|1) and sl(1|2) only")
    res = brute_involution_pairs(f.m + 1, f.n + 1)
    fps = set(res.fingerprints)
    cands = involution_candidates(f.m + 1, f.n + 1)
    classes = dv.double_classes(ad)
    missing = 0
    for x in classes:
        pair = diagram_to_pair(x, candidates=cands)
        if pair is None or fingerprint(*pair) not in fps:
            missing += 1
    ok = len(classes) <= res.count and missing == 0
    return CheckResult("oracle", ok, f"{len(classes)} double classes, {res.count} oracle classes, {missing} unmatched")


def verify_family(f: FamilyId) -> VerifyReport:
    ad = affine_diagram(f)
    steps: list[Callable[[], CheckResult]] = [
        lambda: _marks(ad),
        lambda: _kernel(ad),
        lambda: _isotropy(f),
        lambda: _automorphisms(ad),
        lambda: _paint_bound(f, ad),
        lambda: _parity_identity(ad),
        lambda: _mark_sum(ad),
        lambda: _oracle(f, ad),
    ]
    return VerifyReport(f, tuple(step() for step in steps))
