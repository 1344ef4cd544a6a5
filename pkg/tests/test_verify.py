from __future__ import annotations

import pytest

from supervogan.algebra_catalog import A, B, C, D, D21, F4, G3
from supervogan.verify import verify_family

PASSING = [A(1, 0), A(2, 1), B(1, 1), B(2, 1), B(2, 2), B(0, 2), C(2), C(3), C(4), D(2, 1), D21(1), D21(2), F4(), G3()]


@pytest.mark.parametrize("f", PASSING, ids=str)
def test_verify_passes(f):
    rep = verify_family(f)
    assert rep.ok, [(c.name, c.detail) for c in rep.checks if c.passed is False]
    assert [c.name for c in rep.checks] == [
        "marks", "kernel", "isotropy", "automorphisms", "painting-bound", "double-filter", "black-mark-sum", "oracle"
    ]


def test_oracle_runs_only_on_small_a():
    assert verify_family(A(1, 0)).checks[-1].passed is True
    assert verify_family(C(2)).checks[-1].passed is None


def test_painting_bound_failure_is_reported():
    rep = verify_family(D(2, 2))
    assert not rep.ok
    bad = [c for c in rep.checks if c.passed is False]
    assert [c.name for c in bad] == ["painting-bound"]
    assert "max painted 3" in bad[0].detail


def test_fork_swap_mark_sum_failure_is_reported():
    rep = verify_family(D(3, 1))
    bad = {c.name for c in rep.checks if c.passed is False}
    assert bad == {"black-mark-sum"}


def test_isotropy_detail_for_b():
    c = next(c for c in verify_family(B(1, 1)).checks if c.name == "isotropy")
    assert c.passed and "d_i" in c.detail
