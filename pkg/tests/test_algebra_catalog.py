from __future__ import annotations

import warnings
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from supervogan.algebra_catalog import (
    A, B, C, D, D21, F4, G3, FAMILY_INFO, FamilyId, Root, build_simple_system, full_root_set, inner,
    lowest_root, parse_family,
)
from supervogan.errors import ParameterError

from conftest import permissive_a, sweep


def expected_root_counts(f: FamilyId) -> tuple[int, int]:
    """Even and odd root counts from the dimensions of the even part and the odd module."""
    m, n = f.m, f.n
    if f.tag == "A":
        return m * (m + 1) + n * (n + 1), 2 * (m + 1) * (n + 1)
    if f.tag in ("B", "B0"):
        return 2 * m * m + 2 * n * n, 4 * m * n + 2 * n
    if f.tag == "C":
        k = n - 1
        return 2 * k * k, 4 * k
    if f.tag == "D":
        return 2 * m * (m - 1) + 2 * n * n, 4 * m * n
    return {"D21": (6, 8), "F4": (20, 16), "G3": (14, 14)}[f.tag]


@pytest.mark.parametrize("f", sweep(4), ids=str)
def test_root_counts(f):
    even, odd = full_root_set(f)
    assert (len(even), len(odd)) == expected_root_counts(f)


@pytest.mark.parametrize("f", sweep(3), ids=str)
def test_roots_closed_under_negation(f):
    even, odd = full_root_set(f)
    for pool in (even, odd):
        keys = {r.coords for r in pool}
        assert all((-r).coords in keys for r in pool)


@pytest.mark.parametrize("f", sweep(3), ids=str)
def test_lowest_root_is_a_root(f):
    low = lowest_root(f)
    even, odd = full_root_set(f)
    assert low.coords in {r.coords for r in (even if low.parity == "even" else odd)}


@pytest.mark.parametrize("f", sweep(3), ids=str)
def test_simple_root_count_is_rank(f):
    s = build_simple_system(f)
    expected = {
        "A": f.m + f.n + 1, "B": f.m + f.n, "B0": f.n, "C": f.n, "D": f.m + f.n, "D21": 3, "F4": 4, "G3": 3,
    }[f.tag]
    assert s.rank == expected


@pytest.mark.parametrize("f", sweep(3), ids=str)
def test_distinguished_system_has_one_odd_root(f):
    s = build_simple_system(f)
    assert sum(r.parity == "odd" for r in s.simple_roots) == 1


def test_cartan_symmetrizer():
    for f in sweep(3):
        s = build_simple_system(f)
        for i, ri in enumerate(s.simple_roots):
            for j, rj in enumerate(s.simple_roots):
                assert s.symmetrizer[i] * s.cartan[i][j] == inner(ri, rj, s.form)


def test_d21_form_depends_on_alpha():
    s1 = build_simple_system(D21(1))
    s2 = build_simple_system(D21(Fraction(1, 2)))
    assert s1.form != s2.form


@pytest.mark.parametrize(
    "bad",
    [lambda: A(1, 1), lambda: A(-1, 2), lambda: B(0, 2).__class__("B", 0, 2), lambda: C(1), lambda: D(1, 2),
     lambda: D21(0), lambda: D21(-1), lambda: FamilyId("Q", 1, 1)],
)
def test_invalid_parameters(bad):
    with pytest.raises(ParameterError):
        bad()


def test_permissive_a_warns():
    with pytest.warns(UserWarning):
        A(2, 2, permissive=True)
    assert permissive_a(1).permissive


@pytest.mark.parametrize(
    "text,expected",
    [("A(2,1)", A(2, 1)), ("B(0,2)", B(0, 2)), ("B(2,3)", B(2, 3)), ("C(3)", C(3)), ("D(3,2)", D(3, 2)),
     ("D(2,1;a=2/1)", D21(2)), ("D(2,1;alpha=1/3)", D21(Fraction(1, 3))), ("F(4)", F4()), ("G(3)", G3()),
     (" A ( 1 , 0 ) ", A(1, 0))],
)
def test_parse_family(text, expected):
    assert parse_family(text) == expected


@pytest.mark.parametrize("text", ["A(1)", "C(2,1)", "F(5)", "G(2)", "D(3,1;a=2)", "X(1,2)", "A(1,1)", ""])
def test_parse_family_rejects(text):
    with pytest.raises(ParameterError):
        parse_family(text)


@given(st.integers(0, 6), st.integers(0, 6))
def test_str_parse_roundtrip(m, n):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", UserWarning)
        f = A(m, n, permissive=m == n)
        assert parse_family(str(f), permissive=m == n) == f


@given(st.fractions().filter(lambda a: a not in (0, -1)))
def test_d21_str_roundtrip(a):
    assert parse_family(str(D21(a))) == D21(a)


def test_root_make_drops_zero_coordinates():
    r = Root.make({"e1": 1, "d1": 0}, "even")
    assert r.coords == (("e1", Fraction(1)),)


def test_family_info_covers_all_tags():
    assert {i.name for i in FAMILY_INFO} == {"A", "B", "B0", "C", "D", "D21", "F4", "G3"}
