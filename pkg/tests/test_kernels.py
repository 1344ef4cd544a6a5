from __future__ import annotations

from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from supervogan import _kernels_py, kernels

try:
    from supervogan import _kernels as _kernels_c
except ImportError:  # pragma: no cover - extension not built
    _kernels_c = None

BACKENDS = [_kernels_py] + ([_kernels_c] if _kernels_c is not None else [])


def test_backend_selected():
    assert kernels.BACKEND in ("cython", "python")
    if _kernels_c is not None:
        assert kernels.BACKEND == "cython" or __import__("os").environ.get("SUPERVOGAN_PURE") == "1"


@st.composite
def labelled_graphs(draw):
    n = draw(st.integers(1, 6))
    labels = draw(st.lists(st.integers(0, 2), min_size=n, max_size=n))
    codes = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            c = draw(st.sampled_from([0, 0, 4, 8, 9, 10]))
            codes[i][j] = c
            codes[j][i] = {9: 10, 10: 9}.get(c, c)
    return labels, codes


def brute(labels, codes):
    n = len(labels)
    return [
        p for p in permutations(range(n))
        if all(labels[p[i]] == labels[i] for i in range(n))
        and all(codes[p[i]][p[j]] == codes[i][j] for i in range(n) for j in range(n))
    ]


@given(labelled_graphs())
def test_graph_automorphisms_match_brute_force(g):
    labels, codes = g
    expected = brute(labels, codes)
    for mod in BACKENDS:
        assert mod.graph_automorphisms(labels, codes) == expected


@st.composite
def flip_systems(draw):
    n = draw(st.integers(1, 8))
    eligible = draw(st.integers(0, (1 << n) - 1))
    masks = []
    for w in range(n):
        if not (eligible >> w) & 1:
            masks.append(0)
            continue
        m = draw(st.integers(0, (1 << n) - 1)) & eligible & ~(1 << w)
        masks.append(m)
    return eligible, masks


@given(flip_systems())
def test_flip_orbits_partition_and_agree(sys_):
    eligible, masks = sys_
    ref = _kernels_py.flip_orbits(eligible, masks)
    for mod in BACKENDS[1:]:
        assert mod.flip_orbits(eligible, masks) == ref
    states = sorted(s for orb in ref for s in orb)
    subs = [s for s in range(eligible + 1) if s & ~eligible == 0]
    assert states == subs
    assert [orb[0] for orb in ref] == sorted(orb[0] for orb in ref)


@given(flip_systems(), st.data())
def test_flip_orbit_closed_under_moves(sys_, data):
    eligible, masks = sys_
    start = data.draw(st.integers(0, eligible)) & eligible
    for mod in BACKENDS:
        orb = mod.flip_orbit(start, masks)
        assert start in orb and orb == sorted(orb)
        s = set(orb)
        for x in orb:
            for w in range(len(masks)):
                if (x >> w) & 1:
                    assert x ^ masks[w] in s


@pytest.mark.skipif(_kernels_c is None, reason="compiled backend not built")
def test_flip_orbit_wide_masks():
    # 20 independent bits with no moves: every orbit is a singleton
    masks = [0] * 20
    assert _kernels_c.flip_orbit(0b1011, masks) == _kernels_py.flip_orbit(0b1011, masks) == [0b1011]
