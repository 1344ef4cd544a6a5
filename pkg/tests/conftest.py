from __future__ import annotations

import os
import warnings

import pytest
from hypothesis import HealthCheck, settings

from supervogan.algebra_catalog import A, B, C, D, D21, F4, G3

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=400, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def sweep(limit: int = 3, exceptional: bool = True):
    """A, B, B(0,n), C, D instances with parameters up to ``limit``, plus the exceptional families."""
    out = []
    for m in range(limit + 1):
        for n in range(limit + 1):
            if m != n:
                out.append(A(m, n))
    out += [B(m, n) for m in range(1, limit + 1) for n in range(1, limit + 1)]
    out += [B(0, n) for n in range(1, limit + 1)]
    out += [C(n) for n in range(2, limit + 2)]
    out += [D(m, n) for m in range(2, limit + 1) for n in range(1, limit + 1)]
    if exceptional:
        out += [D21(1), D21(2), F4(), G3()]
    return out


def permissive_a(n: int):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", UserWarning)
        return A(n, n, permissive=True)


@pytest.fixture(params=sweep(2), ids=str)
def small_family(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import VERDICTS
    except ImportError:
        return
    if VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(VERDICTS):
            terminalreporter.write_line(line)
