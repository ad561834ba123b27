import functools

import pytest

from intcayley import kernels
from intcayley.group import make_group

# the fixed verification suite: every Z_n with n <= 60 plus these products
NONCYCLIC = [(2, 2), (2, 4), (4, 4), (2, 2, 2), (2, 6), (3, 9), (6, 10), (5, 5, 25)]
SUITE = [(n,) for n in range(1, 61)] + NONCYCLIC


@functools.lru_cache(maxsize=None)
def group(*moduli):
    return make_group(list(moduli))


def el(G, *user):
    """Canonical element from user coordinates."""
    return G.crt_forward(user)


@pytest.fixture(params=kernels.available_backends())
def each_backend(request):
    with kernels.using(request.param):
        yield request.param


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
