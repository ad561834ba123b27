import itertools
import math
import random

import pytest
from hypothesis import given, strategies as st

from conftest import SUITE, el, group
from intcayley.errors import ArityError, InvalidGroupError
from intcayley.group import (
    add,
    canonicalize,
    cyclic_subgroup,
    elements,
    make_group,
    order_of,
    scale,
)


@pytest.mark.parametrize(
    "moduli, factors, order, exponent",
    [
        ([12], (4, 3), 12, 12),
        ([5, 5, 25], (5, 5, 25), 625, 25),
        ([6, 4], (2, 4, 3), 24, 12),
        ([1], (), 1, 1),
        ([1, 7, 1], (7,), 7, 7),
    ],
)
def test_make_group(moduli, factors, order, exponent):
    G = make_group(moduli)
    assert G.canonical_factors == factors
    assert G.order_n == order
    assert G.exponent_N == exponent


@pytest.mark.parametrize("bad", [[], [0], [3, 0], [-2], [2**40, 2**40]])
def test_make_group_rejects(bad):
    with pytest.raises(InvalidGroupError):
        make_group(bad)


def test_canonicalize_examples():
    G = group(12)
    assert canonicalize(G, [7]) == (3, 1)
    assert canonicalize(G, [0]) == (0, 0)
    assert canonicalize(group(5, 5, 25), [1, 0, 5]) == (1, 0, 5)
    with pytest.raises(ArityError):
        canonicalize(G, [1, 2])


@pytest.mark.parametrize("moduli", [(12,), (6, 4), (2, 6), (5, 5, 25), (6, 10), (30, 4, 9), (1, 8)])
def test_crt_round_trip(moduli):
    G = group(*moduli)
    seen = set()
    for t in itertools.product(*(range(m) for m in moduli)):
        x = G.crt_forward(t)
        assert G.crt_backward(x) == t
        seen.add(x)
    assert len(seen) == G.order_n


def test_add_and_scale_examples():
    G = group(12)
    assert add(G, (3, 2), (1, 1)) == (0, 0)
    assert add(G, (0, 0), (2, 1)) == (2, 1)
    assert add(group(2, 2), (1, 0), (0, 1)) == (1, 1)
    assert scale(G, 5, el(G, 2)) == el(G, 10)
    x = el(G, 7)
    assert scale(G, 0, x) == G.identity
    assert scale(G, order_of(G, x), x) == G.identity
    assert add(G, x, scale(G, -1, x)) == G.identity


def test_order_examples():
    G = group(12)
    assert order_of(G, G.identity) == 1
    assert order_of(G, (2, 1)) == 6
    assert order_of(group(5, 5, 25), (1, 0, 5)) == 5


def test_cyclic_subgroup_examples():
    G = group(12)
    c = cyclic_subgroup(G, el(G, 4))
    assert c.order == 3
    assert {G.crt_backward(m)[0] for m in c.members} == {0, 4, 8}
    assert cyclic_subgroup(G, G.identity).members == (G.identity,)
    assert set(cyclic_subgroup(group(2, 2), (1, 1)).members) == {(0, 0), (1, 1)}


def test_elements_examples():
    assert elements(group(2, 2)) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert elements(group(1)) == [()]
    e = elements(group(12))
    assert len(e) == 12 and e[0] == (0, 0) and e[-1] == (3, 2)


@pytest.mark.parametrize("moduli", SUITE[::7] + [(2, 2, 2), (3, 9), (6, 10), (5, 5, 25)])
def test_orders_and_cyclic_subgroups(moduli):
    G = group(*moduli)
    for x in elements(G):
        o = order_of(G, x)
        assert G.order_n % o == 0 and G.exponent_N % o == 0
        # least t >= 1 with t*x = 0
        assert o == next(t for t in range(1, G.order_n + 1) if scale(G, t, x) == G.identity)
        c = cyclic_subgroup(G, x)
        members = set(c.members)
        assert len(members) == c.order == o
        assert members == {scale(G, k, x) for k in range(o)}
        assert all(add(G, a, b) in members for a in members for b in members)


group_moduli = st.lists(st.integers(1, 12), min_size=1, max_size=3)


@given(group_moduli, st.data())
def test_abelian_group_axioms(moduli, data):
    G = make_group(moduli)
    pick = st.tuples(*(st.integers(0, n - 1) for n in G.canonical_factors))
    a, b, c = data.draw(pick), data.draw(pick), data.draw(pick)
    assert add(G, a, b) == add(G, b, a)
    assert add(G, add(G, a, b), c) == add(G, a, add(G, b, c))
    assert add(G, a, G.identity) == a
    assert add(G, a, scale(G, -1, a)) == G.identity
    k = data.draw(st.integers(-50, 50))
    assert scale(G, k, add(G, a, b)) == add(G, scale(G, k, a), scale(G, k, b))


def test_exponent_is_lcm_of_orders():
    rng = random.Random(3)
    for _ in range(20):
        moduli = [rng.randint(1, 20) for _ in range(rng.randint(1, 3))]
        G = make_group(moduli)
        assert G.exponent_N == math.lcm(*moduli)
        assert max(order_of(G, x) for x in elements(G)) == G.exponent_N
