import itertools
import random

import numpy as np
import pytest

import oracles
from conftest import NONCYCLIC, el, group
from intcayley.cyclotomic import NotInteger
from intcayley.divisors import equiv_class, euler_phi, mu_pair, phi_pair
from intcayley.errors import NonIntegralError, NotCayleySetError
from intcayley.characters import alpha_bar
from intcayley.group import elements, negate, order_of
from intcayley.spectra import (
    BRUTE,
    CLOSED,
    INTERMEDIATE,
    c_bruteforce,
    c_bruteforce_row,
    c_closed,
    c_intermediate,
    decompose_connection_set,
    ramanujan,
    spectrum,
    verify_eigenrelation,
)


def test_class_sum_examples():
    G = group(12)
    one, four = el(G, 1), el(G, 4)
    for f in (c_bruteforce, c_intermediate, c_closed):
        assert f(G, four, one) == -2
        for x in elements(G):
            assert f(G, G.identity, x) == euler_phi(order_of(G, x))
    V = group(2, 2)
    for f in (c_bruteforce, c_intermediate, c_closed):
        assert f(V, (1, 0), (1, 1)) == -1
    assert c_intermediate(group(5), (1,), (1,)) == -1
    assert G.crt_backward(alpha_bar(G, four, one)) == (3,)


def test_class_sum_matches_float_oracle():
    G = group(6, 10)
    for x in elements(G)[::7]:
        members = equiv_class(G, x).members
        for a in elements(G):
            assert abs(c_bruteforce(G, a, x) - oracles.char_sum_float(G, a, members)) < 1e-9


@pytest.mark.parametrize("moduli", [(n,) for n in (1, 2, 9, 12, 16, 30, 36)] + NONCYCLIC[:-1])
def test_three_paths_agree(moduli):
    G = group(*moduli)
    for x in elements(G):
        row = c_bruteforce_row(G, x)
        for a, b in zip(elements(G), row):
            assert c_closed(G, a, x) == c_intermediate(G, a, x) == b


def test_row_matches_pairwise():
    G = group(3, 9)
    for x in elements(G)[::5]:
        assert c_bruteforce_row(G, x) == [c_bruteforce(G, a, x) for a in elements(G)]


def test_closed_form_independent_of_generator_choice():
    rng = random.Random(2)
    G = group(5, 5, 25)
    es = elements(G)
    for _ in range(300):
        a, x = rng.choice(es), rng.choice(es)
        abar = alpha_bar(G, a, x)
        values = {
            mu_pair(G, g, x) * euler_phi(order_of(G, x)) // phi_pair(G, g, x)
            for g in equiv_class(G, abar).members
        }
        assert values == {c_closed(G, a, x)}


def test_ramanujan_examples():
    for n in range(1, 30):
        assert ramanujan(n, n) == euler_phi(n)
        assert ramanujan(n, 0) == euler_phi(n)
    assert ramanujan(6, 1) == 1
    assert ramanujan(4, 2) == -2
    for n in range(1, 40):
        for a in range(-3, n + 3):
            assert abs(ramanujan(n, a) - oracles.ramanujan_float(n, a)) < 1e-9


def test_ramanujan_is_closed_form_on_cyclic_groups():
    for n in range(1, 51):
        G = group(n)
        one = el(G, 1)
        for a in range(n):
            assert ramanujan(n, a) == c_closed(G, el(G, a), one)


def test_decompose_examples():
    G = group(5)
    conn = decompose_connection_set(G, [el(G, s) for s in (1, 2, 3, 4)])
    assert conn.class_reps == (el(G, 1),)
    bad = decompose_connection_set(G, [el(G, 1), el(G, 4)])
    assert bad.class_reps is None and bad.witness == el(G, 2)
    H = group(12)
    conn = decompose_connection_set(H, [el(H, s) for s in (2, 6, 10)])
    assert [H.crt_backward(r)[0] for r in conn.class_reps] == [2, 6]
    with pytest.raises(NotCayleySetError):
        decompose_connection_set(H, [el(H, 1)])


def _vals(report):
    return [v for _, v in report.per_alpha]


def test_spectrum_examples():
    G = group(5)
    S = equiv_class(G, el(G, 1)).members
    for m in (CLOSED, INTERMEDIATE, BRUTE):
        assert _vals(spectrum(G, S, m)) == [4, -1, -1, -1, -1]
    C4 = group(4)
    assert _vals(spectrum(C4, [el(C4, 1), el(C4, 3)])) == [2, 0, -2, 0]
    V = group(2, 2)
    rep = spectrum(V, [(1, 0), (0, 1)], BRUTE)
    assert rep.multiplicities == {2: 1, 0: 2, -2: 1}
    assert list(rep.multiplicities) == [2, 0, -2]
    assert rep.degree == 2 and rep.method == BRUTE


@pytest.mark.parametrize("moduli", [(5,), (8,), (12,), (2, 6), (3, 3), (2, 2, 2)])
def test_spectrum_matches_adjacency_eigenvalues(moduli):
    G = group(*moduli)
    rng = random.Random(sum(moduli))
    es = [x for x in elements(G) if x != G.identity]
    for _ in range(10):
        S = set()
        for x in rng.sample(es, min(3, len(es))):
            S |= {x, negate(G, x)}
        rep = spectrum(G, S, BRUTE)
        approx = sorted(
            float(v) if isinstance(v, int) else v.approx.real for v in rep.eigenvalues
        )
        assert np.allclose(approx, oracles.adjacency_spectrum(G, S), atol=1e-8)


def test_non_integral_reports():
    G = group(5)
    S = [el(G, 1), el(G, 4)]
    rep = spectrum(G, S, BRUTE)
    assert rep.eigenvalues[0] == 2 and not rep.integral
    assert all(isinstance(v, NotInteger) for v in rep.eigenvalues[1:])
    with pytest.raises(NonIntegralError) as info:
        spectrum(G, S, CLOSED)
    assert info.value.report.eigenvalues == rep.eigenvalues
    assert info.value.witness == el(G, 2)


def test_loops_need_flag():
    G = group(6)
    S = {G.identity} | equiv_class(G, el(G, 1)).members
    with pytest.raises(NotCayleySetError):
        spectrum(G, S)
    rep = spectrum(G, S, loops=True)
    plain = spectrum(G, S - {G.identity})
    assert rep.eigenvalues == [v + 1 for v in plain.eigenvalues]
    assert rep.eigenvalues == spectrum(G, S, BRUTE, loops=True).eigenvalues
    assert sum(rep.eigenvalues) == G.order_n


def test_not_symmetric_rejected():
    G = group(7)
    with pytest.raises(NotCayleySetError):
        spectrum(G, [el(G, 1)], BRUTE)


def test_verify_examples():
    G = group(5)
    S = equiv_class(G, el(G, 1)).members
    assert verify_eigenrelation(G, S, G.identity, 4)
    assert verify_eigenrelation(G, S, el(G, 1), -1)
    assert not verify_eigenrelation(G, S, el(G, 1), 0)
    V = group(2, 6)
    S = [(1, 0, 0), (0, 1, 0)]
    assert verify_eigenrelation(V, S, V.identity, len(S))


def test_verify_backends_agree(each_backend):
    G = group(3, 9)
    rng = random.Random(9)
    for _ in range(20):
        x = rng.choice(elements(G))
        S = equiv_class(G, x).members | equiv_class(G, negate(G, x)).members
        if G.identity in S:
            continue
        rep = spectrum(G, S)
        for a, lam in rep.per_alpha[::4]:
            assert verify_eigenrelation(G, S, a, lam)
            assert not verify_eigenrelation(G, S, a, lam + 1)


@pytest.mark.parametrize("moduli", [(n,) for n in range(2, 13)])
def test_spectral_identities(moduli):
    G = group(*moduli)
    classes = {equiv_class(G, x).representative for x in elements(G) if x != G.identity}
    for r in range(1, len(classes) + 1):
        for reps in itertools.combinations(sorted(classes), r):
            S = set().union(*(equiv_class(G, x).members for x in reps))
            lam = spectrum(G, S).eigenvalues
            assert lam[0] == len(S)
            assert sum(lam) == 0
            assert sum(v * v for v in lam) == G.order_n * len(S)
