"""Independent reference computations used only by the tests.

Nothing here calls the code under test except for group construction and
enumeration, which the oracles need as a substrate.
"""
import cmath
import itertools
import math

import numpy as np

from intcayley.group import add, elements, scale


def subgroup(G, x):
    out = {G.identity}
    cur = x
    while cur != G.identity:
        out.add(cur)
        cur = add(G, cur, x)
    return frozenset(out)


def class_by_subgroup(G, x):
    """``{y : <y> = <x>}`` by comparing generated subgroups over all of G."""
    target = subgroup(G, x)
    return frozenset(y for y in target if subgroup(G, y) == target)


def prime_divisors(n):
    return [p for p in range(2, n + 1) if n % p == 0 and all(p % q for q in range(2, p))]


def mu_phi_by_definition(G, x, y):
    """Branch-by-branch evaluation of the pair Moebius and totient functions."""
    hx, hy = subgroup(G, x), subgroup(G, y)
    assert x in hy
    if hx == hy:
        return 1, 1
    qs = prime_divisors(len(hy))
    for r in range(1, len(qs) + 1):
        for combo in itertools.combinations(qs, r):
            if subgroup(G, scale(G, math.prod(combo), y)) == hx:
                return (-1) ** r, math.prod(q - 1 for q in combo)
    return 0, 1


def char_value(G, alpha, y):
    """psi_alpha(y) as a complex number, one root of unity per factor."""
    z = 1 + 0j
    for a, b, n in zip(alpha, y, G.canonical_factors):
        z *= cmath.exp(2j * cmath.pi * a * b / n)
    return z


def char_sum_float(G, alpha, S):
    return sum((char_value(G, alpha, s) for s in S), 0j)


def adjacency(G, S):
    elems = elements(G)
    index = {e: i for i, e in enumerate(elems)}
    A = np.zeros((len(elems), len(elems)))
    for a in elems:
        for s in S:
            A[index[a], index[add(G, a, s)]] += 1
    return A


def adjacency_spectrum(G, S):
    return sorted(np.linalg.eigvalsh(adjacency(G, S)))


def ramanujan_float(n, a):
    return sum(cmath.exp(2j * cmath.pi * a * s / n) for s in range(1, n + 1) if math.gcd(s, n) == 1)
