"""Characters of a finite abelian group and the sums built from them.

The character indexed by ``alpha`` sends ``y`` to the product of
``w_{n_j} ** (alpha_j * y_j)`` over the canonical factors.  Writing every
factor root as a power of ``w_N`` (N the group exponent) turns this into a
single exponent, which is what :func:`psi_exponent` returns.
"""
from __future__ import annotations

from typing import Iterable

from intcayley import kernels
from intcayley.cyclotomic import CycloValue, from_exponents
from intcayley.errors import InvariantViolation
from intcayley.group import (
    Element,
    GroupSpec,
    cyclic_subgroup,
    elements,
    order_of,
    subgroup_set,
)


def weights(G: GroupSpec) -> tuple[int, ...]:
    hit = G._memo.get("weights")
    if hit is None:
        hit = tuple(G.exponent_N // n for n in G.canonical_factors)
        G._memo["weights"] = hit
    return hit


def psi_exponent(G: GroupSpec, alpha: Element, y: Element) -> int:
    N = G.exponent_N
    return sum(a * b * w for a, b, w in zip(alpha, y, weights(G))) % N


def char_sum(G: GroupSpec, alpha: Element, S: Iterable[Element]) -> CycloValue:
    exps = kernels.psi_exponents(alpha, list(S), weights(G), G.exponent_N)
    return from_exponents(G.exponent_N, exps)


def in_kernel(G: GroupSpec, alpha: Element, y: Element) -> bool:
    return psi_exponent(G, alpha, y) == 0


def f_alpha(G: GroupSpec, alpha: Element, x: Element) -> int:
    """Character sum over ``<x>``: ``|<x>|`` if alpha annihilates ``<x>``, else 0.

    The generator test suffices because ``psi_alpha`` is a homomorphism.
    """
    return order_of(G, x) if in_kernel(G, alpha, x) else 0


def perp_set(G: GroupSpec, generators: Iterable[Element]) -> frozenset:
    """Elements killed by the characters of every generator (hence of the
    subgroup they generate)."""
    gens = list(generators)
    W = weights(G)
    N = G.exponent_N
    elems = elements(G)
    keep = [True] * len(elems)
    for g in gens:
        for i, e in enumerate(kernels.psi_exponents(g, elems, W, N)):
            if e:
                keep[i] = False
    return frozenset(y for y, k in zip(elems, keep) if k)


def alpha_bar(G: GroupSpec, alpha: Element, x: Element) -> Element:
    """Canonical generator of ``<x>`` intersected with the kernel of ``psi_alpha``.

    Among the members of maximal order the one least in user coordinates is
    taken.
    """
    members = cyclic_subgroup(G, x).members
    exps = kernels.psi_exponents(alpha, members, weights(G), G.exponent_N)
    kernel = [y for y, e in zip(members, exps) if e == 0]
    best = max(order_of(G, y) for y in kernel)
    gen = min((y for y in kernel if order_of(G, y) == best), key=G.user_key)
    if best != len(kernel) or subgroup_set(G, gen) != frozenset(kernel):
        raise InvariantViolation(
            f"kernel of psi_{alpha} inside <{x}> is not cyclic: {sorted(kernel)}"
        )
    return gen
