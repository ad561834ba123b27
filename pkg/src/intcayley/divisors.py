"""Arithmetic functions and the cyclic-subgroup lattice of a finite abelian group.

Two elements are equivalent when they generate the same cyclic subgroup; the
class of ``x`` is ``{m*x : gcd(m, ord x) = 1}``.  Inside ``<x>`` there is
exactly one class per divisor ``d`` of ``ord x``, namely the class of ``d*x``.
The pair functions :func:`mu_pair` and :func:`phi_pair` are the Moebius and
totient analogues on that lattice; both depend only on the order ratio.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Mapping

from intcayley.errors import DomainError, IncompleteInputError
from intcayley.group import (
    Element,
    GroupSpec,
    cyclic_subgroup,
    factorize,
    order_of,
    scale,
    subgroup_set,
)


def _positive(n: int) -> None:
    if n < 1:
        raise DomainError(f"expected a positive integer, got {n}")


@lru_cache(maxsize=4096)
def _divisors(n: int) -> tuple[int, ...]:
    divs = [1]
    for p, a in factorize(n):
        divs = [d * p**e for d in divs for e in range(a + 1)]
    return tuple(sorted(divs))


def divisors(n: int) -> list[int]:
    _positive(n)
    return list(_divisors(n))


def moebius_classic(n: int) -> int:
    _positive(n)
    fac = factorize(n)
    if any(a > 1 for _, a in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def euler_phi(n: int) -> int:
    _positive(n)
    out = n
    for p, _ in factorize(n):
        out = out // p * (p - 1)
    return out


@dataclass(frozen=True)
class ClassDescriptor:
    representative: Element
    members: frozenset
    order: int


@dataclass(frozen=True)
class RepresentativeSet:
    base: Element
    reps: tuple[Element, ...]


def equiv_class(G: GroupSpec, x: Element) -> ClassDescriptor:
    key = ("class", x)
    hit = G._memo.get(key)
    if hit is not None:
        return hit
    cyc = cyclic_subgroup(G, x)
    o = cyc.order
    # m*x is members[m] for 0 <= m < o; m = o is the identity, covered by m = 0
    members = [cyc.members[m % o] for m in range(1, o + 1) if math.gcd(m, o) == 1]
    desc = ClassDescriptor(
        representative=min(members, key=G.user_key), members=frozenset(members), order=o
    )
    for m in members:
        G._memo[("class", m)] = desc
    return desc


def class_representatives(G: GroupSpec, x: Element) -> RepresentativeSet:
    """One canonical representative per class inside ``<x>``, ordered by the
    divisor ``d`` with class ``[d*x]`` (so the list ends with the identity)."""
    key = ("reps", x)
    hit = G._memo.get(key)
    if hit is None:
        o = order_of(G, x)
        reps = tuple(equiv_class(G, scale(G, d, x)).representative for d in _divisors(o))
        hit = RepresentativeSet(base=x, reps=reps)
        G._memo[key] = hit
    return hit


def _check_member(G: GroupSpec, x: Element, y: Element) -> None:
    if x not in subgroup_set(G, y):
        raise DomainError(f"{x!r} is not in the cyclic subgroup generated by {y!r}")


def mu_pair(G: GroupSpec, x: Element, y: Element) -> int:
    """Moebius analogue ``mu(x, y)`` for ``x`` in ``<y>``.

    Equal to the classical Moebius function of ``ord(y) / ord(x)``.
    """
    _check_member(G, x, y)
    return moebius_classic(order_of(G, y) // order_of(G, x))


def phi_pair(G: GroupSpec, x: Element, y: Element) -> int:
    """Totient analogue: the product of ``q - 1`` over the primes ``q`` of a
    squarefree ratio ``ord(y)/ord(x)``, and 1 on every other branch."""
    _check_member(G, x, y)
    ratio = order_of(G, y) // order_of(G, x)
    fac = factorize(ratio)
    if any(a > 1 for _, a in fac):
        return 1
    return math.prod(p - 1 for p, _ in fac)


def moebius_forward(G: GroupSpec, x: Element, g: Mapping[Element, int] | Callable) -> dict:
    """``f(z) = sum of g(y) over y in A(z)`` for every representative z in A(x)."""
    lookup = _lookup(g)
    return {
        z: sum(lookup(y) for y in class_representatives(G, z).reps)
        for z in class_representatives(G, x).reps
    }


def moebius_invert(G: GroupSpec, x: Element, f: Mapping[Element, int] | Callable) -> dict:
    """Recover ``g`` from ``f(z) = sum_{y in A(z)} g(y)``.

    Both functions are keyed by canonical class representatives; the result
    holds ``g(z) = sum_{y in A(z)} f(y) mu(y, z)`` for every ``z`` in ``A(x)``.
    """
    lookup = _lookup(f)
    out = {}
    for z in class_representatives(G, x).reps:
        oz = order_of(G, z)
        total = 0
        for y in class_representatives(G, z).reps:
            m = moebius_classic(oz // order_of(G, y))
            if m:
                total += lookup(y) * m
        out[z] = total
    return out


def _lookup(f):
    if callable(f) and not isinstance(f, Mapping):
        return f

    def get(y):
        try:
            return f[y]
        except KeyError:
            raise IncompleteInputError(f"function has no value at representative {y!r}") from None

    return get
