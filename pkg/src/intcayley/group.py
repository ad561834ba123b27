"""Finite abelian groups as products of prime-power cyclic factors.

A group is given by the moduli of a product of cyclic groups
``Z_{m_1} x ... x Z_{m_r}``.  Every modulus is split by the CRT into its
prime-power parts, and all arithmetic happens on those canonical
coordinates.  Elements are plain tuples of ints, one residue per canonical
factor.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from intcayley.errors import ArityError, DomainError, InvalidGroupError

Element = tuple[int, ...]

MAX_ORDER = 2**63 - 1


@lru_cache(maxsize=65536)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of ``n >= 1`` as ``((p, a), ...)`` with p ascending."""
    if n < 1:
        raise DomainError(f"cannot factor {n}")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            a = 0
            while n % p == 0:
                n //= p
                a += 1
            out.append((p, a))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


@dataclass(frozen=True)
class CyclicData:
    generator: Element
    order: int
    members: tuple[Element, ...]


@dataclass(frozen=True)
class GroupSpec:
    user_moduli: tuple[int, ...]
    canonical_factors: tuple[int, ...]
    primes: tuple[int, ...]
    # for each canonical factor, the index of the user modulus it came from
    sources: tuple[int, ...]
    order_n: int
    exponent_N: int
    _memo: dict = field(default_factory=dict, compare=False, repr=False)

    def __hash__(self):
        return hash((self.user_moduli, self.canonical_factors))

    @property
    def rank(self) -> int:
        return len(self.canonical_factors)

    @property
    def identity(self) -> Element:
        return (0,) * len(self.canonical_factors)

    @property
    def is_cyclic_input(self) -> bool:
        return len(self.user_moduli) == 1

    def crt_forward(self, user_tuple: Sequence[int]) -> Element:
        if len(user_tuple) != len(self.user_moduli):
            raise ArityError(
                f"expected {len(self.user_moduli)} coordinates, got {len(user_tuple)}"
            )
        return tuple(
            int(user_tuple[src]) % n for n, src in zip(self.canonical_factors, self.sources)
        )

    def crt_backward(self, x: Element) -> tuple[int, ...]:
        self.check(x)
        residues: list[list[tuple[int, int]]] = [[] for _ in self.user_moduli]
        for r, n, src in zip(x, self.canonical_factors, self.sources):
            residues[src].append((r, n))
        out = []
        for m, parts in zip(self.user_moduli, residues):
            value = 0
            for r, n in parts:
                rest = m // n
                value += r * rest * pow(rest, -1, n)
            out.append(value % m)
        return tuple(out)

    def user_key(self, x: Element) -> tuple[int, ...]:
        """Sort key used for every canonical pick: the user-coordinate tuple."""
        key = ("user", x)
        hit = self._memo.get(key)
        if hit is None:
            hit = self._memo[key] = self.crt_backward(x)
        return hit

    def check(self, x: Element) -> None:
        if len(x) != len(self.canonical_factors):
            raise ArityError(
                f"element {x!r} has {len(x)} coordinates, group has {len(self.canonical_factors)}"
            )
        for r, n in zip(x, self.canonical_factors):
            if not 0 <= r < n:
                raise DomainError(f"element {x!r} is not reduced modulo {self.canonical_factors}")


def make_group(moduli: Iterable[int]) -> GroupSpec:
    """Build the canonical prime-power decomposition of ``Z_{m_1} x ... x Z_{m_r}``.

    >>> make_group([6, 4]).canonical_factors
    (2, 4, 3)
    """
    moduli = tuple(int(m) for m in moduli)
    if not moduli:
        raise InvalidGroupError("a group needs at least one modulus")
    if any(m < 1 for m in moduli):
        raise InvalidGroupError(f"moduli must be >= 1, got {list(moduli)}")
    order = math.prod(moduli)
    if order > MAX_ORDER:
        raise InvalidGroupError(f"group order {order} exceeds {MAX_ORDER}")

    parts = []
    for idx, m in enumerate(moduli):
        for p, a in factorize(m):
            parts.append((p, a, idx))
    # stable: equal (prime, exponent) keep user order
    parts.sort(key=lambda t: (t[0], t[1]))
    factors = tuple(p**a for p, a, _ in parts)
    exponent = math.lcm(*factors) if factors else 1
    return GroupSpec(
        user_moduli=moduli,
        canonical_factors=factors,
        primes=tuple(p for p, _, _ in parts),
        sources=tuple(idx for _, _, idx in parts),
        order_n=order,
        exponent_N=exponent,
    )


def canonicalize(G: GroupSpec, user_tuple: Sequence[int]) -> Element:
    return G.crt_forward(user_tuple)


def add(G: GroupSpec, a: Element, b: Element) -> Element:
    return tuple((u + v) % n for u, v, n in zip(a, b, G.canonical_factors))


def scale(G: GroupSpec, k: int, x: Element) -> Element:
    return tuple((k * u) % n for u, n in zip(x, G.canonical_factors))


def negate(G: GroupSpec, x: Element) -> Element:
    return tuple((-u) % n for u, n in zip(x, G.canonical_factors))


def order_of(G: GroupSpec, x: Element) -> int:
    # a residue r in Z_n has order n / gcd(r, n)
    return math.lcm(1, *(n // math.gcd(r, n) for r, n in zip(x, G.canonical_factors)))


def cyclic_subgroup(G: GroupSpec, x: Element) -> CyclicData:
    key = ("cyc", x)
    hit = G._memo.get(key)
    if hit is not None:
        return hit
    G.check(x)
    factors = G.canonical_factors
    members = [G.identity]
    cur = x
    while any(cur):
        members.append(cur)
        cur = tuple((u + v) % n for u, v, n in zip(cur, x, factors))
    data = CyclicData(generator=x, order=len(members), members=tuple(members))
    G._memo[key] = data
    return data


def subgroup_set(G: GroupSpec, x: Element) -> frozenset:
    """``<x>`` as a frozenset, cached per element."""
    key = ("cycset", x)
    hit = G._memo.get(key)
    if hit is None:
        hit = frozenset(cyclic_subgroup(G, x).members)
        G._memo[key] = hit
    return hit


def elements(G: GroupSpec) -> list[Element]:
    hit = G._memo.get("elements")
    if hit is None:
        hit = tuple(itertools.product(*(range(n) for n in G.canonical_factors)))
        G._memo["elements"] = hit
    return list(hit)


def element_index(G: GroupSpec) -> dict:
    """Map from element to its position in :func:`elements`."""
    hit = G._memo.get("index")
    if hit is None:
        hit = {e: i for i, e in enumerate(elements(G))}
        G._memo["index"] = hit
    return hit
