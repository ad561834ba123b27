"""Eigenvalues of Cayley graphs over finite abelian groups.

The eigenvalue of ``Cay(Z, S)`` at the character ``alpha`` is the character
sum over ``S``.  When ``S`` is a union of classes ``[x_1], ..., [x_r]`` the sum
splits into the class sums ``C_alpha(x_i)``, each of which has three
independent evaluations here:

* :func:`c_bruteforce` sums the roots of unity exactly and reduces modulo
  the cyclotomic polynomial;
* :func:`c_intermediate` sums ``|<y>| mu(y, x)`` over class representatives
  ``y`` of ``<x>`` annihilated by ``psi_alpha``;
* :func:`c_closed` is the closed form
  ``mu(abar, x) * |[x]| / phi(abar, x)`` where ``abar`` generates the part of
  ``<x>`` annihilated by ``psi_alpha``.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional

from intcayley import kernels
from intcayley.characters import alpha_bar, char_sum, psi_exponent, weights
from intcayley.cyclotomic import NotInteger, as_integer, cyclotomic_poly, remainder_to_value
from intcayley.divisors import (
    class_representatives,
    equiv_class,
    euler_phi,
    moebius_classic,
    mu_pair,
    phi_pair,
)
from intcayley.errors import (
    DomainError,
    InvariantViolation,
    NonIntegralError,
    NotCayleySetError,
)
from intcayley.group import Element, GroupSpec, elements, negate, order_of

CLOSED = "closed-form"
INTERMEDIATE = "intermediate"
BRUTE = "brute-force"
METHODS = (CLOSED, INTERMEDIATE, BRUTE)


def c_bruteforce(G: GroupSpec, alpha: Element, x: Element) -> int:
    value = as_integer(char_sum(G, alpha, sorted(equiv_class(G, x).members)))
    if isinstance(value, NotInteger):
        raise InvariantViolation(f"class sum C_{alpha}({x}) reduced to a non-integer: {value}")
    return value


def c_bruteforce_row(G: GroupSpec, x: Element) -> list[int]:
    """``c_bruteforce(alpha, x)`` for every alpha, in :func:`elements` order."""
    members = sorted(equiv_class(G, x).members)
    N = G.exponent_N
    rems = kernels.char_sum_table(
        elements(G), members, weights(G), N, cyclotomic_poly(N).coeffs
    )
    out = []
    for alpha, rem in zip(elements(G), rems):
        value = remainder_to_value(N, rem)
        if isinstance(value, NotInteger):
            raise InvariantViolation(f"class sum C_{alpha}({x}) reduced to a non-integer: {value}")
        out.append(value)
    return out


def c_intermediate(G: GroupSpec, alpha: Element, x: Element) -> int:
    total = 0
    for y in class_representatives(G, x).reps:
        if psi_exponent(G, alpha, y) == 0:
            total += order_of(G, y) * mu_pair(G, y, x)
    return total


def c_closed(G: GroupSpec, alpha: Element, x: Element) -> int:
    abar = alpha_bar(G, alpha, x)
    num = mu_pair(G, abar, x) * euler_phi(order_of(G, x))
    den = phi_pair(G, abar, x)
    q, r = divmod(num, den)
    if r:
        raise InvariantViolation(f"closed form not integral at alpha={alpha}, x={x}: {num}/{den}")
    return q


def ramanujan(n: int, a: int) -> int:
    """Ramanujan sum ``R_n(a)``, the sum of ``w_n**(a*s)`` over units s mod n."""
    if n < 1:
        raise DomainError(f"Ramanujan sums need n >= 1, got {n}")
    m = n // math.gcd(n, a % n)
    return euler_phi(n) * moebius_classic(m) // euler_phi(m)


@dataclass(frozen=True)
class ConnectionSet:
    members: frozenset
    contains_identity: bool
    class_reps: Optional[tuple[Element, ...]]
    # an element whose class is not contained in the set, when undecomposable
    witness: Optional[Element] = None

    @property
    def decomposable(self) -> bool:
        return self.class_reps is not None


def check_symmetric(G: GroupSpec, S: Iterable[Element]) -> frozenset:
    members = frozenset(S)
    for s in sorted(members):
        G.check(s)
        if negate(G, s) not in members:
            raise NotCayleySetError(f"{s} is in the set but {negate(G, s)} is not")
    return members


def decompose_connection_set(G: GroupSpec, S: Iterable[Element]) -> ConnectionSet:
    """Split ``S`` into whole classes, or report an element whose class is cut."""
    members = check_symmetric(G, S)
    remaining = set(members)
    reps = []
    while remaining:
        s = min(remaining, key=G.user_key)
        cls = equiv_class(G, s)
        missing = cls.members - members
        if missing:
            return ConnectionSet(
                members, G.identity in members, None, witness=min(missing, key=G.user_key)
            )
        reps.append(cls.representative)
        remaining -= cls.members
    return ConnectionSet(members, G.identity in members, tuple(sorted(reps, key=G.user_key)))


@dataclass(frozen=True)
class SpectrumReport:
    per_alpha: tuple[tuple[Element, int | NotInteger], ...]
    multiplicities: dict
    method: str
    degree: int

    @property
    def eigenvalues(self) -> list:
        return [lam for _, lam in self.per_alpha]

    @property
    def integral(self) -> bool:
        return all(isinstance(lam, int) for _, lam in self.per_alpha)


def _multiplicities(values) -> dict:
    counts = Counter(values)
    ints = sorted((v for v in counts if isinstance(v, int)), reverse=True)
    rest = sorted(
        (v for v in counts if not isinstance(v, int)),
        key=lambda v: (-v.approx.real, v.remainder),
    )
    return {v: counts[v] for v in ints + rest}


def _brute_values(G: GroupSpec, S: frozenset) -> list:
    N = G.exponent_N
    rems = kernels.char_sum_table(
        elements(G), sorted(S), weights(G), N, cyclotomic_poly(N).coeffs
    )
    return [remainder_to_value(N, r) for r in rems]


def spectrum(G: GroupSpec, S: Iterable[Element], method: str = CLOSED, loops: bool = False) -> SpectrumReport:
    """Eigenvalue at every character, in :func:`elements` order."""
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    members = check_symmetric(G, S)
    if G.identity in members and not loops:
        raise NotCayleySetError("the identity is in the set; pass loops=True to allow self-loops")
    alphas = elements(G)

    def report(values, tag):
        return SpectrumReport(
            per_alpha=tuple(zip(alphas, values)),
            multiplicities=_multiplicities(values),
            method=tag,
            degree=len(members),
        )

    if method == BRUTE:
        return report(_brute_values(G, members), BRUTE)

    conn = decompose_connection_set(G, members)
    if not conn.decomposable:
        raise NonIntegralError(
            f"the set is not a union of classes: the class of {conn.witness} is cut",
            report=report(_brute_values(G, members), BRUTE),
            witness=conn.witness,
        )
    term = c_closed if method == CLOSED else c_intermediate
    values = [sum(term(G, a, x) for x in conn.class_reps) for a in alphas]
    return report(values, method)


def verify_eigenrelation(G: GroupSpec, S: Iterable[Element], alpha: Element, lam: int) -> bool:
    """Check ``A v = lam v`` row by row for the character vector ``v = psi_alpha``.

    Row ``a`` of the adjacency matrix sums ``psi_alpha(a + s)`` over s in S;
    each row is compared with ``lam * psi_alpha(a)`` exactly.
    """
    N = G.exponent_N
    return kernels.eigen_rows_hold(
        alpha,
        elements(G),
        sorted(S),
        G.canonical_factors,
        weights(G),
        N,
        cyclotomic_poly(N).coeffs,
        int(lam),
    )
