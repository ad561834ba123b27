"""Exact sums of N-th roots of unity.

A :class:`CycloValue` stores how many times each power ``w_N**e`` occurs.
Whether such a sum is a rational integer is decided by reducing the
polynomial ``sum coeffs[e] * x**e`` modulo the cyclotomic polynomial
``Phi_N``: the value is an integer exactly when the remainder is constant.
"""
from __future__ import annotations

import cmath
import threading
from dataclasses import dataclass
from typing import Iterable, Sequence

from intcayley import kernels
from intcayley.divisors import divisors
from intcayley.errors import DomainError


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, ``coeffs[i]`` multiplies ``x**i``; no trailing zeros."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        if not self.coeffs or not other.coeffs:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(tuple(u - v for u, v in zip(a, b)))

    def divmod_monic(self, divisor: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
        """Long division by a monic polynomial; exact over the integers."""
        d = divisor.degree
        if d < 0 or divisor.coeffs[-1] != 1:
            raise DomainError("divisor must be monic")
        rem = list(self.coeffs)
        if len(rem) <= d:
            return IntPolynomial(()), self
        quot = [0] * (len(rem) - d)
        low = divisor.coeffs[:d]
        for i in range(len(rem) - 1, d - 1, -1):
            q = rem[i]
            if q:
                quot[i - d] = q
                for j, c in enumerate(low):
                    rem[i - d + j] -= q * c
                rem[i] = 0
        return IntPolynomial(tuple(quot)), IntPolynomial(tuple(rem[:d]))

    def __call__(self, z):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc


_phi_cache: dict[int, IntPolynomial] = {}
_phi_lock = threading.Lock()


def cyclotomic_poly(N: int) -> IntPolynomial:
    """``Phi_N`` by dividing ``x**N - 1`` by ``Phi_d`` for the proper divisors d."""
    if N < 1:
        raise DomainError(f"cyclotomic index must be >= 1, got {N}")
    hit = _phi_cache.get(N)
    if hit is not None:
        return hit
    poly = IntPolynomial((-1,) + (0,) * (N - 1) + (1,))
    for d in divisors(N)[:-1]:
        poly, rem = poly.divmod_monic(cyclotomic_poly(d))
        assert not rem.coeffs, f"Phi_{d} does not divide x^{N} - 1"
    with _phi_lock:
        return _phi_cache.setdefault(N, poly)


@dataclass(frozen=True)
class CycloValue:
    modulus_N: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.modulus_N:
            raise DomainError(
                f"expected {self.modulus_N} coefficients, got {len(self.coeffs)}"
            )

    def __add__(self, other: CycloValue) -> CycloValue:
        if other.modulus_N != self.modulus_N:
            raise DomainError("cannot add values over different roots of unity")
        return CycloValue(self.modulus_N, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def evaluate(self) -> complex:
        """Floating-point value; only for diagnostics and cross-checks."""
        N = self.modulus_N
        return sum(c * cmath.exp(2j * cmath.pi * e / N) for e, c in enumerate(self.coeffs) if c)


def zero(N: int) -> CycloValue:
    return CycloValue(N, (0,) * N)


def from_exponents(N: int, exponents: Iterable[int]) -> CycloValue:
    if N < 1:
        raise DomainError(f"root-of-unity order must be >= 1, got {N}")
    coeffs = [0] * N
    for e in exponents:
        coeffs[e % N] += 1
    return CycloValue(N, tuple(coeffs))


@dataclass(frozen=True)
class NotInteger:
    """Verdict for a root-of-unity sum that is not a rational integer.

    ``remainder`` is the canonical representative modulo ``Phi_N`` (low
    degree first, length ``euler_phi(N)``); ``approx`` its complex value.
    """

    modulus_N: int
    remainder: tuple[int, ...]
    approx: complex


def reduce(v: CycloValue) -> tuple[int, ...]:
    """Remainder of ``v``'s polynomial modulo ``Phi_N``."""
    return tuple(kernels.reduce_monic(v.coeffs, cyclotomic_poly(v.modulus_N).coeffs))


def remainder_to_value(N: int, remainder: Sequence[int]) -> int | NotInteger:
    if not any(remainder[1:]):
        return remainder[0]
    rem = tuple(remainder)
    approx = sum(c * cmath.exp(2j * cmath.pi * e / N) for e, c in enumerate(rem) if c)
    return NotInteger(N, rem, approx)


def as_integer(v: CycloValue) -> int | NotInteger:
    """The integer ``v`` equals, or a :class:`NotInteger` verdict.

    >>> as_integer(from_exponents(4, [2, 2]))
    -2
    """
    return remainder_to_value(v.modulus_N, reduce(v))
