"""S(k, n): the sum of k-th powers of the totatives of n, computed three ways.

``bruteforce`` enumerates the totatives and is the oracle. ``closed`` uses the
explicit formulas for k <= 3. ``general`` runs inclusion-exclusion over the
squarefree divisors d of the radical with Faulhaber polynomials:

    S(k, n) = sum_{d | R(n)} mu(d) d^k F_k(n/d)

so it never touches individual totatives.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb, prod

import numpy as np

from .errors import DomainError, InternalCheckError, ResourceError
from .numbers import (
    OMEGA_CAP,
    PrimeFactorization,
    bernoulli,
    euler_phi,
    factorize,
    faulhaber,
    format_rational,
    omega,
    radical,
    squarefree_divisors,
)

TOTATIVE_BUDGET = 10**7
K_CAP = 64
VERIFY_THRESHOLD = 5000


class Method(str, enum.Enum):
    BRUTEFORCE = "bruteforce"
    CLOSED = "closed"
    GENERAL = "general"


@dataclass(frozen=True)
class PowerSumRecord:
    k: int
    n: int
    value: int
    method: Method

    def to_dict(self) -> dict:
        return {"k": self.k, "n": self.n, "value": str(self.value), "method": self.method.value}


@dataclass(frozen=True)
class CoefficientVector:
    """c_1..c_k with S(k,n) = phi(n)/(k+1) * (n^k + c_1 n^(k-1) + ... + c_k)."""

    k: int
    n: int
    c: tuple[Fraction, ...]
    phi: int

    def reconstruct(self) -> Fraction:
        n = self.n
        poly = Fraction(n**self.k) + sum(ci * n ** (self.k - i) for i, ci in enumerate(self.c, 1))
        return Fraction(self.phi, self.k + 1) * poly

    def to_dict(self) -> dict:
        return {"k": self.k, "n": self.n, "c": [format_rational(ci) for ci in self.c]}


def _as_factorization(n: int | PrimeFactorization) -> PrimeFactorization:
    return n if isinstance(n, PrimeFactorization) else factorize(n)


def totatives(n: int, *, budget: int = TOTATIVE_BUDGET) -> list[int]:
    """Integers in [1, n-1] coprime to n, ascending. ``totatives(1) == [1]``.

    >>> totatives(10)
    [1, 3, 7, 9]
    """
    if n < 1:
        raise DomainError(f"totatives need n >= 1, got {n}")
    if n > budget:
        raise ResourceError(f"n = {n} exceeds the enumeration budget {budget}")
    if n == 1:
        return [1]
    keep = np.ones(n, dtype=bool)
    keep[0] = False
    for p in factorize(n).primes:
        keep[::p] = False
    return np.flatnonzero(keep).tolist()


def powersum_bruteforce(k: int, n: int, *, budget: int = TOTATIVE_BUDGET) -> PowerSumRecord:
    if k < 0:
        raise DomainError("k must be >= 0")
    value = sum(a**k for a in totatives(n, budget=budget))
    return PowerSumRecord(k, n, value, Method.BRUTEFORCE)


def _closed_rational(k: int, f: PrimeFactorization) -> Fraction:
    n, phi, R = f.n, euler_phi(f), radical(f)
    sign = (-1) ** omega(f)
    if k == 0:
        return Fraction(phi)
    if k == 1:
        return Fraction(phi * n, 2)
    if k == 2:
        return Fraction(phi, 3) * (n**2 + sign * Fraction(R, 2))
    return Fraction(phi, 4) * (n**3 + sign * R * n)


def powersum_closed(k: int, n: int | PrimeFactorization) -> PowerSumRecord:
    """Explicit formulas for k in {0, 1, 2, 3}.

    S(0) = phi(n), S(1) = phi(n) n/2, S(2) = phi(n)/3 (n^2 + (-1)^w R/2),
    S(3) = phi(n)/4 (n^3 + (-1)^w R n), where w = omega(n), R = radical(n).
    """
    f = _as_factorization(n)
    if f.n < 2:
        raise DomainError("closed form requires n ≥ 2")
    if k not in (0, 1, 2, 3):
        raise DomainError(f"closed form exists only for k <= 3 (got k = {k}); use powersum_general")
    value = _closed_rational(k, f)
    if value.denominator != 1:
        raise InternalCheckError(f"closed form S({k},{f.n}) = {value} is not integral",
                                 {"k": k, "n": f.n, "value": format_rational(value)})
    return PowerSumRecord(k, f.n, value.numerator, Method.CLOSED)


def _check_caps(k: int, f: PrimeFactorization, k_cap: int, omega_cap: int) -> None:
    if k < 0:
        raise DomainError("k must be >= 0")
    if f.n < 2:
        raise DomainError("inclusion-exclusion evaluator requires n >= 2")
    if k > k_cap:
        raise ResourceError(f"k = {k} exceeds the Bernoulli table cap {k_cap}")
    if omega(f) > omega_cap:
        raise ResourceError(f"omega(n) = {omega(f)} exceeds the cap {omega_cap}")


def powersum_general(k: int, n: int | PrimeFactorization, *,
                     k_cap: int = K_CAP, omega_cap: int = OMEGA_CAP) -> PowerSumRecord:
    """S(k, n) for any k by inclusion-exclusion; cost 2^omega(n) * poly(k)."""
    f = _as_factorization(n)
    _check_caps(k, f, k_cap, omega_cap)
    F = faulhaber(k, bernoulli(k))
    total = Fraction(0)
    for d, mu in squarefree_divisors(f, cap=omega_cap):
        total += mu * d**k * F(f.n // d)
    if total.denominator != 1:
        raise InternalCheckError(f"S({k},{f.n}) evaluated to non-integer {total}")
    return PowerSumRecord(k, f.n, total.numerator, Method.GENERAL)


def coefficient_vector(k: int, n: int | PrimeFactorization, *,
                       k_cap: int = K_CAP, omega_cap: int = OMEGA_CAP) -> CoefficientVector:
    """Exact c_1..c_k read off the inclusion-exclusion expansion by powers of n.

    Collecting terms gives c_i = C(k+1, i) B_i (n/phi(n)) prod_{p|n} (1 - p^(i-1)).
    """
    if k < 1:
        raise DomainError("coefficient vectors need k >= 1")
    f = _as_factorization(n)
    _check_caps(k, f, k_cap, omega_cap)
    B = bernoulli(k)
    scale = Fraction(f.n, euler_phi(f))
    c = tuple(
        comb(k + 1, i) * B[i] * scale * prod(1 - p ** (i - 1) for p in f.primes)
        for i in range(1, k + 1)
    )
    return CoefficientVector(k, f.n, c, euler_phi(f))


def powersum(k: int, n: int, *, verify_threshold: int = VERIFY_THRESHOLD) -> PowerSumRecord:
    """Convenience entry point.

    Uses the closed form for k <= 3 and inclusion-exclusion above that. When
    ``n <= verify_threshold`` the result is also checked against brute force.
    """
    if n < 2:
        return powersum_bruteforce(k, n)
    rec = powersum_closed(k, n) if k <= 3 else powersum_general(k, n)
    if n <= verify_threshold:
        oracle = powersum_bruteforce(k, n)
        if oracle.value != rec.value:
            raise InternalCheckError(
                f"S({k},{n}): {rec.method.value} gave {rec.value}, brute force {oracle.value}",
                {"k": k, "n": n, rec.method.value: str(rec.value), "bruteforce": str(oracle.value)},
            )
    return rec
