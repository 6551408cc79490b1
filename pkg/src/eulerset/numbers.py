"""Exact integer machinery: primes, factorizations, multiplicative functions,
Bernoulli numbers and Faulhaber polynomials.

Exact rationals are plain :class:`fractions.Fraction` values, which are always
kept in lowest terms with a positive denominator.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd, isqrt, prod
from typing import Iterator

import numpy as np

from .errors import DomainError, InternalCheckError, ResourceError

PLAIN_SIEVE_LIMIT = 10**7
SIEVE_HARD_CAP = 10**9
SEGMENT_SIZE = 1 << 21
FACTORIZE_CAP = 2**64
OMEGA_CAP = 30
SPF_TABLE_LIMIT = 1 << 20
TRIAL_DIVISION_BOUND = 1 << 16

# Deterministic Miller-Rabin witnesses for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_BOUND = 3317044064679887385961981


def format_rational(q: Fraction | int) -> str:
    """Canonical ``"num/den"`` string (``"x/1"`` for integers)."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    num, _, den = text.partition("/")
    return Fraction(int(num), int(den or 1))


# -- primes -----------------------------------------------------------------

def _plain_sieve(limit: int) -> np.ndarray:
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    is_prime[4::2] = False
    for p in range(3, isqrt(limit) + 1, 2):
        if is_prime[p]:
            is_prime[p * p :: 2 * p] = False
    return np.flatnonzero(is_prime)


def _segments(limit: int) -> Iterator[np.ndarray]:
    base = _plain_sieve(isqrt(limit))
    yield base
    low = isqrt(limit) + 1
    odd_base = base[1:]
    while low <= limit:
        high = min(low + SEGMENT_SIZE, limit + 1)
        mask = np.ones(high - low, dtype=bool)
        for p in odd_base.tolist():
            if p * p >= high:
                break
            start = max(p * p, -(-low // p) * p)
            mask[start - low :: p] = False
        # even numbers
        mask[(low & 1) :: 2] = False
        yield np.flatnonzero(mask) + low
        low = high


def iter_primes(limit: int, *, hard_cap: int = SIEVE_HARD_CAP) -> Iterator[int]:
    """Yield every prime ``<= limit`` in ascending order.

    Uses a single sieve array up to ``PLAIN_SIEVE_LIMIT`` and a segmented
    sieve above it, so memory stays at one segment regardless of ``limit``.
    """
    if limit < 2:
        raise DomainError(f"prime limit must be >= 2, got {limit}")
    if limit > hard_cap:
        raise ResourceError(f"prime limit {limit} exceeds hard cap {hard_cap}")
    if limit <= PLAIN_SIEVE_LIMIT:
        yield from _plain_sieve(limit).tolist()
        return
    for chunk in _segments(limit):
        yield from chunk.tolist()


def sieve_primes(limit: int, *, hard_cap: int = SIEVE_HARD_CAP) -> list[int]:
    """All primes ``<= limit``, ascending.

    >>> sieve_primes(10)
    [2, 3, 5, 7]
    """
    return list(iter_primes(limit, hard_cap=hard_cap))


_spf_lock = threading.Lock()
_spf_table: np.ndarray | None = None


def _smallest_prime_factors() -> np.ndarray:
    global _spf_table
    if _spf_table is None:
        with _spf_lock:
            if _spf_table is None:
                spf = np.zeros(SPF_TABLE_LIMIT + 1, dtype=np.int32)
                for p in _plain_sieve(isqrt(SPF_TABLE_LIMIT)).tolist():
                    seg = spf[p * p :: p]
                    seg[seg == 0] = p
                idx = np.flatnonzero(spf == 0)
                spf[idx] = idx
                _spf_table = spf
    return _spf_table


def is_prime(n: int) -> bool:
    """Primality test; deterministic for every ``n < 3.3e24``."""
    if n < 2:
        return False
    if n <= SPF_TABLE_LIMIT:
        return int(_smallest_prime_factors()[n]) == n
    for p in _MR_BASES:
        if n % p == 0:
            return False
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    bases = _MR_BASES if n < _MR_DETERMINISTIC_BOUND else _MR_BASES + (43, 47, 53, 59, 61, 67, 71)
    for a in bases:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int) -> int:
    """Return a nontrivial factor of the odd composite ``n``."""
    for c in range(1, 200):
        y, m, g, r, q = 2, 128, 1, 1, 1
        f = lambda v: (v * v + c) % n  # noqa: E731
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = f(y)
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = f(y)
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = f(ys)
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise InternalCheckError(f"Pollard-Brent failed to split {n}")


def _split_prime_factors(n: int, out: list[int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out.append(n)
        return
    d = _pollard_brent(n)
    _split_prime_factors(d, out)
    _split_prime_factors(n // d, out)


# -- factorizations -----------------------------------------------------------

@dataclass(frozen=True)
class PrimeFactorization:
    """``n`` together with its ascending ``(prime, exponent)`` pairs."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"factorization needs n >= 1, got {self.n}")
        primes = [p for p, _ in self.factors]
        if any(a >= b for a, b in zip(primes, primes[1:])):
            raise DomainError("primes must be strictly increasing")
        if any(e < 1 for _, e in self.factors):
            raise DomainError("exponents must be positive")
        if prod(p**e for p, e in self.factors) != self.n:
            raise DomainError(f"factors do not multiply to {self.n}")
        if not all(is_prime(p) for p in primes):
            raise DomainError("factor list contains a non-prime")

    @classmethod
    def from_factors(cls, factors) -> PrimeFactorization:
        """Build from known ``(p, e)`` pairs; no size cap applies."""
        factors = tuple(sorted((int(p), int(e)) for p, e in factors))
        return cls(prod(p**e for p, e in factors), factors)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def phi(self) -> int:
        return euler_phi(self)

    @property
    def radical(self) -> int:
        return radical(self)

    @property
    def omega(self) -> int:
        return omega(self)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


def _collect(primes: list[int]) -> tuple[tuple[int, int], ...]:
    counts: dict[int, int] = {}
    for p in primes:
        counts[p] = counts.get(p, 0) + 1
    return tuple(sorted(counts.items()))


def factorize(n: int, *, cap: int = FACTORIZE_CAP) -> PrimeFactorization:
    """Factor ``n``.

    Small ``n`` use a smallest-prime-factor table, larger ones trial division
    by small primes; a cofactor left over after that is split with
    Pollard-Brent and certified with Miller-Rabin.
    """
    n = int(n)
    if n < 1:
        raise DomainError(f"cannot factorize {n}; n must be >= 1")
    if n > cap:
        raise ResourceError(f"{n} exceeds the factorization cap {cap}")
    found: list[int] = []
    if n <= SPF_TABLE_LIMIT:
        spf = _smallest_prime_factors()
        m = n
        while m > 1:
            p = int(spf[m])
            found.append(p)
            m //= p
    else:
        m = n
        for p in _small_primes():
            if p * p > m:
                break
            while m % p == 0:
                found.append(p)
                m //= p
        _split_prime_factors(m, found)
    return _trusted(n, _collect(found))


def _trusted(n: int, factors: tuple[tuple[int, int], ...]) -> PrimeFactorization:
    # factorize() output is correct by construction; skip re-validation
    f = object.__new__(PrimeFactorization)
    object.__setattr__(f, "n", n)
    object.__setattr__(f, "factors", factors)
    return f


@lru_cache(maxsize=1)
def _small_primes() -> tuple[int, ...]:
    return tuple(_plain_sieve(TRIAL_DIVISION_BOUND).tolist())


def euler_phi(f: PrimeFactorization) -> int:
    """phi(n) = prod p^(e-1) (p-1); phi(1) = 1."""
    return prod(p ** (e - 1) * (p - 1) for p, e in f.factors)


def radical(f: PrimeFactorization) -> int:
    return prod(f.primes)


def omega(f: PrimeFactorization) -> int:
    return len(f.factors)


def squarefree_divisors(f: PrimeFactorization, *, cap: int = OMEGA_CAP) -> list[tuple[int, int]]:
    """Every divisor ``d`` of the radical paired with its Moebius sign, ``d`` ascending."""
    if omega(f) > cap:
        raise ResourceError(f"omega(n) = {omega(f)} exceeds the cap {cap} on 2^omega subsets")
    divs = [(1, 1)]
    for p in f.primes:
        divs += [(d * p, -mu) for d, mu in divs]
    divs.sort()
    return divs


# -- Bernoulli / Faulhaber ----------------------------------------------------

@dataclass(frozen=True)
class BernoulliTable:
    """B_0 .. B_max with the convention B_1 = +1/2."""

    values: tuple[Fraction, ...]

    @property
    def max_index(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, i: int) -> Fraction:
        return self.values[i]

    def __len__(self) -> int:
        return len(self.values)


_bern_lock = threading.Lock()
_bern_minus: list[Fraction] = [Fraction(1)]


def bernoulli(max_index: int) -> BernoulliTable:
    """Exact Bernoulli numbers up to ``max_index``.

    Generated from sum_{j=0}^{m} C(m+1, j) B_j = 0 (the B_1 = -1/2 family),
    then B_1 is flipped to +1/2. The table grows monotonically and is shared.
    """
    if max_index < 0:
        raise DomainError("max_index must be >= 0")
    if len(_bern_minus) <= max_index:
        with _bern_lock:
            while len(_bern_minus) <= max_index:
                m = len(_bern_minus)
                acc = sum(comb(m + 1, j) * b for j, b in enumerate(_bern_minus))
                _bern_minus.append(-acc / (m + 1))
    values = list(_bern_minus[: max_index + 1])
    if max_index >= 1:
        values[1] = -values[1]
    return BernoulliTable(tuple(values))


@dataclass(frozen=True)
class FaulhaberPolynomial:
    """F_k(m) = 1^k + ... + m^k as a degree-(k+1) polynomial, highest degree first."""

    k: int
    coeffs: tuple[Fraction, ...]

    def __call__(self, m: int | Fraction) -> Fraction:
        acc = Fraction(0)
        for c in self.coeffs:
            acc = acc * m + c
        return acc

    def evaluate(self, m: int) -> int:
        value = self(m)
        if value.denominator != 1:
            raise InternalCheckError(f"F_{self.k}({m}) = {value} is not an integer")
        return value.numerator


def faulhaber(k: int, table: BernoulliTable | None = None) -> FaulhaberPolynomial:
    """Coefficient of m^(k+1-i) is C(k+1, i) B_i / (k+1).

    For k = 3 this is (m^4 + 2 m^3 + m^2)/4, i.e. (m(m+1))^2/4; the m^3
    coefficient is 1/2.
    """
    if k < 0:
        raise DomainError("k must be >= 0")
    if table is None:
        table = bernoulli(k)
    if table.max_index < k:
        raise DomainError(f"Bernoulli table covers up to {table.max_index}, need {k}")
    coeffs = [comb(k + 1, i) * table[i] / (k + 1) for i in range(k + 1)]
    return FaulhaberPolynomial(k, tuple(coeffs) + (Fraction(0),))
