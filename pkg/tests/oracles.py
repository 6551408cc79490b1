"""Reference computations that share no code with the package."""

from __future__ import annotations

from math import gcd, isqrt

import mpmath


def prime_count(n: int) -> int:
    """pi(n) by the Lucy_Hedgehog recursion (no sieve list)."""
    r = isqrt(n)
    keys = [n // i for i in range(1, r + 1)]
    keys += list(range(keys[-1] - 1, 0, -1))
    S = {v: v - 1 for v in keys}
    for p in range(2, r + 1):
        if S[p] > S[p - 1]:
            sp, p2 = S[p - 1], p * p
            for v in keys:
                if v < p2:
                    break
                S[v] -= S[v // p] - sp
    return S[n]


def direct_powersum(k: int, n: int) -> int:
    return sum(a**k for a in range(1, max(n, 2)) if gcd(a, n) == 1)


def phi_by_count(n: int) -> int:
    return sum(1 for a in range(1, n + 1) if gcd(a, n) == 1)


def zeta_series(s, N: int = 50, terms: int = 12, dps: int = 40):
    """zeta(s) = sum_{n<N} n^-s plus an Euler-Maclaurin tail at N."""
    with mpmath.workdps(dps):
        s = mpmath.mpf(s)
        total = mpmath.fsum(mpmath.mpf(n) ** -s for n in range(1, N))
        total += mpmath.mpf(N) ** (1 - s) / (s - 1) + mpmath.mpf(N) ** -s / 2
        rising = s
        for j in range(1, terms + 1):
            total += mpmath.bernoulli(2 * j) / mpmath.factorial(2 * j) * rising * mpmath.mpf(N) ** (-s - 2 * j + 1)
            rising *= (s + 2 * j - 1) * (s + 2 * j)
        return +total
