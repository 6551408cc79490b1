"""Euler products over primes reached through S(3, p).

For a prime p the cubic totative sum is a perfect square,
4 S(3, p) = (p (p-1))^2, so 2 sqrt(S(3, p)) = p (p-1). That gives
Artin's constant as a product over S(3, p), and lets p itself be recovered
as p = (1 + sqrt(1 + 8 sqrt(S(3, p)))) / 2.

Truncated products are returned as rigorous brackets [value_lo, value_hi].
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from decimal import ROUND_CEILING, ROUND_FLOOR, Context, Decimal, localcontext
from fractions import Fraction
from math import isqrt

from .errors import (
    CompositeRecoveredError,
    DomainError,
    InternalCheckError,
    NoIntegralPrimeError,
    NotPerfectSquareError,
)
from .numbers import PrimeFactorization, is_prime, iter_primes
from .powersums import powersum_closed

WORKING_PRECISION = 40
ALLOWANCE_DIGIT = 25
OUTPUT_DIGITS = 25
ZETA_MIN_S = Decimal(1) + Decimal("1e-3")
ARTIN_REFERENCE = Decimal("0.3739558136")


class TailKind(str, enum.Enum):
    ARTIN = "artin_tail"
    ZETA = "zeta_tail"


@dataclass(frozen=True)
class ProductEstimate:
    """Bracket around an infinite Euler product truncated at ``prime_limit``.

    ``partial`` is the finite product over primes <= prime_limit as carried
    at working precision; the bracket adds the tail bound and a rounding
    allowance on top.
    """

    prime_limit: int
    terms_used: int
    partial: Decimal
    value_lo: Decimal
    value_hi: Decimal
    tail_bound_kind: TailKind
    tail_bound: Decimal

    @property
    def width(self) -> Decimal:
        return self.value_hi - self.value_lo

    def contains(self, x) -> bool:
        return self.value_lo <= Decimal(x) <= self.value_hi

    def to_dict(self) -> dict:
        down = Context(prec=OUTPUT_DIGITS, rounding=ROUND_FLOOR)
        up = Context(prec=OUTPUT_DIGITS, rounding=ROUND_CEILING)
        return {
            "prime_limit": self.prime_limit,
            "terms_used": self.terms_used,
            "value_lo": str(down.plus(self.value_lo)),
            "value_hi": str(up.plus(self.value_hi)),
            "tail_bound_kind": self.tail_bound_kind.value,
            "partial": str(Context(prec=OUTPUT_DIGITS).plus(self.partial)),
        }


@dataclass(frozen=True)
class PrimeReconstruction:
    s3: int
    sqrt_s3: int
    p: int

    def to_dict(self) -> dict:
        return {"s3": str(self.s3), "sqrt_s3": str(self.sqrt_s3), "p": str(self.p)}


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")


def s3_of_prime(p: int) -> int:
    """S(3, p) via the closed form, for a prime p."""
    _require_prime(p)
    return powersum_closed(3, PrimeFactorization(p, ((p, 1),))).value


def artin_term(p: int) -> Fraction:
    """1 - 1/(p(p-1))."""
    _require_prime(p)
    return 1 - Fraction(1, p * (p - 1))


def artin_term_via_s3(p: int) -> Fraction:
    """1 - 1/(2 sqrt(S(3, p))) with an exact integer square root."""
    s3 = s3_of_prime(p)
    root = isqrt(s3)
    if root * root != s3:
        raise InternalCheckError(f"S(3,{p}) = {s3} is not a perfect square", {"p": p, "s3": str(s3)})
    return 1 - Fraction(1, 2 * root)


def prime_from_s3(s3: int, *, coefficient: int = 8) -> PrimeReconstruction:
    """Recover p from S(3, p).

    With t = sqrt(S(3,p)), p solves p^2 - p - 2t = 0, so
    p = (1 + sqrt(1 + 8t)) / 2. ``coefficient`` replaces the 8 and exists so
    the variant with 4 can be shown to fail; leave it alone otherwise.
    """
    if s3 < 1:
        raise DomainError(f"S(3, p) values are >= 1, got {s3}")
    t = isqrt(s3)
    if t * t != s3:
        raise NotPerfectSquareError(f"{s3} is not a perfect square")
    disc = 1 + coefficient * t
    r = isqrt(disc)
    if r * r != disc or r % 2 == 0:
        raise NoIntegralPrimeError(f"1 + {coefficient}*{t} = {disc} is not an odd perfect square")
    p = (1 + r) // 2
    if not is_prime(p):
        raise CompositeRecoveredError(f"{s3} maps to composite {p}")
    return PrimeReconstruction(s3, t, p)


def _allowance(value: Decimal, terms: int) -> Decimal:
    # one unit in the 25th significant digit per multiplication
    return Decimal(terms) * Decimal(1).scaleb(value.adjusted() - (ALLOWANCE_DIGIT - 1))


def artin_product(prime_limit: int) -> ProductEstimate:
    """Bracket for C = prod_p (1 - 1/(p(p-1))) truncated at ``prime_limit``.

    Every omitted factor is 1 - x with x = 1/(p(p-1)) <= 1/2, and
    -log(1 - x) <= x + x^2 <= 2x. Summing 2/(m(m-1)) over m > P telescopes to
    2/P, so C >= partial * exp(-2/P). The partial product is an upper bound.
    """
    if prime_limit < 2:
        raise DomainError(f"prime_limit must be >= 2, got {prime_limit}")
    with localcontext() as ctx:
        ctx.prec = WORKING_PRECISION
        value, terms = Decimal(1), 0
        for p in iter_primes(prime_limit):
            q = p * (p - 1)
            value *= Decimal(q - 1) / Decimal(q)
            terms += 1
        tail = Decimal(2) / Decimal(prime_limit)
        slack = _allowance(value, terms)
        lo = value * (-tail).exp() - slack
        hi = value + slack
    return ProductEstimate(prime_limit, terms, value, lo, hi, TailKind.ARTIN, tail)


def _as_exponent(s) -> Decimal | int:
    if isinstance(s, int):
        return s
    d = Decimal(str(s)) if isinstance(s, float) else Decimal(s)
    return int(d) if d == d.to_integral_value() else d


def _zeta(s, prime_limit: int, via_s3: bool) -> ProductEstimate:
    exp = _as_exponent(s)
    if Decimal(exp) < ZETA_MIN_S:
        raise DomainError(f"zeta product needs real s >= 1 + 1e-3, got {s}")
    if prime_limit < 2:
        raise DomainError(f"prime_limit must be >= 2, got {prime_limit}")
    with localcontext() as ctx:
        ctx.prec = WORKING_PRECISION
        value, terms = Decimal(1), 0
        primes = _primes_via_s3(prime_limit) if via_s3 else iter_primes(prime_limit)
        for p in primes:
            if isinstance(exp, int):
                pk = Decimal(p**exp)
            else:
                pk = Decimal(p) ** exp
            value *= pk / (pk - 1)
            terms += 1
        # sum_{p>P} -log(1 - p^-s) <= (1 + P^-s) sum_{m>P} m^-s <= (1 + P^-s) P^(1-s)/(s-1)
        P, sd = Decimal(prime_limit), Decimal(exp)
        tail = (1 + P ** (-sd)) * P ** (1 - sd) / (sd - 1)
        slack = _allowance(value, terms)
        lo = value - slack
        hi = value * tail.exp() + slack
    return ProductEstimate(prime_limit, terms, value, lo, hi, TailKind.ZETA, tail)


def zeta_product(s, prime_limit: int) -> ProductEstimate:
    """Bracket for zeta(s) = prod_p 1/(1 - p^-s), real s > 1.

    ``s`` may be an int, a Decimal or a decimal string; floats are converted
    through their repr.
    """
    return _zeta(s, prime_limit, via_s3=False)


def _primes_via_s3(prime_limit: int):
    for p in iter_primes(prime_limit):
        rec = prime_from_s3(s3_of_prime(p))
        if rec.p != p:
            raise InternalCheckError(f"round trip sent {p} to {rec.p}", {"p": p, "recovered": rec.p})
        yield rec.p


def zeta_product_via_s3(s, prime_limit: int) -> ProductEstimate:
    """Same product, with every p first mapped to S(3, p) and recovered from it."""
    return _zeta(s, prime_limit, via_s3=True)
