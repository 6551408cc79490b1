from fractions import Fraction
from math import comb, gcd, prod

import pytest
from hypothesis import given, settings, strategies as st

import eulerset.numbers as nb
from eulerset import (
    DomainError,
    PrimeFactorization,
    ResourceError,
    bernoulli,
    euler_phi,
    factorize,
    faulhaber,
    is_prime,
    omega,
    radical,
    sieve_primes,
    squarefree_divisors,
)

from oracles import phi_by_count, prime_count


class TestSieve:
    def test_small(self):
        assert sieve_primes(10) == [2, 3, 5, 7]
        assert sieve_primes(2) == [2]

    def test_million_matches_prime_count(self):
        primes = sieve_primes(10**6)
        assert len(primes) == 78498 == prime_count(10**6)
        assert primes == sorted(set(primes))

    def test_segmented_path_agrees_with_plain(self, monkeypatch):
        plain = sieve_primes(2 * 10**6 + 17)
        monkeypatch.setattr(nb, "PLAIN_SIEVE_LIMIT", 1000)
        monkeypatch.setattr(nb, "SEGMENT_SIZE", 65536)
        assert sieve_primes(2 * 10**6 + 17) == plain

    def test_segmented_count(self, monkeypatch):
        monkeypatch.setattr(nb, "PLAIN_SIEVE_LIMIT", 10**4)
        assert len(sieve_primes(3 * 10**6)) == prime_count(3 * 10**6)

    def test_errors(self):
        with pytest.raises(DomainError):
            sieve_primes(1)
        with pytest.raises(ResourceError):
            sieve_primes(10**6, hard_cap=10**5)


class TestFactorize:
    @pytest.mark.parametrize("n, factors", [
        (360, ((2, 3), (3, 2), (5, 1))),
        (1, ()),
        (9, ((3, 2),)),
        (2**61 - 1, ((2**61 - 1, 1),)),
        (2**64 - 1, ((3, 1), (5, 1), (17, 1), (257, 1), (641, 1), (65537, 1), (6700417, 1))),
        (1000003 * 1000033, ((1000003, 1), (1000033, 1))),
    ])
    def test_known(self, n, factors):
        assert factorize(n).factors == factors

    def test_zero_rejected(self):
        with pytest.raises(DomainError):
            factorize(0)

    def test_cap(self):
        with pytest.raises(ResourceError):
            factorize(2**64 + 1)
        big = PrimeFactorization.from_factors([(2**89 - 1, 1), (3, 2)])
        assert big.n == 9 * (2**89 - 1) and big.radical == 3 * (2**89 - 1)

    def test_round_trip_to_a_million(self):
        for n in range(1, 10**6 + 1):
            f = factorize(n)
            assert prod(p**e for p, e in f.factors) == n

    @given(st.integers(2, 10**15))
    @settings(max_examples=200, deadline=None)
    def test_factors_are_prime_and_ordered(self, n):
        f = factorize(n)
        primes = f.primes
        assert list(primes) == sorted(set(primes))
        assert all(is_prime(p) for p in primes)
        assert prod(p**e for p, e in f.factors) == n

    def test_validation(self):
        with pytest.raises(DomainError):
            PrimeFactorization(12, ((2, 2), (3, 2)))
        with pytest.raises(DomainError):
            PrimeFactorization(4, ((4, 1),))
        with pytest.raises(DomainError):
            PrimeFactorization(15, ((5, 1), (3, 1)))


class TestMultiplicative:
    @pytest.mark.parametrize("n, phi", [(10, 4), (9, 6), (1, 1)])
    def test_phi(self, n, phi):
        assert euler_phi(factorize(n)) == phi

    @pytest.mark.parametrize("n, R, w", [(360, 30, 3), (10, 10, 2), (9, 3, 1), (1, 1, 0)])
    def test_radical_omega(self, n, R, w):
        f = factorize(n)
        assert (radical(f), omega(f)) == (R, w)

    def test_phi_against_count(self):
        for n in range(1, 800):
            assert euler_phi(factorize(n)) == phi_by_count(n)

    @pytest.mark.parametrize("n, divs", [
        (10, [(1, 1), (2, -1), (5, -1), (10, 1)]),
        (9, [(1, 1), (3, -1)]),
        (1, [(1, 1)]),
    ])
    def test_squarefree_divisors(self, n, divs):
        assert squarefree_divisors(factorize(n)) == divs

    def test_squarefree_cap(self):
        f = factorize(2 * 3 * 5 * 7)
        with pytest.raises(ResourceError):
            squarefree_divisors(f, cap=3)

    def test_identities_to_ten_thousand(self):
        for n in range(1, 10**4 + 1):
            f = factorize(n)
            divs = squarefree_divisors(f)
            phi, R, w = euler_phi(f), radical(f), omega(f)
            assert sum(Fraction(mu, d) for d, mu in divs) == Fraction(phi, n)
            assert sum(mu * d for d, mu in divs) == Fraction(phi, n) * (-1) ** w * R
            if n >= 2:
                assert sum(mu for _, mu in divs) == 0
            assert len(divs) == 2**w
            assert all(R % d == 0 for d, _ in divs)


class TestBernoulliFaulhaber:
    def test_small_tables(self):
        assert bernoulli(0).values == (1,)
        assert bernoulli(1).values == (1, Fraction(1, 2))
        assert bernoulli(4).values == (1, Fraction(1, 2), Fraction(1, 6), 0, Fraction(-1, 30))

    def test_odd_vanish(self):
        B = bernoulli(40)
        assert all(B[i] == 0 for i in range(3, 41, 2))
        assert B[12] == Fraction(-691, 2730)

    def test_recurrence_holds(self):
        B = list(bernoulli(30).values)
        B[1] = -B[1]
        for m in range(1, 30):
            assert sum(comb(m + 1, j) * B[j] for j in range(m + 1)) == 0

    def test_w_of_m(self):
        F = faulhaber(3)
        assert F.coeffs == (Fraction(1, 4), Fraction(1, 2), Fraction(1, 4), 0, 0)
        for m in range(50):
            assert F(m) == Fraction((m * (m + 1)) ** 2, 4)

    def test_low_degree(self):
        assert faulhaber(0).coeffs == (1, 0)
        assert faulhaber(1).coeffs == (Fraction(1, 2), Fraction(1, 2), 0)

    def test_against_direct_sums(self):
        for k in range(13):
            F = faulhaber(k)
            assert F.coeffs[0] == Fraction(1, k + 1) and F.coeffs[-1] == 0
            running = 0
            assert F.evaluate(0) == 0
            for m in range(1, 101):
                running += m**k
                assert F.evaluate(m) == running

    def test_table_too_short(self):
        with pytest.raises(DomainError):
            faulhaber(5, bernoulli(3))

    def test_concurrent_table_growth(self):
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(8) as pool:
            tables = list(pool.map(bernoulli, [60, 20, 45, 64, 10, 64]))
        for t in tables:
            assert t.values == bernoulli(64).values[: len(t)]


def test_format_rational():
    assert nb.format_rational(Fraction(-6, 4)) == "-3/2"
    assert nb.format_rational(7) == "7/1"
    assert nb.parse_rational("-3/2") == Fraction(-3, 2)
