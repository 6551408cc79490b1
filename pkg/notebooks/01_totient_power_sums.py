# %% [markdown]
# # Power sums over the totatives of n
#
# S(k, n) adds up a^k over every a in [1, n-1] with gcd(a, n) = 1. Three
# routes give the same integer: enumeration, explicit formulas for k <= 3,
# and inclusion-exclusion over the squarefree divisors of the radical.

# %%
from eulerset import (
    coefficient_vector,
    factorize,
    faulhaber,
    powersum_bruteforce,
    powersum_closed,
    powersum_general,
    squarefree_divisors,
    totatives,
)

n = 10
print("totatives", totatives(n))
for k in range(4):
    print(k, powersum_bruteforce(k, n).value, powersum_closed(k, n).value, powersum_general(k, n).value)

# %% [markdown]
# The inclusion-exclusion route needs the Faulhaber polynomial F_k(m) = 1^k + ... + m^k.
# For k = 3 it is (m(m+1))^2 / 4 = (m^4 + 2m^3 + m^2) / 4. Note the m^3 coefficient.

# %%
F3 = faulhaber(3)
print([str(c) for c in F3.coeffs])
print([F3.evaluate(m) for m in range(6)])

# %% [markdown]
# S(k, n) = sum over d | R(n) of mu(d) d^k F_k(n/d). Only 2^omega(n) terms, so
# n can be astronomically large as long as its factorization is known.

# %%
f = factorize(360)
print(f, squarefree_divisors(f))
print(powersum_general(7, f).value == powersum_bruteforce(7, 360).value)

# %% [markdown]
# Collecting the same expansion by powers of n gives the exact coefficients in
# S(k,n) = phi(n)/(k+1) (n^k + c_1 n^(k-1) + ... + c_k).

# %%
for k in (2, 3, 4, 6):
    vec = coefficient_vector(k, 30)
    print(k, [str(c) for c in vec.c], vec.reconstruct() == powersum_general(k, 30).value)
