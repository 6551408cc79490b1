# %% [markdown]
# # zeta(s) rebuilt from S(3, p)
#
# Solving p^2 - p - 2 sqrt(S(3,p)) = 0 recovers p = (1 + sqrt(1 + 8 sqrt S(3,p))) / 2.
# The constant must be 8: with 4, S(3,5) = 100 leads to sqrt(41).

# %%
from eulerset import NoIntegralPrimeError, prime_from_s3, s3_of_prime, zeta_product, zeta_product_via_s3

print(prime_from_s3(100))
try:
    prime_from_s3(100, coefficient=4)
except NoIntegralPrimeError as exc:
    print("coefficient 4:", exc)

# %% [markdown]
# Because the round trip is exact, the Euler product over recovered primes is
# bit-for-bit the ordinary one.

# %%
for s, P in [(2, 10**4), (3, 10**3), ("2.5", 10**3)]:
    a, b = zeta_product(s, P), zeta_product_via_s3(s, P)
    print(s, P, a == b, a.to_dict()["value_lo"], a.to_dict()["value_hi"])

# %%
import math

est = zeta_product(2, 10**6)
print(est.contains(math.pi**2 / 6), f"{est.width:.2e}")
