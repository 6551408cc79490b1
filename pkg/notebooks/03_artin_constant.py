# %% [markdown]
# # Artin's constant from S(3, p)
#
# For a prime p, 4 S(3, p) = (p(p-1))^2. So 1 - 1/(2 sqrt S(3,p)) is exactly
# 1 - 1/(p(p-1)), the Euler factor of Artin's constant.

# %%
from eulerset import artin_product, artin_term, artin_term_via_s3, s3_of_prime

for p in (2, 3, 5, 7, 11):
    print(p, s3_of_prime(p), artin_term(p), artin_term_via_s3(p))

# %% [markdown]
# Truncated products come with a rigorous bracket: the partial product is an
# upper bound and the omitted factors cost at most exp(-2/P).

# %%
for P in (10**2, 10**3, 10**4, 10**5, 10**6):
    est = artin_product(P)
    print(P, est.terms_used, est.to_dict()["value_lo"], est.to_dict()["value_hi"], f"{est.width:.2e}")
