"""Power sums over the totatives of n, their inclusion-exclusion closed forms,
and Euler products (Artin's constant, zeta) rebuilt from S(3, p)."""

from .errors import (
    CompositeRecoveredError,
    DomainError,
    EulerSetError,
    InputError,
    InternalCheckError,
    NoIntegralPrimeError,
    NotPerfectSquareError,
    NotS3ValueError,
    ResourceError,
)
from .lab import AnsatzFit, RatioReport, VerifySummary, ansatz_fit, compare_across_k, ratio_report, verify_range
from .numbers import (
    BernoulliTable,
    FaulhaberPolynomial,
    PrimeFactorization,
    bernoulli,
    euler_phi,
    factorize,
    faulhaber,
    format_rational,
    is_prime,
    iter_primes,
    omega,
    radical,
    sieve_primes,
    squarefree_divisors,
)
from .powersums import (
    CoefficientVector,
    Method,
    PowerSumRecord,
    coefficient_vector,
    powersum,
    powersum_bruteforce,
    powersum_closed,
    powersum_general,
    totatives,
)
from .products import (
    PrimeReconstruction,
    ProductEstimate,
    artin_product,
    artin_term,
    artin_term_via_s3,
    prime_from_s3,
    s3_of_prime,
    zeta_product,
    zeta_product_via_s3,
)

__version__ = "0.1.0"
