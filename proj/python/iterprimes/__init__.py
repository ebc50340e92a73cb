"""Iterated primes p_n^(k), their counting functions, and explicit bounds."""

from ._core import (
    BudgetExceeded,
    DomainError,
    Error,
    HypothesisViolated,
    InapplicableIndex,
    IteratedPrimes,
    OutOfSupportedRange,
    check_bounds,
    certify_default,
    closed_form_floor,
    comparator,
    is_prime,
    log_growth_residual,
    nth_prime,
    prime_count,
    sieve_segment,
    step_ratio_power,
)

__all__ = [
    "BudgetExceeded",
    "DomainError",
    "Error",
    "HypothesisViolated",
    "InapplicableIndex",
    "IteratedPrimes",
    "OutOfSupportedRange",
    "check_bounds",
    "certify_default",
    "closed_form_floor",
    "comparator",
    "is_prime",
    "log_growth_residual",
    "nth_prime",
    "prime_count",
    "sieve_segment",
    "step_ratio_power",
]
