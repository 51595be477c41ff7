"""Numeric substrate: precision-tagged reals, exact sequences, primality."""

from .numeric import (
    GUARD_DIGITS,
    HiReal,
    format_decimal,
    format_scientific,
    gamma_one_quarter,
    gamma_three_quarters,
    pi_const,
    significant_agreement,
    to_fraction,
    workdps,
)
from .primes import (
    is_probable_prime,
    next_prime,
    primes_below,
    smallest_prime_with_digits,
    trial_factor,
)
from .sequences import (
    CACHE,
    SequenceCache,
    bernoulli,
    bernoulli_akiyama_tanigawa,
    bernoulli_from_tangent,
    bernoulli_via_zeta,
    euler_secant,
    tangent,
    von_staudt_denominator,
    zeta_even_rational,
    zigzag,
)

__all__ = [
    "CACHE",
    "GUARD_DIGITS",
    "HiReal",
    "SequenceCache",
    "bernoulli",
    "bernoulli_akiyama_tanigawa",
    "bernoulli_from_tangent",
    "bernoulli_via_zeta",
    "euler_secant",
    "format_decimal",
    "format_scientific",
    "gamma_one_quarter",
    "gamma_three_quarters",
    "is_probable_prime",
    "next_prime",
    "pi_const",
    "primes_below",
    "significant_agreement",
    "smallest_prime_with_digits",
    "tangent",
    "to_fraction",
    "trial_factor",
    "von_staudt_denominator",
    "workdps",
    "zeta_even_rational",
    "zigzag",
]
