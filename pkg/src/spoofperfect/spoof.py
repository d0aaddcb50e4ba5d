"""Spoof k-perfect numbers of order alpha.

s = n*x is a spoof k-perfect number of order alpha when

    sigma(n) * (1 + x + ... + x**alpha) == k * n * x,

i.e. s would be k-perfect if x were a prime occurring to the power alpha.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from spoofperfect.arithmetic import (
    OVERFLOW,
    factorize,
    geometric_sum,
    is_prime,
    reduce_ratio,
    sigma_from_factors,
)

_LIMIT_128 = 1 << 128


def classify(n: int, x: int) -> tuple[bool, bool, bool]:
    """(x is prime, gcd(n, x) == 1, n*x is odd)."""
    if n < 2 or x < 2:
        raise ValueError("classify needs n, x >= 2")
    return is_prime(x), math.gcd(n, x) == 1, (n * x) % 2 == 1


@dataclass(frozen=True)
class SpoofNumber:
    """One (s, n, x, k, alpha) tuple; the flags are derived from n and x."""

    s: int
    n: int
    x: int
    k: int
    alpha: int
    x_is_prime: bool = field(init=False, compare=False)
    x_coprime_n: bool = field(init=False, compare=False)
    s_odd: bool = field(init=False, compare=False)

    def __post_init__(self):
        flags = classify(self.n, self.x)
        object.__setattr__(self, "x_is_prime", flags[0])
        object.__setattr__(self, "x_coprime_n", flags[1])
        object.__setattr__(self, "s_odd", flags[2])

    @classmethod
    def from_parts(cls, n: int, x: int, k: int, alpha: int) -> SpoofNumber:
        return cls(n * x, n, x, k, alpha)

    @property
    def key(self) -> tuple[int, int, int, int, int]:
        return self.s, self.n, self.x, self.k, self.alpha


def check_candidate(n: int, sigma_n: int, k: int, alpha_max: int) -> list[SpoofNumber]:
    """Test whether sigma(n)/(k n) yields a spoof factor for some alpha <= alpha_max.

    Reduce q = sigma(n)/(k n) to num/den, set delta = den - num, and accept
    the first alpha with delta == S_alpha(num) - num and num > 1; the spoof
    factor is x = num.  The returned list has at most one element.
    """
    if sigma_n <= 0:
        raise ValueError("sigma_n must be positive")
    if k < 2:
        raise ValueError("k must be at least 2")
    if n < 2 or alpha_max < 1:
        raise ValueError("need n >= 2 and alpha_max >= 1")
    q = reduce_ratio(sigma_n, k * n)
    num, den = q.num, q.den
    if num <= 1:
        return []
    delta = den - num
    for alpha in range(1, alpha_max + 1):
        s_alpha = geometric_sum(num, alpha, cap=den)
        if s_alpha is OVERFLOW:
            # S_alpha only grows with alpha
            break
        if delta == s_alpha - num:
            return [SpoofNumber.from_parts(n, num, k, alpha)]
    return []


def _check_128(value: int, what: str) -> int:
    if value >= _LIMIT_128:
        raise OverflowError(f"{what} does not fit in 128 bits")
    return value


def verify_spoof(candidate: SpoofNumber) -> bool:
    """Check sigma(n) * S_alpha(x) == k*n*x directly.

    sigma(n) comes from the factorization of n and S_alpha(x) from explicit
    powers, so this never shares code with the sieve or the reduction test.
    """
    n, x, k, alpha = candidate.n, candidate.x, candidate.k, candidate.alpha
    if n < 2 or x < 2 or k < 1 or alpha < 1:
        raise ValueError("verify_spoof needs n, x >= 2 and k, alpha >= 1")
    sigma_n = sigma_from_factors(factorize(n))
    s_alpha = 0
    for a in range(alpha + 1):
        s_alpha += _check_128(x**a, f"{x}^{a}")
    lhs = _check_128(sigma_n * _check_128(s_alpha, "S_alpha(x)"), "sigma(n)*S_alpha(x)")
    rhs = _check_128(k * n * x, "k*n*x")
    return lhs == rhs
