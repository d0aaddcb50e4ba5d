"""Exact integer primitives: sigma sieve, ratio reduction, geometric sums,
primality and factorization.

Everything here works on plain Python ints (and int64 numpy arrays for the
sieve); nothing goes through floating point.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import cache

import numpy as np

from spoofperfect import _kernels

U64_MAX = (1 << 64) - 1
SIEVE_LIMIT = 1 << 40
# single-table span; search() never builds tables larger than a block
SIEVE_SPAN_LIMIT = 1 << 28
TRIAL_DIVISION_LIMIT = 1 << 20


class RangeTooLargeError(ValueError):
    """A requested range exceeds the sieve's resource guard."""


class _Overflow:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "OVERFLOW"

    def __bool__(self):
        return False


#: Returned by :func:`geometric_sum` when a partial sum passes the cap.
OVERFLOW = _Overflow()


@dataclass(frozen=True)
class SigmaTable:
    """sigma(n) for the contiguous range lo .. lo + len(values) - 1."""

    lo: int
    values: np.ndarray

    @property
    def hi(self) -> int:
        return self.lo + len(self.values) - 1

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> int:
        if not self.lo <= n <= self.hi:
            raise IndexError(f"{n} outside [{self.lo}, {self.hi}]")
        return int(self.values[n - self.lo])

    def items(self):
        for i, v in enumerate(self.values.tolist()):
            yield self.lo + i, v


@dataclass(frozen=True)
class ReducedRatio:
    num: int
    den: int

    def __post_init__(self):
        if self.num <= 0 or self.den <= 0 or math.gcd(self.num, self.den) != 1:
            raise ValueError(f"{self.num}/{self.den} is not a reduced positive ratio")


def sieve_sigma(lo: int, hi: int) -> SigmaTable:
    """Divisor sums for every n in [lo, hi] from a segmented divisor-pair sieve."""
    if lo < 1 or lo > hi:
        raise ValueError(f"invalid range [{lo}, {hi}]")
    if hi > SIEVE_LIMIT:
        raise RangeTooLargeError(f"hi = {hi} exceeds the sieve limit 2**40")
    if hi - lo + 1 > SIEVE_SPAN_LIMIT:
        raise RangeTooLargeError(f"span {hi - lo + 1} exceeds 2**28; sieve in blocks")
    values = _kernels.sigma_segment(lo, hi, math.isqrt(hi))
    values.setflags(write=False)
    return SigmaTable(lo, values)


def reduce_ratio(numerator: int, denominator: int) -> ReducedRatio:
    if numerator <= 0 or denominator <= 0:
        raise ValueError("reduce_ratio needs positive arguments")
    g = math.gcd(numerator, denominator)
    return ReducedRatio(numerator // g, denominator // g)


def geometric_sum(x: int, alpha: int, cap: int | None = None):
    """1 + x + ... + x**alpha, or OVERFLOW once a partial sum exceeds ``cap``.

    ``cap=None`` disables the cap.
    """
    if x < 2 or alpha < 1:
        raise ValueError(f"geometric_sum needs x >= 2 and alpha >= 1, got x={x}, alpha={alpha}")
    total = 1
    term = 1
    for _ in range(alpha):
        term *= x
        total += term
        if cap is not None and total > cap:
            return OVERFLOW
    return total


# Deterministic below 318665857834031151167461 (> 2**78), so for all 64-bit inputs.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    for p in _MR_BASES:
        if m % p == 0:
            return m == p
    d = m - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        y = pow(a, d, m)
        if y == 1 or y == m - 1:
            continue
        for _ in range(r - 1):
            y = y * y % m
            if y == m - 1:
                break
        else:
            return False
    return True


@cache
def small_primes(limit: int = TRIAL_DIVISION_LIMIT) -> tuple[int, ...]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def _pollard_brent(m: int, rng: random.Random) -> int:
    """A non-trivial factor of the odd composite m."""
    while True:
        y = rng.randrange(1, m)
        c = rng.randrange(1, m)
        batch = 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % m
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(batch, r - k)):
                    y = (y * y + c) % m
                    q = q * abs(x - y) % m
                g = math.gcd(q, m)
                k += batch
            r *= 2
        if g == m:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % m
                g = math.gcd(abs(x - ys), m)
        if g != m:
            return g


def _split(m: int, out: dict[int, int], rng: random.Random) -> None:
    if m == 1:
        return
    if is_prime(m):
        out[m] = out.get(m, 0) + 1
        return
    d = _pollard_brent(m, rng)
    _split(d, out, rng)
    _split(m // d, out, rng)


@cache
def _small_primes_u64() -> np.ndarray:
    return np.array(small_primes(), dtype=np.uint64)


def factorize(m: int) -> list[tuple[int, int]]:
    """Prime factorization as [(p, e), ...] with p increasing.

    Trial division by primes below 2**20, then Pollard-Brent on what remains.
    """
    if m < 1:
        raise ValueError("factorize needs m >= 1")
    primes = _small_primes_u64()
    primes = primes[: np.searchsorted(primes, min(TRIAL_DIVISION_LIMIT, math.isqrt(m)), "right")]
    if m <= U64_MAX:
        divisors = primes[np.uint64(m) % primes == 0].tolist()
    else:
        divisors = [p for p in primes.tolist() if m % p == 0]
    found: dict[int, int] = {}
    for p in divisors:
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        found[p] = e
    if m > 1:
        if is_prime(m):
            found[m] = 1
        else:
            _split(m, found, random.Random(m))
    return sorted(found.items())


def sigma_from_factors(factors: list[tuple[int, int]]) -> int:
    result = 1
    for p, e in factors:
        result *= (p ** (e + 1) - 1) // (p - 1)
    return result


def sigma(n: int) -> int:
    """sigma(n) by factorization; the per-n counterpart of :func:`sieve_sigma`."""
    return sigma_from_factors(factorize(n))


def format_factorization(m: int) -> str:
    """'19^2*61' style rendering; '1' for m == 1."""
    parts = [f"{p}^{e}" if e > 1 else str(p) for p, e in factorize(m)]
    return "*".join(parts) or "1"
