"""Exhaustive search over n in blocks, reusing sigma(n) across the k loop."""

from __future__ import annotations

import logging
import math
import os
import time
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field

from spoofperfect import _kernels
from spoofperfect.arithmetic import SIEVE_LIMIT, RangeTooLargeError
from spoofperfect.spoof import SpoofNumber, check_candidate, verify_spoof

log = logging.getLogger(__name__)

TABLE_N_MAX = 16_000_000
FAST_N_MAX = 100_000
# Every published row has k <= 280, and k in [320, 480] adds four more odd
# spoofs with prime coprime x below n = 1.6e7, so the published run must
# have stopped somewhere in [280, 319].
DEFAULT_K_MAX = 300
DEFAULT_ALPHA_MAX = 10
DEFAULT_BLOCK_SIZE = 1 << 16


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SearchConfig:
    n_max: int = TABLE_N_MAX
    k_max: int = DEFAULT_K_MAX
    alpha_max: int = DEFAULT_ALPHA_MAX
    n_min: int = 2
    odd_only: bool = True
    require_x_prime: bool = True
    require_x_coprime: bool = True
    block_size: int = DEFAULT_BLOCK_SIZE

    def __post_init__(self):
        if self.n_min < 1 or self.n_max < self.n_min:
            raise ConfigError(f"need 1 <= n_min <= n_max, got [{self.n_min}, {self.n_max}]")
        if self.k_max < 2:
            raise ConfigError("k_max must be at least 2")
        if self.alpha_max < 1:
            raise ConfigError("alpha_max must be at least 1")
        if self.block_size < 1:
            raise ConfigError("block_size must be positive")
        if self.n_max > SIEVE_LIMIT:
            raise RangeTooLargeError(f"n_max = {self.n_max} exceeds 2**40")
        if self.k_max * self.n_max >= 1 << 63:
            raise ConfigError("k_max * n_max must fit in 63 bits")

    def accepts(self, spoof: SpoofNumber) -> bool:
        if self.odd_only and not spoof.s_odd:
            return False
        if self.require_x_prime and not spoof.x_is_prime:
            return False
        if self.require_x_coprime and not spoof.x_coprime_n:
            return False
        return True


@dataclass
class SearchReport:
    results: list[SpoofNumber]
    n_scanned: int
    elapsed: float
    config: SearchConfig
    raw_hits: int = field(default=0)


def sort_key(spoof: SpoofNumber) -> tuple[int, ...]:
    return spoof.s, spoof.k, spoof.alpha, spoof.n, spoof.x


def partition_range(n_min: int, n_max: int, block_size: int) -> list[tuple[int, int]]:
    if block_size < 1 or n_min > n_max:
        raise ValueError("invalid partition request")
    return [(lo, min(lo + block_size - 1, n_max)) for lo in range(n_min, n_max + 1, block_size)]


def _run_block(lo: int, hi: int, config: SearchConfig) -> tuple[list[SpoofNumber], int]:
    sigma = _kernels.sigma_segment(lo, hi, math.isqrt(hi))
    hits = _kernels.scan_segment(lo, sigma, config.k_max, config.alpha_max)
    found = []
    for n, x, k, alpha in hits.tolist():
        # odd s needs odd n and odd x; skip the classification work early
        if config.odd_only and (n * x) % 2 == 0:
            continue
        spoof = SpoofNumber.from_parts(n, x, k, alpha)
        if not config.accepts(spoof):
            continue
        sigma_n = int(sigma[n - lo])
        if check_candidate(n, sigma_n, k, config.alpha_max) != [spoof] or not verify_spoof(spoof):
            raise RuntimeError(f"compiled scan produced an unverifiable hit {spoof}")
        found.append(spoof)
    return found, len(hits)


def search(
    config: SearchConfig,
    *,
    workers: int = 1,
    on_block: Callable[[int, int, list[SpoofNumber]], None] | None = None,
) -> SearchReport:
    """Scan n in [n_min, n_max] and k in [2, k_max] for spoofs of order <= alpha_max.

    ``workers`` threads process disjoint blocks (0 means one per CPU).
    ``on_block(done, total, found)`` is called from the calling thread as
    blocks finish, in completion order; the report itself is sorted and does
    not depend on ``workers`` or ``block_size``.
    """
    if workers < 0:
        raise ConfigError("workers must be >= 0")
    workers = workers or os.cpu_count() or 1
    blocks = partition_range(config.n_min, config.n_max, config.block_size)
    start = time.perf_counter()
    results: list[SpoofNumber] = []
    raw = 0
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_run_block, lo, hi, config) for lo, hi in blocks]
        for done, fut in enumerate(as_completed(futures), 1):
            found, nraw = fut.result()
            results.extend(found)
            raw += nraw
            if on_block is not None:
                on_block(done, len(blocks), found)
    results.sort(key=sort_key)
    elapsed = time.perf_counter() - start
    n_scanned = max(0, config.n_max - max(config.n_min, 2) + 1)
    log.debug("scanned %d values of n in %.2fs, %d raw hits", n_scanned, elapsed, raw)
    return SearchReport(results, n_scanned, elapsed, config, raw)
