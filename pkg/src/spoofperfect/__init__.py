"""Search, verification and classification of odd spoof multiperfect numbers."""

from spoofperfect.arithmetic import (
    OVERFLOW,
    RangeTooLargeError,
    ReducedRatio,
    SigmaTable,
    factorize,
    geometric_sum,
    is_prime,
    reduce_ratio,
    sieve_sigma,
)
from spoofperfect.robin import RobinReport, descartes_check, expected_threshold, robin_check
from spoofperfect.search import ConfigError, SearchConfig, SearchReport, partition_range, search
from spoofperfect.spoof import SpoofNumber, check_candidate, classify, verify_spoof

__all__ = [
    "OVERFLOW",
    "ConfigError",
    "RangeTooLargeError",
    "ReducedRatio",
    "RobinReport",
    "SearchConfig",
    "SearchReport",
    "SigmaTable",
    "SpoofNumber",
    "check_candidate",
    "classify",
    "descartes_check",
    "expected_threshold",
    "factorize",
    "geometric_sum",
    "is_prime",
    "partition_range",
    "reduce_ratio",
    "robin_check",
    "search",
    "sieve_sigma",
    "verify_spoof",
]
