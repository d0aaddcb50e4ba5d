"""Robin-type bounds evaluated on spoof numbers.

If the Riemann Hypothesis holds, sigma(n) < e^gamma n ln ln n for n > 5040.
Substituting sigma(n) = k n x / S_alpha(x) for a spoof gives

    k x / S_alpha(x) < e^gamma ln ln n.

These are conditional statements; a report only says whether the numbers
satisfy the inequality, never that it is proven.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from spoofperfect.arithmetic import geometric_sum
from spoofperfect.spoof import SpoofNumber

EULER_GAMMA = 0.5772156649015329
E_GAMMA = math.exp(EULER_GAMMA)  # 1.781072417990198
ROBIN_N0 = 5040
BORDERLINE_RTOL = 1e-9


@dataclass(frozen=True)
class RobinReport:
    lhs: Fraction
    rhs: float
    applicable: bool
    satisfied: bool
    borderline: bool = False
    gamma_used: float = EULER_GAMMA

    @property
    def lhs_float(self) -> float:
        return float(self.lhs)

    @property
    def verdict(self) -> str:
        if not self.applicable:
            return "not applicable"
        if self.borderline:
            return "BORDERLINE"
        return "satisfied" if self.satisfied else "violated"


def _log_log(n: int) -> float:
    return math.log(math.log(n))


def _evaluate(lhs: Fraction, n: int, applicable: bool) -> RobinReport:
    rhs = E_GAMMA * _log_log(n)
    borderline = abs(float(lhs) - rhs) <= BORDERLINE_RTOL * abs(rhs)
    satisfied = applicable and not borderline and lhs < Fraction(rhs)
    return RobinReport(lhs, rhs, applicable, satisfied, applicable and borderline)


def robin_check(spoof: SpoofNumber) -> RobinReport:
    """Evaluate k x / S_alpha(x) < e^gamma ln ln n; only applicable for n > 5040."""
    if spoof.n < 2:
        raise ValueError("robin_check needs n >= 2")
    lhs = Fraction(spoof.k * spoof.x, geometric_sum(spoof.x, spoof.alpha))
    return _evaluate(lhs, spoof.n, spoof.n > ROBIN_N0)


def descartes_check(n: int, x: int) -> RobinReport:
    """The k = 2, alpha = 1 case, 2x/(x+1) < e^gamma ln ln n, with no n > 5040 guard."""
    if n < 2 or x < 2:
        raise ValueError("descartes_check needs n, x >= 2")
    return _evaluate(Fraction(2 * x, x + 1), n, True)


def expected_threshold(k: int) -> float:
    """ln ln of the point past which Robin's bound first allows a k-perfect n.

    sigma(n) = k n is compatible with sigma(n) < e^gamma n ln ln n only once
    ln ln n > k e^-gamma; the threshold itself is returned on the double-log
    scale because e^(e^(k e^-gamma)) overflows a float already for k around 12.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    return k / E_GAMMA


def threshold_value(k: int) -> float | None:
    """e^(e^(k e^-gamma)) when it is a finite float, else None."""
    try:
        return math.exp(math.exp(expected_threshold(k)))
    except OverflowError:
        return None
