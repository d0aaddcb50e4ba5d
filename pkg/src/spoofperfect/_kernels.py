"""Compiled inner loops for the sigma sieve and the candidate scan.

Both kernels release the GIL, so blocks can be processed from a thread pool.
All arithmetic is int64; callers guarantee hi <= 2**40 and k_max * n_max < 2**63.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


@njit(cache=True, nogil=True)
def sigma_segment(lo, hi, root):
    """sigma(n) for lo <= n <= hi; ``root`` must be isqrt(hi).

    Every divisor pair (d, n // d) with d <= n // d is hit exactly once,
    so each segment costs O((hi - lo) log root + root).
    """
    out = np.zeros(hi - lo + 1, np.int64)
    for d in range(1, root + 1):
        q = (lo + d - 1) // d
        if q < d:
            q = d
        m = d * q
        while m <= hi:
            if q == d:
                out[m - lo] += d
            else:
                out[m - lo] += d + q
            q += 1
            m += d
    return out


@njit(cache=True, nogil=True)
def scan_segment(lo, sigma, k_max, alpha_max):
    """Run the candidate test for every (n, k) of a sieved segment.

    Returns an (m, 4) int64 array of hits (n, x, k, alpha), ordered by n then k.

    With sigma(n)/n = a/b in lowest terms, sigma(n)/(k n) reduces to
    (a/d) / (b k/d) where d = gcd(a, k).  A hit needs den = S_alpha(num),
    hence den == 1 (mod num), which is b*k == d (mod a).  The residue
    b*k mod a is carried along the k loop, so the gcd is only taken for the
    rare k whose residue is a non-zero value <= k.
    """
    hits = np.empty((16, 4), np.int64)
    count = 0
    for i in range(sigma.shape[0]):
        n = lo + i
        if n < 2:
            continue
        s = sigma[i]
        g = _gcd(s, n)
        a = s // g
        b = n // g
        r = b % a  # b*1 mod a; advanced before use, so k starts at 2
        for k in range(2, k_max + 1):
            r += b
            if r >= a:
                r -= a
            if r == 0 or r > k:
                continue
            d = _gcd(a, k)
            if r != d:
                continue
            num = a // d
            if num <= 1:
                continue
            den = (b * k) // d
            delta = den - num
            total = 1 + num
            for alpha in range(1, alpha_max + 1):
                if total - num == delta:
                    if count == hits.shape[0]:
                        grown = np.empty((2 * count, 4), np.int64)
                        grown[:count] = hits
                        hits = grown
                    hits[count, 0] = n
                    hits[count, 1] = num
                    hits[count, 2] = k
                    hits[count, 3] = alpha
                    count += 1
                    break
                # next sum would exceed den; also keeps total * num in int64
                if total > den // num:
                    break
                total = total * num + 1
    return hits[:count].copy()
