"""Exact integer combinatorics on arbitrary-precision integers.

Everything here is exact; no floating point.  Binomial coefficients take
an integer upper argument of either sign via the falling-factorial
definition C(x, k) = (x)_k / k!, so e.g. C(-1, k) = (-1)**k.
"""

from __future__ import annotations

import math

__all__ = [
    "falling_factorial",
    "binom",
    "alternating_prefix_sum",
    "alternating_prefix_sum_literal",
    "blockwise_alternating_sum",
    "blockwise_alternating_sum_literal",
]


def falling_factorial(x: int, k: int) -> int:
    """(x)_k = x (x-1) ... (x-k+1), with (x)_0 = 1 (also for x = 0)."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    out = 1
    for i in range(k):
        out *= x - i
    return out


def binom(x: int, k: int) -> int:
    """C(x, k) = (x)_k / k! for integer x of either sign; exact."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    if 0 <= x < k:
        return 0
    num = falling_factorial(x, k)
    den = math.factorial(k)
    assert num % den == 0
    return num // den


def alternating_prefix_sum(r: int, m: int) -> int:
    """sum_{k=0}^{m} (-1)**k C(r, k), in closed form (-1)**m C(r-1, m)."""
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    return (-1) ** m * binom(r - 1, m)


def alternating_prefix_sum_literal(r: int, m: int) -> int:
    """Term-by-term evaluation of the same alternating prefix sum."""
    return sum((-1) ** k * binom(r, k) for k in range(m + 1))


def blockwise_alternating_sum(a: int, k: int, p: int) -> int:
    """sum_{j=0}^{k} -(-1)**floor(j/p) C(a, floor(j/p)), in closed form.

    The sign pattern is constant on blocks of p consecutive j, so the sum
    collapses to
        -p (-1)**n C(a-1, n) + (p-1-<k>_p) (-1)**n C(a, n)
    with n = floor(k/p) and <k>_p the least non-negative residue of k.
    """
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    n = k // p
    sign = (-1) ** n
    return -p * sign * binom(a - 1, n) + (p - 1 - k % p) * sign * binom(a, n)


def blockwise_alternating_sum_literal(a: int, k: int, p: int) -> int:
    """Term-by-term evaluation of the same blockwise alternating sum."""
    return sum(-((-1) ** (j // p)) * binom(a, j // p) for j in range(k + 1))
