"""Independent ground-truth counting by dynamic programming and enumeration.

The DP processes the elements of D one by one, maintaining the number of
j-element subsets of the processed prefix for every sum; it never touches
the closed formulas, so agreement with them is meaningful evidence.
Counts are exact Python integers throughout.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .combinatorics import binom
from .counts import ExclusionSet
from .gf import FieldElement
from .limits import check_guard

__all__ = ["CountTable", "dp_count_table", "naive_count"]

NAIVE_GUARD = 10**7


@dataclass(frozen=True)
class CountTable:
    """All N(k, b, D) for 0 <= k <= k_max, rows indexed by the encoding of b."""

    exclusions: ExclusionSet
    rows: tuple[tuple[int, ...], ...]

    def count(self, k: int, b: FieldElement) -> int:
        if not 0 <= k < len(self.rows):
            raise ValueError(f"k={k} outside the table (k_max={len(self.rows) - 1})")
        return self.rows[k][b.enc]

    @property
    def k_max(self) -> int:
        return len(self.rows) - 1


def dp_count_table(
    exclusions: ExclusionSet, k_max: int | None = None, order=None
) -> CountTable:
    """Tabulate N(k, b, D) by subset dynamic programming.

    State f[j][s] counts j-subsets of the processed prefix of D with sum
    s; each element x updates f[j][s + x] += f[j-1][s].  `order` replaces
    the canonical processing order (the table is order-independent; tests
    exercise that).
    """
    field = exclusions.field
    q = field.q
    domain = exclusions.domain() if order is None else tuple(order)
    n = len(domain)
    if k_max is None:
        k_max = n
    if not 0 <= k_max <= n:
        raise ValueError(f"k_max={k_max} outside [0, {n}]")

    f = [[0] * q for _ in range(k_max + 1)]
    f[0][0] = 1
    for processed, x in enumerate(domain):
        # s -> s + x on encodings
        add_x = [(field.dec(s) + x).enc for s in range(q)]
        top = min(processed + 1, k_max)
        for j in range(top, 0, -1):
            prev = f[j - 1]
            cur = f[j]
            for s in range(q):
                v = prev[s]
                if v:
                    cur[add_x[s]] += v
    return CountTable(exclusions, tuple(tuple(row) for row in f))


def naive_count(
    exclusions: ExclusionSet, k: int, b: FieldElement, max_enumeration: int = NAIVE_GUARD
) -> int:
    """Count k-subsets summing to b by literal enumeration.

    Guarded: refuses when C(n, k) exceeds max_enumeration.
    """
    domain = exclusions.domain()
    n = len(domain)
    if not 0 <= k <= n:
        raise ValueError(f"k={k} outside [0, {n}]")
    check_guard(binom(n, k), max_enumeration, f"enumerating C({n},{k}) subsets")
    zero = exclusions.field.zero
    total = 0
    for combo in itertools.combinations(domain, k):
        s = zero
        for x in combo:
            s = s + x
        if s == b:
            total += 1
    return total
