"""Cross-validation suites: dual evaluation paths, oracle equivalence, bounds.

Each suite exercises one family of exact identities on finite grids and
reports how many checks ran and which failed.  The CLI `verify` command
drives these; the acceptance tests reuse them with the full grids.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field as dc_field

from . import counts, oracle
from .combinatorics import (
    alternating_prefix_sum,
    binom,
    blockwise_alternating_sum,
    blockwise_alternating_sum_literal,
    falling_factorial,
)
from .gf import Field, make_field

__all__ = [
    "SuiteResult",
    "ORACLE_GRID_Q",
    "grid_fields",
    "canonical_exclusion_sets",
    "random_exclusion_sets",
    "nested_residue_sum",
    "is_unimodal",
    "check_binomial_identities",
    "check_kernel_identities",
    "check_count_relations",
    "check_closed_vs_oracle",
    "check_bounds",
    "check_nested_kernel_bounds",
    "check_structural",
    "run_all",
]

ORACLE_GRID_Q = (4, 5, 7, 8, 9, 11, 13, 16, 25, 27)

_FACTORIZATION = {
    4: (2, 2), 5: (5, 1), 7: (7, 1), 8: (2, 3), 9: (3, 2),
    11: (11, 1), 13: (13, 1), 16: (2, 4), 25: (5, 2), 27: (3, 3),
}

MAX_STORED_FAILURES = 25


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[str] = dc_field(default_factory=list)
    _failure_count: int = 0

    @property
    def ok(self) -> bool:
        return self._failure_count == 0

    @property
    def failure_count(self) -> int:
        return self._failure_count

    def passed(self, count: int = 1) -> None:
        self.checks += count

    def failed(self, message: str) -> None:
        self.checks += 1
        self._failure_count += 1
        if len(self.failures) < MAX_STORED_FAILURES:
            self.failures.append(message)

    def require(self, condition: bool, message: str) -> None:
        if condition:
            self.passed()
        else:
            self.failed(message)


def grid_fields(max_q: int | None = None) -> list[Field]:
    """The cross-validation grid fields, optionally capped by size."""
    out = []
    for q in ORACLE_GRID_Q:
        if max_q is not None and q > max_q:
            continue
        p, e = _FACTORIZATION[q]
        out.append(make_field(p, e))
    return out


def canonical_exclusion_sets(field: Field, c: int, limit: int = 20) -> list[counts.ExclusionSet]:
    """The first `limit` c-element exclusion sets in encoding order."""
    combos = itertools.islice(itertools.combinations(field.elements(), c), limit)
    return [counts.ExclusionSet(field, combo) for combo in combos]


def random_exclusion_sets(
    field: Field, c: int, count: int, rng: random.Random
) -> list[counts.ExclusionSet]:
    """Seeded random c-element exclusion sets (deterministic given rng state)."""
    out = []
    for _ in range(count):
        encs = rng.sample(range(field.q), c)
        out.append(counts.ExclusionSet(field, tuple(field.dec(m) for m in encs)))
    return out


def standard_exclusion_sets(field: Field, max_c: int, rng: random.Random | None = None):
    """The grid's exclusion sets: empty, all singletons, 20 canonical sets
    for each 2 <= c <= max_c, plus a few random extras when rng given."""
    sets = [counts.ExclusionSet(field, ())]
    sets += [counts.ExclusionSet(field, (x,)) for x in field.elements()]
    for c in range(2, max_c + 1):
        if c > field.q - 1:
            break
        sets += canonical_exclusion_sets(field, c, 20)
        if rng is not None:
            sets += random_exclusion_sets(field, c, 5, rng)
    return sets


# -- identity suites -----------------------------------------------------------


def check_binomial_identities() -> SuiteResult:
    """Alternating-sum identities and binomial basics on their stated grids."""
    res = SuiteResult("binomial-identities")
    for x in range(-50, 51):
        for k in range(0, 51):
            res.require(
                binom(x, k) * math.factorial(k) == falling_factorial(x, k),
                f"binom*k! != falling factorial at x={x}, k={k}",
            )
            if k >= 1:
                res.require(
                    binom(x, k) == binom(x - 1, k - 1) + binom(x - 1, k),
                    f"Pascal fails at x={x}, k={k}",
                )
    for r in range(-20, 201):
        # literal prefix built incrementally per r
        acc = 0
        term = 1  # binom(r, 0)
        for m in range(0, 61):
            if m > 0:
                term = term * (r - m + 1)
                assert term % m == 0
                term //= m
            acc += (-1) ** m * term
            res.require(
                acc == alternating_prefix_sum(r, m),
                f"alternating prefix sum fails at r={r}, m={m}",
            )
    for p in (2, 3, 5, 7):
        for a in range(-5, 101):
            for k in range(0, 101):
                closed = blockwise_alternating_sum(a, k, p)
                res.require(
                    closed == blockwise_alternating_sum_literal(a, k, p),
                    f"blockwise alternating sum fails at a={a}, k={k}, p={p}",
                )
                if a >= 0:
                    res.require(
                        closed <= p * binom(a, k // p),
                        f"blockwise sum bound fails at a={a}, k={k}, p={p}",
                    )
    return res


def check_kernel_identities(max_q: int | None = None) -> SuiteResult:
    """Dual evaluation paths of the kernel sequences on the grid fields."""
    res = SuiteResult("kernel-identities")
    for f in grid_fields(max_q):
        q, p = f.q, f.p
        for k in range(q):
            closed = counts.tuple_count_difference(q, p, k)
            res.require(
                closed == counts.tuple_count_difference_recursive(q, p, k),
                f"difference sequence paths disagree at q={q}, k={k}",
            )
            res.require(
                counts.error_kernel(q, p, k) * math.factorial(k) == (-1) ** k * closed,
                f"error kernel vs difference sequence at q={q}, k={k}",
            )
        for c in range(1, 5):
            for k in range(min(q, 21)):
                direct = counts.iterated_error_kernel(q, p, c, k)
                res.require(
                    direct == counts.iterated_error_kernel_prefix(q, p, c, k),
                    f"iterated kernel paths disagree at q={q}, c={c}, k={k}",
                )
                if q == p and k < p:
                    res.require(
                        direct == -binom(k + c - 1, c - 1),
                        f"prime-field kernel form fails at q={q}, c={c}, k={k}",
                    )
        for k in range(min(q, 31)):
            for b in f.elements():
                res.require(
                    counts.residue_class_error_sum(q, p, k, b)
                    == counts.residue_class_error_sum_literal(q, p, k, b),
                    f"residue sum paths disagree at q={q}, k={k}, b={b}",
                )
    return res


def check_count_relations(max_q: int | None = None) -> SuiteResult:
    """Ordered-count relations tying the full and punctured fields together."""
    res = SuiteResult("count-relations")
    for f in grid_fields(max_q):
        q = f.q

        def m_full(k, b):
            return math.factorial(k) * counts.count_full_field(f, k, b)

        def m_star(k, b):
            if k > q - 1:
                return 0
            return math.factorial(k) * counts.count_punctured_field(f, k, b)

        one, zero = f.one, f.zero
        for k in range(1, q + 1):
            res.require(
                m_full(k, one) == m_star(k, one) + k * m_star(k - 1, one),
                f"full/punctured split (b=1) fails at q={q}, k={k}",
            )
            res.require(
                m_full(k, zero) == m_star(k, zero) + k * m_star(k - 1, zero),
                f"full/punctured split (b=0) fails at q={q}, k={k}",
            )
            res.require(
                falling_factorial(q, k) == (q - 1) * m_full(k, one) + m_full(k, zero),
                f"permutation partition (full) fails at q={q}, k={k}",
            )
            res.require(
                falling_factorial(q - 1, k)
                == (q - 1) * m_star(k, one) + m_star(k, zero),
                f"permutation partition (punctured) fails at q={q}, k={k}",
            )
            for b in f.elements():
                if k % f.p == 0:
                    res.require(
                        m_full(k, b) == q * m_star(k - 1, b),
                        f"p|k reduction fails at q={q}, k={k}, b={b}",
                    )
                for cc in f.elements():
                    res.require(
                        m_full(k, b)
                        == m_star(k, b - k * cc) + k * m_star(k - 1, b - k * cc),
                        f"pivot-element split fails at q={q}, k={k}, b={b}, c={cc}",
                    )
    return res


def check_closed_vs_oracle(
    max_q: int | None = None, max_c: int = 3, seed: int | None = None
) -> SuiteResult:
    """Formula engine against the DP oracle on the whole grid."""
    res = SuiteResult("closed-vs-oracle")
    rng = random.Random(seed) if seed is not None else None
    for f in grid_fields(max_q):
        els = f.elements()
        for excl in standard_exclusion_sets(f, max_c, rng):
            grid = counts.count_grid(excl)
            table = oracle.dp_count_table(excl)
            for k in range(excl.n + 1):
                for b in els:
                    got, want = grid[k][b.enc], table.count(k, b)
                    res.require(
                        got == want,
                        f"oracle mismatch q={f.q} "
                        f"excl={[str(a) for a in excl.excluded]} k={k} b={b}: "
                        f"formula {got} != oracle {want}",
                    )
    return res


def check_bounds(
    max_q: int | None = None, max_c: int = 3, literal: bool = False
) -> SuiteResult:
    """Error-bound inequalities over the grid queries with n <= q - 2.

    The prime-field and independent-mode inequalities hold everywhere and
    are always checked.  The general-mode constant is too small at c = 2
    whenever <k>_p < p - 1 (e.g. q = 9, n = 7, k = 1, b = 0 has scaled
    error 7 against the bound 6), so by default the general mode is
    checked for c >= 3 only; literal=True checks it for c = 2 as well,
    which is what the acceptance suite reports on.
    """
    res = SuiteResult("error-bounds")
    for f in grid_fields(max_q):
        q, p = f.q, f.p
        els = f.elements()
        for excl in standard_exclusion_sets(f, max_c):
            n = excl.n
            if n > q - 2:
                continue
            check_general = literal or (q - n) >= 3
            grid = counts.count_grid(excl)
            for k in range(1, n + 1):
                if q > p:
                    general = counts.error_bound(q, p, n, k, "general").scaled
                    independent = counts.error_bound(q, p, n, k, "independent").scaled
                    if 2 * k <= n:
                        # the refinement holds in the symmetry-reduced range;
                        # past it the general factor C(q/p-1, floor(k/p))
                        # shrinks while the independent max sticks
                        res.require(
                            independent <= general,
                            f"independent bound above general at q={q}, n={n}, k={k}",
                        )
                    prime = None
                else:
                    general = independent = None
                    prime = counts.error_bound(q, p, n, k, "prime_field")
                main = binom(n, k)
                for b in els:
                    err = q * grid[k][b.enc] - main
                    if prime is not None:
                        res.require(
                            abs(err + prime.shift) <= prime.scaled,
                            f"prime-field bound fails at q={q}, n={n}, k={k}, b={b}",
                        )
                        continue
                    if check_general:
                        res.require(
                            abs(err) <= general,
                            f"general bound fails at q={q}, n={n}, k={k}, b={b}",
                        )
                    if counts._shifted_rank_full(f, excl.excluded, k, b):
                        res.require(
                            abs(err) <= independent,
                            f"independent bound fails at q={q}, n={n}, k={k}, b={b}",
                        )
    return res


def nested_residue_sum(field: Field, k: int, b, extra_points) -> int:
    """The nested sum of residue-class kernel sums for exclusions
    {0, 1, a_3, ..., a_c}; extra_points lists (a_3, ..., a_c)."""
    q, p = field.q, field.p
    a_rev = list(reversed(extra_points))  # index j pairs with a_{c+1-j}

    def rec(t: int, k_rem: int, shift) -> int:
        if t == len(a_rev):
            return counts.residue_class_error_sum(
                q, p, k_rem, field.scalar(k_rem) - b + shift
            )
        return sum(rec(t + 1, k_rem - i, shift + i * a_rev[t]) for i in range(k_rem + 1))

    return rec(0, k, field.zero)


def check_nested_kernel_bounds(max_q: int = 32) -> SuiteResult:
    """Nested-kernel identities and bounds for c up to 4 on small fields.

    The count identity (counts written through the iterated kernel and
    the nested residue sums) is exact for every k.  The one-sided bound
    on q*S - R is checked under k <= (q - c)/2, the reduction every count
    satisfies by complement symmetry (outside it the bound can fail, e.g.
    q = 9, c = 2, k = 6).
    """
    res = SuiteResult("nested-kernel-bounds")
    for f in grid_fields(max_q):
        q, p = f.q, f.p
        els = f.elements()
        if q < 4:
            continue
        for c in (2, 3, 4):
            if c > q - 1:
                continue
            extras_pool = [x for x in els if x not in (f.zero, f.one)]
            if c == 2:
                choices = [()]
            elif c == 3:
                choices = [(x,) for x in extras_pool[:3]]
            else:
                choices = list(itertools.combinations(extras_pool, 2))[:3]
            for extra in choices:
                excl = counts.ExclusionSet(f, (f.zero, f.one) + tuple(extra))
                grid = counts.count_grid(excl, k_max=min(12, excl.n))
                for k in range(min(12, excl.n) + 1):
                    rck = counts.iterated_error_kernel(q, p, c, k)
                    sign = (-1) ** k
                    for b in els:
                        sck = nested_residue_sum(f, k, b, extra)
                        if q > p and 2 * k <= q - c:
                            res.require(
                                q * sck - rck
                                <= (q - p) * binom(k + c - 2, c - 2) * binom(q // p - 1, k // p),
                                f"nested kernel bound fails at q={q}, c={c}, k={k}, b={b}",
                            )
                        res.require(
                            q * grid[k][b.enc]
                            == binom(q - c, k) + sign * rck - q * sign * sck,
                            f"nested-sum count form fails at q={q}, c={c}, k={k}, b={b}",
                        )
                    limit = p * max(
                        binom(k + c - 2 - j, c - 2) * binom(q // p - 1, j // p)
                        for j in range(k + 1)
                    )
                    res.require(
                        rck <= limit,
                        f"kernel max bound fails at q={q}, c={c}, k={k}",
                    )
    return res


def is_unimodal(seq) -> bool:
    """Rises (weakly) to the first maximum, then falls (weakly)."""
    if not seq:
        return True
    peak = seq.index(max(seq))
    return all(seq[i] <= seq[i + 1] for i in range(peak)) and all(
        seq[i] >= seq[i + 1] for i in range(peak, len(seq) - 1)
    )


def check_structural(
    max_q: int | None = None, include_large: bool = True, literal: bool = False
) -> SuiteResult:
    """Row sums, symmetry, and unimodality of the count sequences.

    Symmetry under (k, b) -> (|D| - k, -b) is exact for every b.
    Unimodality over 1 <= k <= |D| holds for every nonzero target but
    fails at b = 0 in every field (the punctured sequence ends
    ..., N(1,0) = 0, 1 because the whole of F_q* sums to zero, and
    characteristic 2 gives N(2,0) = 0 dips; q = 7 even dips mid-sequence,
    3, 2, 3).  The default checks the attainable b != 0 claim;
    literal=True checks every b, which is what the acceptance suite
    reports on.
    """
    res = SuiteResult("structural")
    fields = grid_fields(max_q)
    if include_large and (max_q is None or max_q >= 128):
        fields.append(make_field(2, 7))
    for f in fields:
        q = f.q
        els = f.elements()
        if q <= 32:
            for excl in standard_exclusion_sets(f, 3):
                grid = counts.count_grid(excl)
                for k in range(excl.n + 1):
                    res.require(
                        sum(grid[k]) == binom(excl.n, k),
                        f"row sum fails at q={q}, "
                        f"excl={[str(a) for a in excl.excluded]}, k={k}",
                    )
        for b in els:
            full = [counts.count_full_field(f, k, b) for k in range(0, q + 1)]
            punct = [counts.count_punctured_field(f, k, b) for k in range(0, q)]
            for k in range(0, q + 1):
                res.require(
                    full[k] == counts.count_full_field(f, q - k, -b),
                    f"full-field symmetry fails at q={q}, k={k}, b={b}",
                )
            for k in range(0, q):
                res.require(
                    punct[k] == counts.count_punctured_field(f, q - 1 - k, -b),
                    f"punctured symmetry fails at q={q}, k={k}, b={b}",
                )
            if literal or not b.is_zero():
                res.require(
                    is_unimodal(full[1:]),
                    f"full-field unimodality fails at q={q}, b={b}",
                )
                res.require(
                    is_unimodal(punct[1:]),
                    f"punctured unimodality fails at q={q}, b={b}",
                )
    return res


def run_all(max_q: int = 27, max_c: int = 3, seed: int | None = 0) -> list[SuiteResult]:
    """Every suite at the given grid size; deterministic given the seed."""
    return [
        check_binomial_identities(),
        check_kernel_identities(max_q),
        check_count_relations(max_q),
        check_closed_vs_oracle(max_q, max_c, seed),
        check_bounds(max_q, max_c),
        check_nested_kernel_bounds(min(max_q, 32)),
        check_structural(max_q, include_large=False),
    ]
