"""Exact counts of k-element subsets of D = F_q \\ {a_1,...,a_c} with a given sum.

N(k, b, D) is the number of k-element subsets of D whose elements sum to
b; M(k, b, D) = k! * N counts ordered tuples with distinct entries.  For
complements of size c <= 2 there are closed formulas; larger complements
reduce by inclusion-exclusion on whether the largest excluded point
appears in the subset, memoized per evaluation, with a fast path when the
shifted target and exclusions are linearly independent over the prime
subfield.  Every division by q in the formulas is exact and asserted so;
a nonzero remainder signals a transcription bug, not bad input.

All arithmetic is exact; the only rational ever formed is the reported
main term C(n, k) / q.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import binom
from .gf import Field, FieldElement, fp_rank, in_prime_subfield, prime_residue

__all__ = [
    "ExclusionSet",
    "CountQuery",
    "BoundInfo",
    "CountReport",
    "OracleMismatch",
    "tuple_count_difference",
    "tuple_count_difference_recursive",
    "error_kernel",
    "iterated_error_kernel",
    "iterated_error_kernel_prefix",
    "residue_class_error_sum",
    "residue_class_error_sum_literal",
    "count_full_field",
    "count_punctured_field",
    "count_two_removed",
    "normalize_exclusions",
    "count_excluded",
    "count_grid",
    "error_bound",
    "has_solution",
]

# exclusion sets larger than this are counted by the dynamic-programming
# oracle instead of the inclusion-exclusion recursion
RECURSION_MAX_C = 8


class OracleMismatch(ArithmeticError):
    """Closed-form and oracle counts disagreed; a formula or oracle bug."""


def _exact_div(num: int, den: int) -> int:
    if num % den:
        raise ArithmeticError(f"count formula produced non-integer {num}/{den}")
    return num // den


@dataclass(frozen=True)
class ExclusionSet:
    """The complement {a_1,...,a_c} defining D = F_q \\ {a_1,...,a_c}.

    Excluded elements are stored distinct and in canonical order (sorted
    by integer encoding).  D must be nonempty, so c <= q - 1.
    """

    field: Field
    excluded: tuple[FieldElement, ...]

    def __post_init__(self):
        for a in self.excluded:
            if a.field != self.field:
                raise ValueError("excluded element from a different field")
        encs = [a.enc for a in self.excluded]
        if len(set(encs)) != len(encs):
            raise ValueError("excluded elements must be distinct")
        if len(encs) > self.field.q - 1:
            raise ValueError("exclusion set leaves an empty domain")
        ordered = tuple(x for _, x in sorted(zip(encs, self.excluded), key=lambda t: t[0]))
        object.__setattr__(self, "excluded", ordered)

    @property
    def c(self) -> int:
        return len(self.excluded)

    @property
    def n(self) -> int:
        return self.field.q - self.c

    def domain(self) -> tuple[FieldElement, ...]:
        """The elements of D in integer-encoding order."""
        out = set(a.enc for a in self.excluded)
        return tuple(x for x in self.field.elements() if x.enc not in out)

    def domain_sum(self) -> FieldElement:
        total = self.field.sum_of_elements
        for a in self.excluded:
            total = total - a
        return total


@dataclass(frozen=True)
class CountQuery:
    """Ask for N(k, b, D): k-subsets of D summing to b."""

    exclusions: ExclusionSet
    k: int
    b: FieldElement

    def __post_init__(self):
        if not 0 <= self.k <= self.exclusions.n:
            raise ValueError(f"k={self.k} outside [0, {self.exclusions.n}]")
        if self.b.field != self.exclusions.field:
            raise ValueError("target from a different field")


@dataclass(frozen=True)
class BoundInfo:
    """One error bound, scaled by q so comparisons stay in integers.

    The count satisfies |q*N - C(n,k) + shift| <= scaled; the shift is
    nonzero only in prime_field mode.
    """

    mode: str  # "general" | "independent" | "prime_field"
    scaled: int
    shift: int = 0


@dataclass(frozen=True)
class CountReport:
    """A count with its exact main term, error term, and applicable bound."""

    query: CountQuery
    n_count: int
    m_count: int
    main_term: Fraction  # C(n, k) / q, exact
    error: int  # q*N - C(n, k), exact
    bound: BoundInfo | None
    method: str  # closed_form | recursion | independent_fast_path | oracle

    @property
    def main_term_num(self) -> int:
        return self.main_term.numerator

    @property
    def main_term_den(self) -> int:
        return self.main_term.denominator


# -- kernel sequences ---------------------------------------------------------


def _indicator_weight(b: FieldElement) -> int:
    """q - 1 at the zero target, -1 elsewhere."""
    return b.field.q - 1 if b.is_zero() else -1


def tuple_count_difference(q: int, p: int, k: int) -> int:
    """M(k, 1, F_q*) - M(k, 0, F_q*), in closed form.

    Equals -(-1)**(k + floor(k/p)) * k! * C(q/p - 1, floor(k/p)); the
    value at k = 0 is -1 by convention.
    """
    _check_kernel_args(q, p)
    if not 0 <= k <= q - 1:
        raise ValueError(f"k={k} outside [0, {q - 1}]")
    n = k // p
    return -((-1) ** (k + n)) * math.factorial(k) * binom(q // p - 1, n)


def tuple_count_difference_recursive(q: int, p: int, k: int) -> int:
    """Same value through the recursion d_k = -k d_{k-1} (p not dividing k)
    or d_k = (q-k) d_{k-1} (p dividing k), from d_0 = -1, d_1 = 1."""
    _check_kernel_args(q, p)
    if not 0 <= k <= q - 1:
        raise ValueError(f"k={k} outside [0, {q - 1}]")
    if k == 0:
        return -1
    d = 1
    for i in range(2, k + 1):
        d = (q - i) * d if i % p == 0 else -i * d
    return d


def _check_kernel_args(q: int, p: int) -> None:
    if p < 2 or q % p:
        raise ValueError(f"p={p} must divide q={q}")


def error_kernel(q: int, p: int, k: int) -> int:
    """The alternating kernel -(-1)**floor(k/p) * C(q/p - 1, floor(k/p)).

    Equals (-1)**k times the tuple-count difference divided by k!; it is
    the per-step error of the one-point-removed count.
    """
    _check_kernel_args(q, p)
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    n = k // p
    return -((-1) ** n) * binom(q // p - 1, n)


def iterated_error_kernel(q: int, p: int, c: int, k: int) -> int:
    """The c-fold iterated prefix sum of the error kernel.

    Evaluated by the collapsed single sum
        -sum_{j=0}^{k} (-1)**floor(j/p) C(k+c-2-j, c-2) C(q/p-1, floor(j/p))
    for c >= 2; c = 1 is the kernel itself.  In a prime field (q = p,
    k < p) this collapses further to -C(k+c-1, c-1), asserted here.
    """
    _check_kernel_args(q, p)
    if c < 1:
        raise ValueError(f"c must be >= 1, got {c}")
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    if c == 1:
        value = error_kernel(q, p, k)
    else:
        value = -sum(
            (-1) ** (j // p) * binom(k + c - 2 - j, c - 2) * binom(q // p - 1, j // p)
            for j in range(k + 1)
        )
    if q == p and k < p:
        assert value == -binom(k + c - 1, c - 1)
    return value


def iterated_error_kernel_prefix(q: int, p: int, c: int, k: int) -> int:
    """Same value through literal nested prefix summation (cross-check path)."""
    _check_kernel_args(q, p)
    if c < 1:
        raise ValueError(f"c must be >= 1, got {c}")
    row = [error_kernel(q, p, j) for j in range(k + 1)]
    for _ in range(c - 1):
        acc = 0
        nxt = []
        for v in row:
            acc += v
            nxt.append(acc)
        row = nxt
    return row[k]


def _residue_sum_closed(q: int, p: int, k: int, r: int) -> int:
    # closed form of the residue-class kernel sum for a prime-subfield
    # residue r; delta = 1 iff r exceeds <k>_p
    n = k // p
    sign = (-1) ** n
    delta = 1 if r % p > k % p else 0
    return -sign * binom(q // p - 2, n) + delta * sign * binom(q // p - 1, n)


def residue_class_error_sum(q: int, p: int, k: int, b: FieldElement) -> int:
    """Sum of the error kernel over 0 <= i <= k with i congruent to b mod p.

    Zero whenever b lies outside the prime subfield; otherwise evaluated
    in closed form.
    """
    _check_kernel_args(q, p)
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    if not in_prime_subfield(b):
        return 0
    return _residue_sum_closed(q, p, k, prime_residue(b))


def residue_class_error_sum_literal(q: int, p: int, k: int, b: FieldElement) -> int:
    """Same value by literally summing the kernel over the residue class."""
    if not in_prime_subfield(b):
        return 0
    r = prime_residue(b) % p
    return sum(error_kernel(q, p, i) for i in range(k + 1) if i % p == r)


# -- closed-form counts for small complements ---------------------------------


def count_full_field(field: Field, k: int, b: FieldElement) -> int:
    """N(k, b, F_q) exactly.

    C(q, k)/q when p does not divide k; otherwise the correction
    (-1)**(k + k/p) v(b) C(q/p, k/p) / q is added, where v(b) is q-1 at
    b = 0 and -1 elsewhere.
    """
    q, p = field.q, field.p
    if not 0 <= k <= q:
        raise ValueError(f"k={k} outside [0, {q}]")
    if k % p:
        return _exact_div(binom(q, k), q)
    num = binom(q, k) + (-1) ** (k + k // p) * _indicator_weight(b) * binom(q // p, k // p)
    return _exact_div(num, q)


def count_punctured_field(field: Field, k: int, b: FieldElement) -> int:
    """N(k, b, F_q*) exactly."""
    q, p = field.q, field.p
    if not 0 <= k <= q - 1:
        raise ValueError(f"k={k} outside [0, {q - 1}]")
    num = binom(q - 1, k) + (-1) ** (k + k // p) * _indicator_weight(b) * binom(
        q // p - 1, k // p
    )
    return _exact_div(num, q)


def count_two_removed(field: Field, k: int, b: FieldElement) -> int:
    """N(k, b, F_q \\ {0, 1}) exactly.

    C(q-2, k)/q plus the iterated-kernel correction, minus the
    residue-class sum at target k*1 - b (k reduced into the prime
    subfield).
    """
    q, p = field.q, field.p
    if q <= 2:
        raise ValueError("needs q > 2, the domain is empty otherwise")
    if not 0 <= k <= q - 2:
        raise ValueError(f"k={k} outside [0, {q - 2}]")
    sign = (-1) ** k
    head = _exact_div(binom(q - 2, k) + sign * iterated_error_kernel(q, p, 2, k), q)
    return head - sign * residue_class_error_sum(q, p, k, field.scalar(k) - b)


def normalize_exclusions(query: CountQuery) -> CountQuery:
    """Affinely map a 1- or 2-point exclusion set onto {0} or {0, 1}.

    c = 1 translates by -a1 and retargets to b - k*a1; c = 2 applies
    x -> (x - a1)/(a2 - a1) and retargets to (b - k*a1)/(a2 - a1).  The
    count N is invariant under both maps.
    """
    excl = query.exclusions
    field = excl.field
    if excl.c == 1:
        a1 = excl.excluded[0]
        new_b = query.b - query.k * a1
        return CountQuery(ExclusionSet(field, (field.zero,)), query.k, new_b)
    if excl.c == 2:
        a1, a2 = excl.excluded
        scale = (a2 - a1).inv()
        new_b = (query.b - query.k * a1) * scale
        return CountQuery(ExclusionSet(field, (field.zero, field.one)), query.k, new_b)
    raise ValueError(f"normalization is defined for c in {{1, 2}}, got c={excl.c}")


# -- the general counting engine ----------------------------------------------


def _independent_count(q: int, p: int, c: int, k: int) -> int:
    # N when the shifted target and exclusions are F_p-independent:
    # (C(q-c, k) + (-1)^k iterated kernel) / q, independent of b
    return _exact_div(binom(q - c, k) + (-1) ** k * iterated_error_kernel(q, p, c, k), q)


def _shifted_rank_full(field: Field, excluded, k: int, b: FieldElement) -> bool:
    # translate the smallest exclusion to zero; independence of the shifted
    # target together with the remaining shifted exclusions
    a1 = excluded[0]
    vectors = [b - k * a1] + [a - a1 for a in excluded[1:]]
    return fp_rank(vectors) == len(excluded)


def _count_rec(field: Field, excluded, k: int, b: FieldElement, memo) -> int:
    q = field.q
    c = len(excluded)
    n = q - c
    if k < 0 or k > n:
        return 0
    if k == 0:
        return 1 if b.is_zero() else 0
    if 2 * k > n:
        # complementation: a k-subset and its complement in D sum to sum(D)
        total = field.sum_of_elements
        for a in excluded:
            total = total - a
        return _count_rec(field, excluded, n - k, total - b, memo)
    if c == 0:
        return count_full_field(field, k, b)
    if c == 1:
        return count_punctured_field(field, k, b - k * excluded[0])
    if c == 2:
        a1, a2 = excluded
        return count_two_removed(field, k, (b - k * a1) * (a2 - a1).inv())
    key = (c, k, b.enc)
    if key in memo:
        return memo[key]
    if _shifted_rank_full(field, excluded, k, b):
        value = _independent_count(q, field.p, c, k)
    else:
        # inclusion-exclusion on how often the largest excluded point is
        # forced back in: N(k,b,E\{a}) = sum_i (-1)^i N(k-i, b-i*a, E)
        a = excluded[-1]
        rest = excluded[:-1]
        value = 0
        shift = b
        for i in range(k + 1):
            term = _count_rec(field, rest, k - i, shift, memo)
            value += term if i % 2 == 0 else -term
            shift = shift - a
    memo[key] = value
    return value


def _top_route(field: Field, excluded, k: int, b: FieldElement) -> str:
    n = field.q - len(excluded)
    if 2 * k > n:
        total = field.sum_of_elements
        for a in excluded:
            total = total - a
        k, b = n - k, total - b
    c = len(excluded)
    if c <= 2 or k == 0:
        return "closed_form"
    if _shifted_rank_full(field, excluded, k, b):
        return "independent_fast_path"
    return "recursion"


def _bound_for_query(field: Field, excluded, k: int, b: FieldElement) -> BoundInfo | None:
    q, p = field.q, field.p
    n = q - len(excluded)
    if not 1 <= k <= n or n > q - 2:
        return None
    if q == p:
        return error_bound(q, p, n, k, "prime_field")
    if excluded and _shifted_rank_full(field, excluded, k, b):
        return error_bound(q, p, n, k, "independent")
    return error_bound(q, p, n, k, "general")


def count_excluded(query: CountQuery, method: str | None = None) -> CountReport:
    """Exact N(k, b, D) for an arbitrary exclusion set, with report.

    method None picks the route automatically (closed forms for c <= 2,
    fast path or inclusion-exclusion recursion up to c = 8, oracle
    beyond); "closed_form" forces the formula engine, "oracle" the
    dynamic-programming oracle, and "both" runs the two and raises
    OracleMismatch if they ever disagree.
    """
    if method not in (None, "closed_form", "recursion", "oracle", "both"):
        raise ValueError(f"unknown method {method!r}")
    excl = query.exclusions
    field = excl.field
    q = field.q
    n = excl.n
    k, b = query.k, query.b

    want_oracle = method in ("oracle", "both")
    want_formula = method in (None, "closed_form", "recursion", "both")
    if method is None and excl.c > RECURSION_MAX_C:
        want_formula, want_oracle = False, True

    n_formula = n_oracle = None
    route = None
    if want_formula:
        n_formula = _count_rec(field, excl.excluded, k, b, {})
        route = _top_route(field, excl.excluded, k, b)
    if want_oracle:
        from . import oracle

        n_oracle = oracle.dp_count_table(excl, k_max=k).count(k, b)
    if n_formula is not None and n_oracle is not None and n_formula != n_oracle:
        raise OracleMismatch(
            f"formula count {n_formula} != oracle count {n_oracle} for "
            f"k={k}, b={b}, exclusions={[str(a) for a in excl.excluded]}"
        )

    n_count = n_formula if n_formula is not None else n_oracle
    if route is None:
        route = "oracle"
    return CountReport(
        query=query,
        n_count=n_count,
        m_count=n_count * math.factorial(k),
        main_term=Fraction(binom(n, k), q),
        error=q * n_count - binom(n, k),
        bound=_bound_for_query(field, excl.excluded, k, b),
        method=route,
    )


def count_grid(exclusions: ExclusionSet, k_max: int | None = None) -> list[list[int]]:
    """N(k, b, D) for all 0 <= k <= k_max and every b, sharing one memo.

    Row k lists counts indexed by the integer encoding of b.
    """
    field = exclusions.field
    if k_max is None:
        k_max = exclusions.n
    if not 0 <= k_max <= exclusions.n:
        raise ValueError(f"k_max={k_max} outside [0, {exclusions.n}]")
    memo: dict = {}
    els = field.elements()
    return [
        [_count_rec(field, exclusions.excluded, k, b, memo) for b in els]
        for k in range(k_max + 1)
    ]


# -- error bounds ---------------------------------------------------------------


def error_bound(q: int, p: int, n: int, k: int, mode: str) -> BoundInfo:
    """The error bound for |N - C(n,k)/q| in the requested mode, times q.

    general and independent modes need p < q; prime_field needs q = p and
    bounds the shifted error |q*N - C(n,k) + (-1)**k C(k+c-1, c-1)|.
    All modes need n <= q - 2 (write c = q - n >= 2).
    """
    _check_kernel_args(q, p)
    c = q - n
    if c < 2:
        raise ValueError(f"bounds need n <= q - 2, got n={n}, q={q}")
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    if mode == "general":
        if p == q:
            raise ValueError("general mode needs p < q")
        scaled = (q - p) * binom(k + c - 2, c - 2) * binom(q // p - 1, k // p)
        return BoundInfo("general", scaled)
    if mode == "independent":
        if p == q:
            raise ValueError("independent mode needs p < q")
        scaled = p * max(
            binom(k + c - 2 - j, c - 2) * binom(q // p - 1, j // p) for j in range(k + 1)
        )
        return BoundInfo("independent", scaled)
    if mode == "prime_field":
        if p != q:
            raise ValueError("prime_field mode needs q = p")
        scaled = q * binom(k + c - 2, c - 2)
        shift = (-1) ** k * binom(k + c - 1, c - 1)
        return BoundInfo("prime_field", scaled, shift)
    raise ValueError(f"unknown bound mode {mode!r}")


# -- existence predicates --------------------------------------------------------


def has_solution(field: Field, n_mode: str, k: int) -> bool:
    """Whether every target b admits a k-subset solution in D.

    n_mode "full_field" takes D = F_q, "one_removed" takes D = F_q* (any
    one-point complement is equivalent by translation).  Guaranteed
    ranges answer immediately; everything else is decided exactly by
    evaluating the counts for all b.
    """
    q, p = field.q, field.p
    if n_mode == "full_field":
        if p % 2 == 1:
            return 0 < k < q  # exact two-sided criterion for odd p
        if 2 < k < q - 2:
            return True
        if not 0 <= k <= q:
            return False
        return all(count_full_field(field, k, b) > 0 for b in field.elements())
    if n_mode == "one_removed":
        if q > 5 and (
            (p % 2 == 1 and 1 < k < q - 2) or (p == 2 and 2 < k < q - 3)
        ):
            return True
        if not 0 <= k <= q - 1:
            return False
        return all(count_punctured_field(field, k, b) > 0 for b in field.elements())
    raise ValueError(f"unknown n_mode {n_mode!r}")
