"""Generalized Reed-Solomon codes over an evaluation set D, and deep holes.

The code of dimension k over the n distinct points D = {x_1,...,x_n}
consists of the words (f(x_1),...,f(x_n)) for all polynomials f of degree
below k.  Every word u has a unique interpolating polynomial u(x) of
degree at most n - 1; its degree d(u) drives everything here: u is a
codeword iff d(u) <= k - 1, and for k <= d(u) <= n - 1 the exact distance
to the code is sandwiched between n - d(u) and n - k.  Words attaining
the upper bound are deep holes; words attaining the lower bound are
ordinary.  For d(u) = k + 1 the two cases are decided exactly by a
subset-sum count: the word is ordinary iff some (k+1)-subset of D sums to
the top coefficient ratio of u(x).

Exhaustive distance computations stream the message space through the
scan kernels (packed bytes, q <= 256); larger fields take a slow generic
path.  Everything is guarded.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from . import counts, oracle
from ._kernels import coset_min_distances
from .gf import Field, FieldElement, format_element, parse_element, split_element_list
from .limits import check_guard

__all__ = [
    "NEG_INF",
    "Poly",
    "RSCode",
    "Word",
    "DistanceBounds",
    "ScanEntry",
    "ScanReport",
    "full_field_code",
    "punctured_code",
    "encode",
    "interpolate",
    "word_degree",
    "distance_to_code",
    "minimum_distance",
    "distance_survey",
    "distance_bounds",
    "classify_word",
    "deep_hole_scan",
    "format_word",
    "parse_word",
]

NEG_INF = float("-inf")  # degree of the zero polynomial

DISTANCE_GUARD = 10**7
SCAN_WORK_GUARD = 10**12


@dataclass(frozen=True)
class Poly:
    """Polynomial over a field; coefficients low degree first, trimmed."""

    coeffs: tuple[FieldElement, ...]

    @staticmethod
    def make(coeffs) -> "Poly":
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        return Poly(tuple(coeffs))

    @staticmethod
    def zero() -> "Poly":
        return Poly(())

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def evaluate(self, x: FieldElement) -> FieldElement:
        acc = x.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def coefficient(self, i: int) -> FieldElement:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no coefficients")
        if i < len(self.coeffs):
            return self.coeffs[i]
        return self.coeffs[0].field.zero

    def monic(self) -> "Poly":
        if not self.coeffs:
            raise ValueError("the zero polynomial cannot be made monic")
        inv = self.coeffs[-1].inv()
        return Poly(tuple(c * inv for c in self.coeffs))


@dataclass(frozen=True)
class RSCode:
    """Evaluations of all degree-< k polynomials at n distinct points."""

    field: Field
    eval_set: tuple[FieldElement, ...]
    k: int

    def __post_init__(self):
        for x in self.eval_set:
            if x.field != self.field:
                raise ValueError("evaluation point from a different field")
        encs = [x.enc for x in self.eval_set]
        if len(set(encs)) != len(encs):
            raise ValueError("evaluation points must be distinct")
        if not 1 <= self.k <= len(self.eval_set):
            raise ValueError(f"dimension k={self.k} outside [1, {len(self.eval_set)}]")

    @property
    def n(self) -> int:
        return len(self.eval_set)


@dataclass(frozen=True)
class Word:
    """A received word u in F_q^n, attached to its code."""

    values: tuple[FieldElement, ...]
    code: RSCode

    def __post_init__(self):
        if len(self.values) != self.code.n:
            raise ValueError(f"word length {len(self.values)} != n={self.code.n}")
        for v in self.values:
            if v.field != self.code.field:
                raise ValueError("word value from a different field")


@dataclass(frozen=True)
class DistanceBounds:
    """Sandwich n - d(u) <= d(u, code) <= n - k; degenerate for codewords."""

    lower: int
    upper: int
    codeword: bool


def full_field_code(field: Field, k: int) -> RSCode:
    return RSCode(field, field.elements(), k)


def punctured_code(field: Field, k: int) -> RSCode:
    return RSCode(field, field.elements()[1:], k)


def encode(f: Poly, code: RSCode) -> Word:
    """Evaluate a message polynomial of degree below k at the points."""
    if f.degree > code.k - 1:
        raise ValueError(f"message degree {f.degree} too high for dimension {code.k}")
    return Word(tuple(f.evaluate(x) for x in code.eval_set), code)


def interpolate(u: Word) -> Poly:
    """The unique polynomial of degree <= n - 1 through the word's values."""
    code = u.code
    field = code.field
    pts = code.eval_set
    n = code.n
    # full = prod (x - x_j), built once; each basis numerator is full
    # divided synthetically by its own root
    full = [field.one]
    for x in pts:
        nxt = [field.zero] * (len(full) + 1)
        for i, c in enumerate(full):
            nxt[i + 1] = nxt[i + 1] + c
            nxt[i] = nxt[i] - c * x
        full = nxt
    acc = [field.zero] * n
    for i, xi in enumerate(pts):
        if u.values[i].is_zero():
            continue
        # synthetic division of full by (x - xi)
        quot = [field.zero] * n
        carry = full[n]
        for j in range(n - 1, -1, -1):
            quot[j] = carry
            carry = full[j] + carry * xi
        denom = field.zero
        for c in reversed(quot):
            denom = denom * xi + c
        scale = u.values[i] * denom.inv()
        for j in range(n):
            acc[j] = acc[j] + scale * quot[j]
    return Poly.make(acc)


def word_degree(u: Word):
    """Degree of the interpolating polynomial; NEG_INF for the zero word.

    u is a codeword iff word_degree(u) <= k - 1.
    """
    return interpolate(u).degree


# -- kernel plumbing -----------------------------------------------------------


@functools.lru_cache(maxsize=None)
def _add_table(field: Field) -> bytes:
    q = field.q
    els = field.elements()
    out = bytearray(q * q)
    for a in range(q):
        row = els[a]
        for b in range(q):
            out[a * q + b] = (row + els[b]).enc
    return bytes(out)


def _scaled_basis(code: RSCode, powers) -> bytes:
    """Packed vectors of v * x_i**pw for every digit value v and power pw."""
    field = code.field
    q = field.q
    n = code.n
    els = field.elements()
    out = bytearray(len(powers) * q * n)
    for j, pw in enumerate(powers):
        evals = [x**pw for x in code.eval_set]
        for v in range(q):
            scale = els[v]
            base = (j * q + v) * n
            for i, ev in enumerate(evals):
                out[base + i] = (scale * ev).enc
    return bytes(out)


def _word_bytes(values) -> bytes:
    return bytes(v.enc for v in values)


def _kernel_capable(code: RSCode) -> bool:
    return code.field.q <= 256 and code.n <= 255


def distance_to_code(u: Word, max_enumeration: int = DISTANCE_GUARD) -> int:
    """Exact minimum Hamming distance from u to the code.

    Streams all q**k message vectors (never a materialized codeword
    table); refuses when q**k exceeds the guard.
    """
    code = u.code
    field = code.field
    q, k, n = field.q, code.k, code.n
    check_guard(q**k, max_enumeration, f"enumerating {q}**{k} codewords")
    if _kernel_capable(code):
        dists = coset_min_distances(
            q, n, k, _add_table(field), _scaled_basis(code, range(k)), _word_bytes(u.values)
        )
        return min(dists)
    # generic path for fields too large for byte packing
    check_guard(q**k * n, 10 * max_enumeration, "generic codeword enumeration")
    best = n
    for msg in itertools.product(field.elements(), repeat=k):
        f = Poly.make(msg)
        d = sum(1 for x, v in zip(code.eval_set, u.values) if f.evaluate(x) != v)
        best = min(best, d)
        if best == 0:
            break
    return best


def minimum_distance(code: RSCode, max_enumeration: int = DISTANCE_GUARD) -> int:
    """Exhaustive minimum distance of the code (equals n - k + 1)."""
    field = code.field
    q, k, n = field.q, code.k, code.n
    check_guard(q**k, max_enumeration, f"enumerating {q}**{k} codewords")
    if not _kernel_capable(code):
        raise ValueError("minimum_distance needs q <= 256")
    weights = coset_min_distances(
        q, n, k, _add_table(field), _scaled_basis(code, range(k)), bytes(n)
    )
    return min(weights[1:])  # index 0 is the zero codeword


def distance_survey(code: RSCode, max_enumeration: int = DISTANCE_GUARD) -> bytearray:
    """Distance to the code of one representative per interpolant tail.

    An entry index encodes the coefficients (c_k,...,c_{n-1}) of the
    interpolating polynomial above degree k - 1, digit j (base q) giving
    c_{k+j}; the entry is the exact distance to the code of any word
    whose interpolant has that tail.  This covers every word in F_q^n
    exactly once up to addition of codewords, which changes neither the
    distance nor (for degrees >= k) the interpolant degree.
    """
    field = code.field
    q, k, n = field.q, code.k, code.n
    m = n - k
    check_guard(q**m, max_enumeration, f"enumerating {q}**{m} interpolant tails")
    check_guard(q**k, 1 << 16, f"materializing {q}**{k} codewords")
    if not _kernel_capable(code):
        raise ValueError("distance_survey needs q <= 256")
    table = bytearray(q**k * n)
    for idx, msg in enumerate(itertools.product(field.elements(), repeat=k)):
        f = Poly.make(msg)
        for i, x in enumerate(code.eval_set):
            table[idx * n + i] = f.evaluate(x).enc
    return coset_min_distances(
        q, n, m, _add_table(field), _scaled_basis(code, range(k, n)), bytes(table)
    )


# -- classification -------------------------------------------------------------


def distance_bounds(u: Word) -> DistanceBounds:
    """The sandwich (n - d(u), n - k) for k <= d(u) <= n - 1.

    Codewords get the degenerate (0, 0) with the codeword flag set.
    """
    code = u.code
    d = word_degree(u)
    if d <= code.k - 1:
        return DistanceBounds(0, 0, True)
    return DistanceBounds(code.n - int(d), code.n - code.k, False)


def classify_word(u: Word) -> str:
    """Deep hole or ordinary, for words of degree k or k + 1.

    Degree k is always a deep hole.  Degree k + 1 reduces to subset
    summing: normalize u(x) to monic x**(k+1) - b1 x**k + ..., then u is
    ordinary iff some (k+1)-subset of the evaluation set sums to b1 (the
    monic polynomials with k+1 distinct roots in D and that x**k
    coefficient are exactly the products over such subsets).
    """
    code = u.code
    field = code.field
    d = word_degree(u)
    if d == code.k:
        return "deep_hole"
    if d != code.k + 1:
        raise ValueError(f"classification needs degree k or k+1, got d(u)={d}")
    monic = interpolate(u).monic()
    b1 = -monic.coefficient(code.k)
    in_set = {x.enc for x in code.eval_set}
    complement = tuple(x for x in field.elements() if x.enc not in in_set)
    query = counts.CountQuery(
        counts.ExclusionSet(field, complement), code.k + 1, b1
    )
    return "ordinary" if count_for_scan(query) > 0 else "deep_hole"


def count_for_scan(query: counts.CountQuery) -> int:
    """Subset-sum count behind the classifiers: formulas when the
    complement is small, the DP oracle otherwise."""
    if query.exclusions.c <= counts.RECURSION_MAX_C:
        return counts.count_excluded(query).n_count
    return oracle.dp_count_table(query.exclusions, k_max=query.k).count(query.k, query.b)


@dataclass(frozen=True)
class ScanEntry:
    """One leading coefficient with its subset-sum solution count."""

    b1: FieldElement
    count: int

    @property
    def solvable(self) -> bool:
        return self.count > 0


@dataclass(frozen=True)
class ScanReport:
    """Deep-hole scan over all degree-(k+1) leading behaviors."""

    field: Field
    n_mode: str
    k: int
    n: int
    entries: tuple[ScanEntry, ...]

    @property
    def deep_hole_free(self) -> bool:
        return all(e.solvable for e in self.entries)

    @property
    def unsolvable_targets(self) -> tuple[FieldElement, ...]:
        return tuple(e.b1 for e in self.entries if not e.solvable)


def deep_hole_scan(
    field: Field, n_mode: str, k: int, max_work: int = SCAN_WORK_GUARD
) -> ScanReport:
    """Scan every possible x**k coefficient of monic degree-(k+1) words.

    Only that coefficient matters for degree k + 1, so the scan covers
    all such words by iterating b1 over the field and asking whether a
    (k+1)-subset of D sums to b1.  A verdict with every b1 solvable means
    no degree-(k+1) word is a deep hole.
    """
    if n_mode == "full":
        eval_set = field.elements()
    elif n_mode == "punctured":
        eval_set = field.elements()[1:]
    else:
        raise ValueError(f"unknown n_mode {n_mode!r}")
    n = len(eval_set)
    if not 1 <= k <= n - 2:
        raise ValueError(f"scan needs 1 <= k <= n - 2, got k={k}, n={n}")
    check_guard(field.q ** (k + 2), max_work, "deep-hole scan work")
    in_set = {x.enc for x in eval_set}
    complement = tuple(x for x in field.elements() if x.enc not in in_set)
    exclusions = counts.ExclusionSet(field, complement)
    entries = []
    for b1 in field.elements():
        cnt = count_for_scan(counts.CountQuery(exclusions, k + 1, b1))
        entries.append(ScanEntry(b1, cnt))
    return ScanReport(field, n_mode, k, n, tuple(entries))


# -- word text I/O --------------------------------------------------------------


def format_word(u: Word) -> str:
    return ",".join(format_element(v) for v in u.values)


def parse_word(text: str, code: RSCode) -> Word:
    parts = split_element_list(text)
    if len(parts) != code.n:
        raise ValueError(f"expected {code.n} values, got {len(parts)}")
    return Word(tuple(parse_element(t, code.field) for t in parts), code)
