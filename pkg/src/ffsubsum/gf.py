"""Finite fields F_q with q = p**e and their prime-subfield linear algebra.

A field is realized as F_p[x]/(m(x)) for a monic irreducible modulus m of
degree e.  Elements are coordinate vectors (c0, ..., c_{e-1}) in the power
basis 1, x, ..., x^{e-1}; the coordinate vector is the canonical
representation, so equality is tuple equality.  Construction is fully
deterministic: the modulus is the lexicographically smallest monic
irreducible polynomial (constant coefficient compared first) and the
stored generator is the first element, in integer-encoding order, of
multiplicative order q - 1.

Integer encoding: enc(x) = sum coords[i] * p**i, a bijection between the
field and range(q) used for canonical orderings and dense table indexing.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .limits import max_field_size

__all__ = [
    "Field",
    "FieldElement",
    "make_field",
    "field_arith",
    "in_prime_subfield",
    "prime_residue",
    "fp_rank",
    "parse_element",
    "format_element",
    "split_element_list",
]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _prime_factors(n: int) -> tuple[int, ...]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return tuple(out)


def _poly_rem(num: list[int], den: list[int], p: int) -> list[int]:
    # remainder of num by monic den over F_p; coefficient lists, low degree first
    num = list(num)
    dd = len(den) - 1
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] % p
        if c:
            for j, dj in enumerate(den):
                num[i - dd + j] = (num[i - dd + j] - c * dj) % p
    while num and num[-1] % p == 0:
        num.pop()
    return num


def _is_irreducible(poly: list[int], p: int) -> bool:
    # trial division by every monic polynomial of degree 1..deg/2
    e = len(poly) - 1
    for d in range(1, e // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            divisor = list(tail) + [1]
            if not _poly_rem(poly, divisor, p):
                return False
    return True


class Field:
    """A concrete finite field F_q, q = p**e.  Use make_field to construct."""

    __slots__ = ("p", "e", "q", "modulus", "generator", "_xpow", "_elements")

    def __init__(self, p: int, e: int, modulus: tuple[int, ...]):
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = modulus
        # reductions of x^e .. x^(2e-2) modulo the modulus, for multiplication
        xpow = []
        if e > 1:
            cur = [(-c) % p for c in modulus[:e]]  # x^e = -(modulus - x^e)
            xpow.append(tuple(cur))
            for _ in range(e - 2):
                cur = [0] + cur
                top = cur.pop()
                if top:
                    cur = [(ci + top * ri) % p for ci, ri in zip(cur, xpow[0])]
                xpow.append(tuple(cur))
        self._xpow = tuple(xpow)
        self._elements = None
        self.generator = None  # filled in by make_field

    def __eq__(self, other):
        if not isinstance(other, Field):
            return NotImplemented
        return (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus)

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        return f"Field(p={self.p}, e={self.e}, q={self.q})"

    # -- element construction ------------------------------------------------

    @property
    def zero(self) -> "FieldElement":
        return FieldElement((0,) * self.e, self)

    @property
    def one(self) -> "FieldElement":
        return FieldElement((1,) + (0,) * (self.e - 1), self)

    def scalar(self, r: int) -> "FieldElement":
        """The prime-subfield element r * 1."""
        return FieldElement((r % self.p,) + (0,) * (self.e - 1), self)

    def from_coords(self, coords) -> "FieldElement":
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.e:
            raise ValueError(f"expected {self.e} coordinates, got {len(coords)}")
        if any(c < 0 or c >= self.p for c in coords):
            raise ValueError(f"coordinates out of range [0, {self.p}): {coords}")
        return FieldElement(coords, self)

    def enc(self, x: "FieldElement") -> int:
        m = 0
        for c in reversed(x.coords):
            m = m * self.p + c
        return m

    def dec(self, m: int) -> "FieldElement":
        if not 0 <= m < self.q:
            raise ValueError(f"encoding {m} outside [0, {self.q})")
        coords = []
        for _ in range(self.e):
            coords.append(m % self.p)
            m //= self.p
        return FieldElement(tuple(coords), self)

    def elements(self) -> tuple["FieldElement", ...]:
        """All field elements in integer-encoding order."""
        if self._elements is None:
            self._elements = tuple(self.dec(m) for m in range(self.q))
        return self._elements

    @property
    def sum_of_elements(self) -> "FieldElement":
        # the elements of F_q sum to 0 except for F_2, where 0 + 1 = 1
        return self.one if self.q == 2 else self.zero

    # -- arithmetic on coordinate vectors ------------------------------------

    def _add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def _neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def _mul(self, a, b):
        p, e = self.p, self.e
        if e == 1:
            return ((a[0] * b[0]) % p,)
        conv = [0] * (2 * e - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    conv[i + j] += ai * bj
        out = [c % p for c in conv[:e]]
        for i in range(e, 2 * e - 1):
            c = conv[i] % p
            if c:
                red = self._xpow[i - e]
                for j in range(e):
                    out[j] = (out[j] + c * red[j]) % p
        return tuple(out)


@dataclass(frozen=True, slots=True)
class FieldElement:
    """An element of a Field in power-basis coordinates over F_p."""

    coords: tuple[int, ...]
    field: Field

    def _check_same_field(self, other: "FieldElement") -> None:
        if self.field != other.field:
            raise ValueError("operands belong to different fields")

    def __add__(self, other):
        self._check_same_field(other)
        return FieldElement(self.field._add(self.coords, other.coords), self.field)

    def __sub__(self, other):
        self._check_same_field(other)
        return FieldElement(
            self.field._add(self.coords, self.field._neg(other.coords)), self.field
        )

    def __neg__(self):
        return FieldElement(self.field._neg(self.coords), self.field)

    def __mul__(self, other):
        if isinstance(other, int):
            return FieldElement(
                self.field._mul(self.coords, self.field.scalar(other).coords), self.field
            )
        self._check_same_field(other)
        return FieldElement(self.field._mul(self.coords, other.coords), self.field)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.__mul__(other)
        return NotImplemented

    def __truediv__(self, other):
        self._check_same_field(other)
        return self * other.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inv(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of 0")
        return self ** (self.field.q - 2)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    @property
    def enc(self) -> int:
        return self.field.enc(self)

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"<{format_element(self)} in F_{self.field.q}>"


def _find_modulus(p: int, e: int) -> tuple[int, ...]:
    if e == 1:
        return (0, 1)  # F_p as F_p[x]/(x); the modulus is never used
    for tail in itertools.product(range(p), repeat=e):
        poly = list(tail) + [1]
        if poly[0] == 0:
            continue  # divisible by x
        if _is_irreducible(poly, p):
            return tuple(poly)
    raise RuntimeError(f"no irreducible polynomial of degree {e} over F_{p}")  # unreachable


def _find_generator(field: Field) -> FieldElement:
    q = field.q
    factors = _prime_factors(q - 1)
    one = field.one
    for m in range(1, q):
        x = field.dec(m)
        if all(x ** ((q - 1) // ell) != one for ell in factors):
            return x
    raise RuntimeError(f"no generator found for F_{q}")  # unreachable


@functools.lru_cache(maxsize=None)
def _build_field(p: int, e: int) -> Field:
    field = Field(p, e, _find_modulus(p, e))
    field.generator = _find_generator(field)
    return field


def make_field(p: int, e: int) -> Field:
    """Deterministically construct F_q for q = p**e.

    Same (p, e) always yields the identical modulus and generator.  Raises
    ValueError for non-prime p, e < 1, or q beyond the configured size
    limit (see limits.max_field_size).
    """
    if e < 1:
        raise ValueError(f"extension degree must be positive, got {e}")
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    limit = max_field_size()
    if p**e > limit:
        raise ValueError(f"field size {p}**{e} exceeds the limit {limit}")
    return _build_field(p, e)


def field_arith(op: str, *operands):
    """Dispatch one field operation by name: add, sub, mul, neg, inv, pow."""
    table = {
        "add": lambda a, b: a + b,
        "sub": lambda a, b: a - b,
        "mul": lambda a, b: a * b,
        "neg": lambda a: -a,
        "inv": lambda a: a.inv(),
        "pow": lambda a, n: a**n,
    }
    if op not in table:
        raise ValueError(f"unknown field operation {op!r}")
    return table[op](*operands)


def in_prime_subfield(x: FieldElement) -> bool:
    """True iff x lies in F_p, i.e. only the constant coordinate is nonzero."""
    return all(c == 0 for c in x.coords[1:])


def prime_residue(x: FieldElement) -> int:
    """The residue in [0, p) of a prime-subfield element."""
    if not in_prime_subfield(x):
        raise ValueError(f"{x!r} lies outside the prime subfield")
    return x.coords[0]


def fp_rank(elements) -> int:
    """Rank over F_p of the coordinate matrix of the given elements.

    The elements are F_p-linearly independent iff the rank equals their
    number.  Exact Gaussian elimination mod p; the empty list has rank 0.
    """
    elements = list(elements)
    if not elements:
        return 0
    p = elements[0].field.p
    rows = [list(x.coords) for x in elements]
    ncols = len(rows[0])
    rank = 0
    col = 0
    while col < ncols and rank < len(rows):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] % p), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [(v * inv) % p for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] % p:
                f = rows[r][col]
                rows[r] = [(a - f * b) % p for a, b in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def format_element(x: FieldElement) -> str:
    """Canonical text: decimal residue in prime fields, [c0,...,c_{e-1}] otherwise."""
    if x.field.e == 1:
        return str(x.coords[0])
    return "[" + ",".join(str(c) for c in x.coords) + "]"


def split_element_list(text: str) -> list[str]:
    """Split comma-separated element texts, respecting [..] coordinate forms."""
    parts = []
    depth = 0
    cur = []
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
            if depth < 0:
                raise ValueError(f"unbalanced brackets in {text!r}")
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth:
        raise ValueError(f"unbalanced brackets in {text!r}")
    parts.append("".join(cur))
    return [p.strip() for p in parts if p.strip()]


def parse_element(s: str, f: Field) -> FieldElement:
    """Parse element text.

    Prime fields take a decimal residue r with 0 <= r < p.  Extension
    fields take "g^k" (a generator power), a coordinate vector
    "[c0,c1,...]", or a decimal prime-subfield residue (in particular
    "0" and "1").  Round-trips with format_element.
    """
    s = s.strip()
    if not s:
        raise ValueError("empty element text")
    if s.startswith("[") and s.endswith("]"):
        if f.e == 1:
            raise ValueError("coordinate form is only valid in extension fields")
        parts = s[1:-1].split(",")
        return f.from_coords(int(t) for t in parts)
    if s.startswith("g^"):
        if f.e == 1:
            raise ValueError("generator-power form is only valid in extension fields")
        k = int(s[2:])
        if k < 0:
            raise ValueError(f"generator exponent must be non-negative, got {k}")
        return f.generator**k
    try:
        r = int(s)
    except ValueError as exc:
        raise ValueError(f"cannot parse element text {s!r}") from exc
    if not 0 <= r < f.p:
        raise ValueError(f"residue {r} outside [0, {f.p})")
    return f.scalar(r)
