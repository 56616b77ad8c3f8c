"""Field construction, arithmetic, prime-subfield tests, and element I/O."""

import random

import pytest

from ffsubsum.gf import (
    _build_field,
    field_arith,
    format_element,
    fp_rank,
    in_prime_subfield,
    make_field,
    parse_element,
    prime_residue,
    split_element_list,
)

GRID = [(2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1), (2, 4), (5, 2), (3, 3)]


def fields():
    return [make_field(p, e) for p, e in GRID]


def test_make_field_examples():
    f5 = make_field(5, 1)
    assert (f5.p, f5.e, f5.q) == (5, 1, 5)
    assert f5.generator == f5.scalar(2)  # orders: 2 has order 4; 1 does not

    f2 = make_field(2, 1)
    assert f2.generator == f2.one

    f128 = make_field(2, 7)
    assert f128.q == 128
    assert len(f128.modulus) == 8 and f128.modulus[-1] == 1


def test_make_field_errors():
    with pytest.raises(ValueError):
        make_field(4, 1)
    with pytest.raises(ValueError):
        make_field(1, 1)
    with pytest.raises(ValueError):
        make_field(7, 0)


def test_size_limit_env(monkeypatch):
    monkeypatch.setenv("FFSUBSUM_MAX_Q", "16")
    with pytest.raises(ValueError):
        make_field(5, 2)
    make_field(2, 4)  # exactly at the limit
    monkeypatch.setenv("FFSUBSUM_MAX_Q", "not-a-number")
    with pytest.raises(ValueError):
        make_field(2, 2)


def test_make_field_deterministic():
    before = make_field(2, 3)
    modulus, generator_coords = before.modulus, before.generator.coords
    _build_field.cache_clear()
    after = make_field(2, 3)
    assert after.modulus == modulus
    assert after.generator.coords == generator_coords


def test_modulus_is_irreducible_smallest():
    # no monic polynomial of degree 1..e/2 divides the modulus, and no
    # lexicographically smaller candidate is irreducible
    import itertools

    from ffsubsum.gf import _is_irreducible

    for p, e in [(2, 3), (2, 4), (3, 2), (5, 2), (3, 3)]:
        f = make_field(p, e)
        poly = list(f.modulus)
        assert _is_irreducible(poly, p)
        for tail in itertools.product(range(p), repeat=e):
            cand = list(tail) + [1]
            if cand == poly:
                break
            assert not _is_irreducible(cand, p) or cand[0] == 0


def test_arith_examples():
    f5 = make_field(5, 1)
    assert f5.scalar(3) + f5.scalar(4) == f5.scalar(2)
    assert f5.scalar(2).inv() == f5.scalar(3)

    f128 = make_field(2, 7)
    g = f128.generator
    assert g * g**126 == f128.one

    assert field_arith("add", f5.scalar(3), f5.scalar(4)) == f5.scalar(2)
    assert field_arith("neg", f5.scalar(2)) == f5.scalar(3)
    assert field_arith("pow", g, 127) == f128.one
    with pytest.raises(ValueError):
        field_arith("frobnicate", f5.one)


def test_arith_errors():
    f5, f7 = make_field(5, 1), make_field(7, 1)
    with pytest.raises(ZeroDivisionError):
        f5.zero.inv()
    with pytest.raises(ValueError):
        f5.one + f7.one


@pytest.mark.parametrize("p,e", [(2, 3), (3, 2)])
def test_field_axioms_exhaustive(p, e):
    f = make_field(p, e)
    els = f.elements()
    for a in els:
        assert a + f.zero == a and a * f.one == a
        assert a + (-a) == f.zero
        if not a.is_zero():
            assert a * a.inv() == f.one
    for a in els:
        for b in els:
            assert a + b == b + a and a * b == b * a
            for c in els:
                assert (a + b) + c == a + (b + c)
                assert (a * b) * c == a * (b * c)
                assert a * (b + c) == a * b + a * c


def test_field_axioms_sampled_f25():
    f = make_field(5, 2)
    rng = random.Random(9)
    els = f.elements()
    for _ in range(300):
        a, b, c = (els[rng.randrange(f.q)] for _ in range(3))
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)


def test_lagrange_and_frobenius():
    for f in fields() + [make_field(2, 7)]:
        q = f.q
        for x in f.elements():
            assert x**q == x
            if not x.is_zero():
                assert x ** (q - 1) == f.one


def test_generator_order():
    for f in fields():
        g = f.generator
        seen = set()
        x = f.one
        for _ in range(f.q - 1):
            seen.add(x.enc)
            x = x * g
        assert x == f.one
        assert len(seen) == f.q - 1


def _prime_powers_up_to(limit):
    out = []
    for p in range(2, limit + 1):
        if any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            continue
        e = 1
        while p**e <= limit:
            out.append((p, e))
            e += 1
    return out


def test_prime_subfield_vs_frobenius():
    # coordinate test against the Frobenius fixed-point test, every field
    # with q <= 128
    for p, e in _prime_powers_up_to(128):
        f = make_field(p, e)
        for x in f.elements():
            assert in_prime_subfield(x) == (x**f.p == x)


def test_prime_residue():
    f5 = make_field(5, 1)
    assert in_prime_subfield(f5.scalar(3)) and prime_residue(f5.scalar(3)) == 3
    f128 = make_field(2, 7)
    g = f128.generator
    assert not in_prime_subfield(g)
    assert g**2 != g  # outside the prime subfield
    assert prime_residue(f128.zero) == 0
    with pytest.raises(ValueError):
        prime_residue(g)


def test_fp_rank():
    f128 = make_field(2, 7)
    w = f128.generator
    assert fp_rank([f128.one, w, w**2, w**3]) == 4
    f25 = make_field(5, 2)
    x = f25.generator
    assert fp_rank([x, 2 * x]) == 1
    assert fp_rank([]) == 0
    assert fp_rank([f25.zero]) == 0
    # both the representation power basis and the generator powers have
    # full rank (a multiplicative generator cannot lie in a subfield)
    for p, e in [(2, 3), (3, 2), (2, 4), (5, 2), (3, 3), (2, 7)]:
        f = make_field(p, e)
        xelem = f.from_coords([0, 1] + [0] * (e - 2)) if e > 1 else f.one
        assert fp_rank([xelem**i for i in range(e)]) == e
        assert fp_rank([f.generator**i for i in range(e)]) == e


def test_parse_format_examples():
    f7 = make_field(7, 1)
    assert parse_element("3", f7) == f7.scalar(3)
    f8 = make_field(2, 3)
    assert parse_element("g^5", f8) == f8.generator**5
    assert parse_element("[1,0,1]", f8) == f8.from_coords((1, 0, 1))
    assert parse_element("0", f8) == f8.zero
    assert parse_element("1", f8) == f8.one  # prime-subfield decimal
    assert format_element(f7.scalar(3)) == "3"
    assert format_element(f8.from_coords((1, 0, 1))) == "[1,0,1]"


def test_parse_format_roundtrip():
    for f in fields():
        for x in f.elements():
            assert parse_element(format_element(x), f) == x


def test_parse_errors():
    f7 = make_field(7, 1)
    f8 = make_field(2, 3)
    for bad in ["", "7", "-1", "x", "[1,0]", "g^2"]:
        with pytest.raises(ValueError):
            parse_element(bad, f7)
    for bad in ["2", "[1,0]", "[1,0,1,0]", "[2,0,0]", "g^-1", "[1,0,"]:
        with pytest.raises(ValueError):
            parse_element(bad, f8)


def test_split_element_list():
    assert split_element_list("0,g^1,g^2") == ["0", "g^1", "g^2"]
    assert split_element_list("[1,0,1],[0,1,0]") == ["[1,0,1]", "[0,1,0]"]
    assert split_element_list(" 3 , 4 ") == ["3", "4"]
    assert split_element_list("") == []
    with pytest.raises(ValueError):
        split_element_list("[1,0")


def test_element_hash_and_repr():
    f8 = make_field(2, 3)
    seen = {x: x.enc for x in f8.elements()}
    assert len(seen) == 8
    assert "F_8" in repr(f8.generator)
