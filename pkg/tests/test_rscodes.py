"""Encoding, interpolation, exact distances, and deep-hole classification."""

import itertools
import random

import pytest

from ffsubsum.gf import make_field
from ffsubsum.limits import GuardExceeded
from ffsubsum.rscodes import (
    NEG_INF,
    Poly,
    RSCode,
    Word,
    classify_word,
    deep_hole_scan,
    distance_bounds,
    distance_survey,
    distance_to_code,
    encode,
    format_word,
    full_field_code,
    interpolate,
    minimum_distance,
    parse_word,
    punctured_code,
    word_degree,
)

F5, F7, F8 = make_field(5, 1), make_field(7, 1), make_field(2, 3)


def _word_from_poly(poly: Poly, code: RSCode) -> Word:
    return Word(tuple(poly.evaluate(x) for x in code.eval_set), code)


def _x_power(field, j: int) -> Poly:
    return Poly.make([field.zero] * j + [field.one])


def test_code_validation():
    with pytest.raises(ValueError):
        RSCode(F7, (F7.one, F7.one), 1)
    with pytest.raises(ValueError):
        RSCode(F7, (F7.one, F7.scalar(2)), 3)  # k > n
    with pytest.raises(ValueError):
        Word((F7.one,), punctured_code(F7, 2))  # wrong length


def test_encode_examples():
    code = punctured_code(F7, 2)
    zero_word = encode(Poly.zero(), code)
    assert all(v.is_zero() for v in zero_word.values)
    const = encode(Poly.make([F7.scalar(4)]), code)
    assert all(v == F7.scalar(4) for v in const.values)
    w = encode(Poly.make([F7.one, F7.scalar(2)]), code)
    assert [v.enc for v in w.values] == [3, 5, 0, 2, 4, 6]
    with pytest.raises(ValueError):
        encode(_x_power(F7, 2), code)  # degree k


def test_interpolate_examples():
    code = punctured_code(F7, 2)
    zero_word = Word(tuple(F7.zero for _ in range(code.n)), code)
    assert interpolate(zero_word) == Poly.zero()
    assert word_degree(zero_word) == NEG_INF

    pts = (F7.one, F7.scalar(2), F7.scalar(3))
    tri = RSCode(F7, pts, 1)
    u = Word((F7.one, F7.scalar(4), F7.scalar(2)), tri)
    p = interpolate(u)
    assert p.degree <= 2
    for x, v in zip(pts, u.values):
        assert p.evaluate(x) == v


@pytest.mark.parametrize("field,n", [(F5, 5), (F7, 7), (F8, 8)])
def test_interpolate_encode_roundtrip_exhaustive(field, n):
    code = RSCode(field, field.elements()[:n], 4)
    for coeffs in itertools.product(field.elements(), repeat=4):
        f = Poly.make(coeffs)
        assert interpolate(encode(f, code)) == f


def test_interpolate_encode_roundtrip_sampled_f16():
    field = make_field(2, 4)
    code = punctured_code(field, 6)
    rng = random.Random(12)
    els = field.elements()
    for _ in range(40):
        coeffs = [els[rng.randrange(16)] for _ in range(6)]
        f = Poly.make(coeffs)
        assert interpolate(encode(f, code)) == f


def test_word_degree_examples():
    code = punctured_code(F7, 3)
    f = Poly.make([F7.scalar(2), F7.one, F7.scalar(5)])  # degree 2 = k - 1
    w = encode(f, code)
    assert word_degree(w) <= code.k - 1
    # adding the evaluations of x^k bumps the degree to exactly k
    xk = _word_from_poly(_x_power(F7, code.k), code)
    bumped = Word(tuple(a + b for a, b in zip(w.values, xk.values)), code)
    assert word_degree(bumped) == code.k


def test_distance_examples():
    code = punctured_code(F7, 2)
    w = encode(Poly.make([F7.one, F7.scalar(2)]), code)
    assert distance_to_code(w) == 0
    # degree-k words are at the maximum distance n - k
    for code in (punctured_code(F7, 2), full_field_code(F8, 3)):
        xk = _word_from_poly(_x_power(code.field, code.k), code)
        assert distance_to_code(xk) == code.n - code.k


def test_distance_guard():
    code = full_field_code(F8, 3)
    w = _word_from_poly(_x_power(F8, 3), code)
    with pytest.raises(GuardExceeded):
        distance_to_code(w, max_enumeration=10)


def test_minimum_distance_is_mds():
    for field, ks in [(F5, (1, 2, 3)), (F7, (1, 2, 3)), (F8, (1, 2, 3))]:
        for n_mode in ("full", "punctured"):
            for k in ks:
                code = (
                    full_field_code(field, k)
                    if n_mode == "full"
                    else punctured_code(field, k)
                )
                assert minimum_distance(code) == code.n - code.k + 1


def test_distance_bounds():
    code = punctured_code(F7, 2)
    w = encode(Poly.make([F7.one, F7.scalar(2)]), code)
    b = distance_bounds(w)
    assert (b.lower, b.upper, b.codeword) == (0, 0, True)

    xk = _word_from_poly(_x_power(F7, 2), code)
    b = distance_bounds(xk)
    assert (b.lower, b.upper, b.codeword) == (code.n - 2, code.n - 2, False)

    top = _word_from_poly(_x_power(F7, code.n - 1), code)
    b = distance_bounds(top)
    assert (b.lower, b.upper) == (1, code.n - code.k)


def test_sandwich_for_all_words_small_code():
    code = RSCode(F5, F5.elements()[1:], 2)  # q=5, n=4, k=2
    for values in itertools.product(F5.elements(), repeat=code.n):
        u = Word(values, code)
        d = word_degree(u)
        dist = distance_to_code(u)
        if d <= code.k - 1:
            assert dist == 0
        else:
            assert code.n - code.k >= dist >= code.n - d


def test_codeword_criterion_exhaustive():
    # every word of every length-<=5 code over F_5: distance zero exactly
    # for interpolant degree below k
    for n, k in [(4, 2), (5, 1), (5, 2)]:
        code = RSCode(F5, F5.elements()[:n], k)
        for values in itertools.product(F5.elements(), repeat=code.n):
            u = Word(values, code)
            assert (distance_to_code(u) == 0) == (word_degree(u) <= code.k - 1)


def test_codeword_criterion_sampled():
    rng = random.Random(23)
    for field, k in [(F7, 2), (F8, 2)]:
        code = punctured_code(field, k)
        els = field.elements()
        for _ in range(60):
            values = tuple(els[rng.randrange(field.q)] for _ in range(code.n))
            u = Word(values, code)
            assert (distance_to_code(u) == 0) == (word_degree(u) <= code.k - 1)
        for _ in range(10):
            msg = Poly.make([els[rng.randrange(field.q)] for _ in range(k)])
            assert distance_to_code(encode(msg, code)) == 0


def test_classify_examples():
    # q=5, D=F_5, k=1, u = evaluations of x^2: ordinary
    code = full_field_code(F5, 1)
    u = _word_from_poly(_x_power(F5, 2), code)
    assert word_degree(u) == 2
    assert classify_word(u) == "ordinary"
    assert distance_to_code(u) == code.n - code.k - 1

    # degree-k words are deep holes
    u2 = _word_from_poly(_x_power(F5, 1), code)
    assert classify_word(u2) == "deep_hole"

    # q=7, D=F_7*, k=3, degree 4: never a deep hole
    code7 = punctured_code(F7, 3)
    rng = random.Random(3)
    for _ in range(10):
        coeffs = [F7.elements()[rng.randrange(7)] for _ in range(4)] + [F7.one]
        u = _word_from_poly(Poly.make(coeffs), code7)
        assert word_degree(u) == 4
        assert classify_word(u) == "ordinary"

    with pytest.raises(ValueError):
        classify_word(_word_from_poly(_x_power(F7, 6), code7))


def test_classify_matches_exhaustive_distance():
    for code in (punctured_code(F5, 1), full_field_code(F5, 2), punctured_code(F7, 2)):
        field = code.field
        for c_top in field.elements():
            if c_top.is_zero():
                continue
            for c_k in field.elements():
                poly = Poly.make([field.zero] * code.k + [c_k, c_top])
                u = _word_from_poly(poly, code)
                verdict = classify_word(u)
                dist = distance_to_code(u)
                assert verdict == (
                    "deep_hole" if dist == code.n - code.k else "ordinary"
                )


def test_classify_invariances():
    # scaling by a nonzero constant and adding codewords preserve the verdict
    code = punctured_code(F7, 2)
    base = _word_from_poly(
        Poly.make([F7.scalar(3), F7.zero, F7.one, F7.one]), code
    )  # degree k+1 = 3
    verdict = classify_word(base)
    rng = random.Random(17)
    for _ in range(5):
        c = F7.elements()[rng.randrange(1, 7)]
        scaled = Word(tuple(c * v for v in base.values), code)
        assert classify_word(scaled) == verdict
        msg = Poly.make([F7.elements()[rng.randrange(7)] for _ in range(code.k)])
        shift = encode(msg, code)
        moved = Word(tuple(a + b for a, b in zip(base.values, shift.values)), code)
        assert classify_word(moved) == verdict
        assert word_degree(moved) == word_degree(base)
        assert distance_to_code(moved) == distance_to_code(base)


def test_distance_survey_matches_per_word():
    code = RSCode(F5, F5.elements()[1:], 2)
    surv = distance_survey(code)
    q, m = 5, code.n - code.k
    assert len(surv) == q**m
    for idx in range(q**m):
        digits = []
        v = idx
        for _ in range(m):
            digits.append(v % q)
            v //= q
        coeffs = [F5.zero] * code.k + [F5.elements()[d] for d in digits]
        u = _word_from_poly(Poly.make(coeffs), code)
        assert surv[idx] == distance_to_code(u)


def test_deep_hole_scan_examples():
    rep = deep_hole_scan(F7, "punctured", 3)
    assert rep.deep_hole_free
    assert all(e.count > 0 for e in rep.entries)

    rep8 = deep_hole_scan(F8, "full", 4)
    assert rep8.deep_hole_free

    # q=5, full field, k=1: every leading coefficient is solvable
    rep5 = deep_hole_scan(F5, "full", 1)
    assert rep5.deep_hole_free

    # char-2 counterexample outside the guaranteed range: k+1 = 6 = q - 2
    bad = deep_hole_scan(F8, "full", 5)
    assert not bad.deep_hole_free
    assert [b.enc for b in bad.unsolvable_targets] == [0]

    with pytest.raises(GuardExceeded):
        deep_hole_scan(F8, "full", 4, max_work=10)
    with pytest.raises(ValueError):
        deep_hole_scan(F8, "full", 7)  # k > n - 2


def test_scan_verdict_matches_explicit_words():
    # the scan's per-b1 verdict matches classifying an actual monic word
    field = F7
    code = punctured_code(field, 2)
    rep = deep_hole_scan(field, "punctured", 2)
    for entry in rep.entries:
        poly = Poly.make(
            [field.zero] * code.k + [-entry.b1, field.one]
        )  # x^{k+1} - b1 x^k
        u = _word_from_poly(poly, code)
        verdict = classify_word(u)
        assert (verdict == "ordinary") == entry.solvable


def test_word_text_roundtrip():
    code = punctured_code(F7, 2)
    w = encode(Poly.make([F7.one, F7.scalar(2)]), code)
    assert parse_word(format_word(w), code) == w
    f8code = full_field_code(F8, 2)
    w8 = _word_from_poly(_x_power(F8, 3), f8code)
    assert parse_word(format_word(w8), f8code) == w8
    with pytest.raises(ValueError):
        parse_word("1,2", code)
