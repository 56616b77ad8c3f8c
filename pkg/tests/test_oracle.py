"""The dynamic-programming oracle against naive enumeration and its invariants."""

import random

import pytest

from ffsubsum.combinatorics import binom
from ffsubsum.counts import ExclusionSet
from ffsubsum.gf import make_field
from ffsubsum.limits import GuardExceeded
from ffsubsum.oracle import dp_count_table, naive_count

F4, F5, F7, F8 = (make_field(*pe) for pe in [(2, 2), (5, 1), (7, 1), (2, 3)])


def test_hand_examples():
    star5 = ExclusionSet(F5, (F5.zero,))
    assert dp_count_table(star5).count(2, F5.zero) == 2  # {1,4}, {2,3}
    assert dp_count_table(star5).count(2, F5.one) == 1  # {2,4}
    assert naive_count(star5, 2, F5.zero) == 2
    assert naive_count(star5, 2, F5.one) == 1

    full4 = ExclusionSet(F4, ())
    assert naive_count(full4, 2, F4.zero) == 0  # x + y = 0 forces x = y in char 2

    two7 = ExclusionSet(F7, (F7.zero, F7.one))
    assert naive_count(two7, 1, F7.scalar(3)) == 1

    full7 = ExclusionSet(F7, ())
    assert naive_count(full7, 7, F7.zero) == 1  # the whole field sums to 0


def test_full_subset_row():
    for f in (F5, F7, F8):
        for excl in (ExclusionSet(f, ()), ExclusionSet(f, (f.one,))):
            table = dp_count_table(excl)
            total = f.zero
            for x in excl.domain():
                total = total + x
            n = excl.n
            for b in f.elements():
                assert table.count(n, b) == (1 if b == total else 0)


def test_dp_equals_naive_exhaustive():
    import itertools

    for f in (F4, F5, F7):
        els = f.elements()
        sets = [ExclusionSet(f, ())]
        sets += [ExclusionSet(f, (x,)) for x in els]
        sets += [ExclusionSet(f, c) for c in itertools.combinations(els, 2)]
        for excl in sets:
            table = dp_count_table(excl)
            for k in range(excl.n + 1):
                for b in els:
                    assert table.count(k, b) == naive_count(excl, k, b)


def test_table_invariants():
    for f in (F5, F8):
        excl = ExclusionSet(f, (f.zero,))
        table = dp_count_table(excl)
        assert table.count(0, f.zero) == 1
        for b in f.elements():
            if not b.is_zero():
                assert table.count(0, b) == 0
        for k in range(excl.n + 1):
            assert sum(table.rows[k]) == binom(excl.n, k)


def test_insertion_order_independence():
    rng = random.Random(31)
    for f in (F5, F7, F8):
        excl = ExclusionSet(f, (f.zero, f.one))
        base = dp_count_table(excl)
        domain = list(excl.domain())
        for _ in range(3):
            rng.shuffle(domain)
            assert dp_count_table(excl, order=tuple(domain)).rows == base.rows


def test_k_max_truncation():
    excl = ExclusionSet(F8, (F8.zero,))
    table = dp_count_table(excl, k_max=3)
    assert table.k_max == 3
    full = dp_count_table(excl)
    assert table.rows == full.rows[:4]
    with pytest.raises(ValueError):
        table.count(4, F8.zero)
    with pytest.raises(ValueError):
        dp_count_table(excl, k_max=99)


def test_naive_guard():
    f = make_field(2, 4)
    excl = ExclusionSet(f, ())
    with pytest.raises(GuardExceeded):
        naive_count(excl, 8, f.zero, max_enumeration=100)
