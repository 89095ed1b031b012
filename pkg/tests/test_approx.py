import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from farey_diluter.approx import (TargetCF, compare_lattices, find_closest_fast,
                                  find_closest_oracle, parse_target, search_range)
from farey_diluter.fsd import BS, FSD, FsdSequence, bs_sequence, fsd_sequence, reduced_farey

TARGET = F(355, 512)  # 44.375/64


def random_targets(seed, count, max_den=10**6):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        q = rng.randint(1, max_den)
        out.append(F(rng.randint(0, q), q))
    return out


@pytest.mark.parametrize("text, value", [
    ("9/13", F(9, 13)),
    ("44.375/64", F(355, 512)),
    ("0%", F(0)),
    ("69.3%", F(693, 1000)),
    ("0.693", F(693, 1000)),
    ("1", F(1)),
    (" 100 % ", F(1)),
    (".5", F(1, 2)),
])
def test_parse_target(text, value):
    t = parse_target(text)
    assert t.value == value
    assert t.original_text == text


@pytest.mark.parametrize("text", ["", "abc", "1/0", "-0.5", "3/2", "101%", "1e-3", "1/2/3"])
def test_parse_target_rejects(text):
    with pytest.raises(ValueError):
        parse_target(text)


def test_worked_example_fsd():
    for f in (find_closest_oracle, find_closest_fast):
        a = f(parse_target("44.375/64"), fsd_sequence(6))
        assert a.chosen == F(9, 13)
        assert a.error == F(9, 13) - TARGET == F(-7, 6656)
        assert 0.00105 <= float(abs(a.error)) <= 0.00106


def test_worked_example_bs():
    a = find_closest_oracle(TARGET, bs_sequence(6))
    assert a.chosen == F(44, 64)
    assert a.error == F(-3, 8) / 64


def test_member_maps_to_itself():
    a = find_closest_oracle(F(3, 8), fsd_sequence(3))
    assert a.chosen == F(3, 8) and a.error == 0


def test_zero_target():
    for n in (1, 3, 6):
        for seq in (bs_sequence(n), fsd_sequence(n)):
            a = find_closest_fast(F(0), seq)
            assert a.chosen == 0 and a.error == 0


def test_search_range_known_positions():
    # one-based positions quoted in the walkthrough: 2/3 is 127th, 11/16
    # 131st, 9/13 132nd and 1/1 the last (189th) element of FSD_64
    s = fsd_sequence(6)
    assert s.index_of(F(2, 3)) + 1 == 127
    assert s.index_of(F(11, 16)) + 1 == 131
    assert s.index_of(F(9, 13)) + 1 == 132
    assert len(s) == 189
    lo, hi = search_range(TARGET, s)
    assert s[lo] == F(44, 64) and s[hi] == F(45, 64)


def test_search_range_falls_back_when_bracket_missing():
    seq = FsdSequence(FSD, 3, (F(0), F(1, 3), F(2, 3), F(1)))
    lo, hi = search_range(F(1, 2), seq)
    assert (seq[lo], seq[hi]) == (F(1, 3), F(2, 3))
    assert find_closest_fast(F(1, 2), seq).chosen == F(1, 3)  # tie -> lower
    assert find_closest_fast(F(0.6), seq).chosen == F(2, 3)


def test_tie_goes_to_lower():
    s = bs_sequence(3)
    for f in (find_closest_oracle, find_closest_fast):
        assert f(F(1, 16), s).chosen == 0
        assert f(F(3, 16), s).chosen == F(1, 8)


@pytest.mark.parametrize("n", range(1, 9))
def test_fast_equals_oracle_random(n):
    s = fsd_sequence(n)
    for t in random_targets(n, 1000):
        fast, slow = find_closest_fast(t, s), find_closest_oracle(t, s)
        assert fast.chosen == slow.chosen and fast.error == slow.error
        assert not fast.fallback


@pytest.mark.parametrize("n", range(1, 7))
def test_fast_equals_oracle_on_members_and_midpoints(n):
    for seq in (bs_sequence(n), fsd_sequence(n), reduced_farey(n)):
        for x in seq:
            assert find_closest_fast(x, seq).chosen == x
        for x, y in zip(seq, seq[1:]):
            m = (x + y) / 2
            assert find_closest_fast(m, seq).chosen == find_closest_oracle(m, seq).chosen == x


@given(st.integers(1, 10**9), st.integers(1, 10**9), st.integers(1, 8))
def test_fast_equals_oracle_property(p, q, n):
    t = F(min(p, q), max(p, q))
    s = fsd_sequence(n)
    a = find_closest_fast(t, s)
    assert a.chosen == find_closest_oracle(t, s).chosen
    assert a.error == a.chosen - t
    assert abs(a.error) <= s.max_gap / 2


def test_compare_lattices_worked_example():
    c = compare_lattices(parse_target("44.375/64"), 6)
    assert c.bs.chosen == F(11, 16) and c.fsd.chosen == F(9, 13)
    assert abs(c.bs.error) == F(3, 8) / 64
    assert round(float(abs(c.fsd.error)) * 64, 3) == 0.067
    assert c.bs.lattice_kind == BS and c.fsd.lattice_kind == FSD
    assert c.dominates


@pytest.mark.parametrize("n", [1, 3, 6, 10])
def test_half_is_exact(n):
    c = compare_lattices(F(1, 2), n)
    assert c.bs.error == 0 and c.fsd.error == 0


def test_dominance_sweep_n6():
    for t in random_targets(2024, 10_000):
        c = compare_lattices(t, 6)
        assert abs(c.fsd.error) <= abs(c.bs.error) <= F(1, 128)


@pytest.mark.parametrize("n", range(1, 9))
def test_bs_error_bound(n):
    s = bs_sequence(n)
    for t in random_targets(100 + n, 500):
        assert abs(find_closest_fast(t, s).error) <= F(1, 2 ** (n + 1))


def test_target_cf_range():
    with pytest.raises(ValueError):
        TargetCF(F(3, 2), "3/2")
    assert TargetCF.of(F(1, 3)).value == F(1, 3)
    assert TargetCF.of("1/3").original_text == "1/3"


def test_empty_lattice():
    empty = FsdSequence(FSD, 3, ())
    with pytest.raises(ValueError):
        find_closest_oracle(F(1, 2), empty)
    with pytest.raises(ValueError):
        find_closest_fast(F(1, 2), empty)
