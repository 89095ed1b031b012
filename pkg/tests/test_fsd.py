from fractions import Fraction as F

import pytest

from farey_diluter.fsd import (BS, FSD, FsdSequence, bs_sequence, check_accuracy, fsd_insertions,
                               fsd_sequence, make_sequence, min_numerator_in, reduced_farey,
                               reduced_farey_enumerated, verify_theorems)


def brute_rf(n):
    """RF by brute force over the inlet ladder: a/(a+b), a, b < 2**n."""
    top = 1 << n
    return sorted({F(a, a + b) for a in range(top) for b in range(top) if a + b})


def brute_pick(lo, hi, rf):
    inside = [x for x in rf if lo < x < hi]
    if not inside:
        return None
    return min(inside, key=lambda x: (x.numerator, x.denominator))


def test_bs3():
    assert list(bs_sequence(3)) == [F(k, 8) for k in range(9)]
    assert list(bs_sequence(1)) == [F(0), F(1, 2), F(1)]


def test_bs6():
    s = bs_sequence(6)
    assert len(s) == 65
    assert F(44, 64) == F(11, 16) and F(11, 16) in s


def test_accuracy_bounds():
    assert check_accuracy(12) == 12
    with pytest.raises(ValueError):
        check_accuracy(0)
    with pytest.raises(ValueError):
        check_accuracy(13)
    assert check_accuracy(16, ceiling=16) == 16
    with pytest.raises(ValueError):
        check_accuracy(17, ceiling=17)
    with pytest.raises(ValueError):
        make_sequence("XYZ", 3)


def test_rf8_head():
    rf = list(reduced_farey(3))
    assert rf[:7] == [F(0), F(1, 8), F(1, 7), F(1, 6), F(1, 5), F(2, 9), F(1, 4)]
    assert rf[-6:] == [F(7, 9), F(4, 5), F(5, 6), F(6, 7), F(7, 8), F(1)]
    assert F(1, 9) not in reduced_farey(3)


def test_rf2():
    assert list(reduced_farey(1)) == [F(0), F(1, 2), F(1)]


@pytest.mark.parametrize("n", range(1, 9))
def test_rf_routes_agree(n):
    assert set(reduced_farey(n, verify=False)) == set(reduced_farey_enumerated(n)) == set(brute_rf(n))


@pytest.mark.parametrize("n", range(1, 9))
def test_rf_interior_bounds(n):
    limit = 1 << n
    for x in reduced_farey(n):
        if 0 < x < 1:
            assert 0 < x.numerator < limit and 0 < x.denominator - x.numerator < limit


def test_fsd8_half_interval_picks():
    picks = {(lo, hi): x for lo, hi, x in fsd_insertions(3)}
    assert picks[(F(1, 8), F(3, 16))] == F(1, 6)
    assert picks[(F(3, 16), F(1, 4))] == F(1, 5)


def test_fsd8():
    s = fsd_sequence(3)
    assert len(s) == 21
    assert list(s)[:5] == [F(0), F(1, 8), F(1, 6), F(1, 5), F(1, 4)]
    assert list(s)[-3:] == [F(5, 6), F(7, 8), F(1)]


def test_boundary_gaps_have_no_insertions():
    for n in range(1, 9):
        ins = fsd_insertions(n)
        assert ins[0][2] is None and ins[1][2] is None
        assert ins[-1][2] is None and ins[-2][2] is None


@pytest.mark.parametrize("n", range(1, 7))
def test_insertions_are_min_numerator_of_rf(n):
    rf = brute_rf(n)
    for lo, hi, pick in fsd_insertions(n):
        assert pick == brute_pick(lo, hi, rf)


def test_min_numerator_tie_break_prefers_small_denominator():
    # 1/7 and 1/6 both sit in (1/8, 3/16); 1/6 uses less fluid
    assert min_numerator_in(F(1, 8), F(3, 16), 3) == F(1, 6)


@pytest.mark.parametrize("n", range(1, 11))
def test_fsd_structure(n):
    s = fsd_sequence(n)
    assert s.is_strictly_increasing()
    assert s[0] == 0 and s[-1] == 1
    assert set(bs_sequence(n)) <= set(s)
    assert s.max_gap <= F(1, 1 << n)


@pytest.mark.parametrize("n", range(2, 11))
def test_fsd_is_strict_superset_from_n2(n):
    assert set(bs_sequence(n)) < set(fsd_sequence(n))
    assert len(fsd_sequence(n)) > len(bs_sequence(n))


@pytest.mark.parametrize("n", range(1, 11))
def test_closed_form_size(n):
    assert len(fsd_sequence(n)) == 3 * ((1 << n) - 1)


def test_fsd_subset_of_rf():
    for n in range(1, 8):
        assert set(fsd_sequence(n)) <= set(reduced_farey(n))


def test_verify_fsd8():
    rep = verify_theorems(fsd_sequence(3))
    assert rep.passed
    assert rep.max_gap == F(1, 8)  # the boundary gaps stay empty
    assert rep.closed_form_size == 21


def test_verify_fsd2():
    # FSD_2 built by hand from RF_2 = {0, 1/2, 1}: every gap is a boundary
    # gap, so nothing is inserted and FSD_2 == BS_1
    rep = verify_theorems(fsd_sequence(1))
    assert list(fsd_sequence(1)) == [F(0), F(1, 2), F(1)]
    assert rep["T1"].passed
    assert rep["T3"].passed
    assert rep["T2"].passed


def test_verify_detects_missing_half():
    good = fsd_sequence(3)
    bad = FsdSequence(FSD, 3, tuple(x for x in good if x != F(1, 2)))
    rep = verify_theorems(bad)
    assert not rep["T3"].passed
    assert "1/2" in rep["T3"].detail


def test_verify_detects_bound_violation():
    bad = FsdSequence(FSD, 3, tuple(sorted(set(fsd_sequence(3)) | {F(1, 9)})))
    assert not verify_theorems(bad)["T1"].passed


def test_verify_rejects_other_kinds():
    with pytest.raises(ValueError):
        verify_theorems(bs_sequence(3))
