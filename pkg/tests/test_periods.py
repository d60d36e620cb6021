import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from critfact import (
    InvalidPeriod,
    InvalidPosition,
    TooShort,
    critical_interval,
    is_local_period,
    is_unimodal,
    local_period,
    local_periods,
    local_periods_scan,
    midpoint,
    profile,
    profile_csv_rows,
    profile_json_dict,
    repetition_info,
    reverse,
)
from critfact.squarefree import square_free_words

from conftest import all_words, brute_local_period, repetition_candidates

EX1_LP = [3, 5, 5, 2, 5, 5, 19, 19, 2, 2, 19, 19, 3, 3, 3, 3, 3, 3]


def test_is_local_period_examples(example2):
    assert is_local_period(example2, 4, 12)
    assert not is_local_period(example2, 4, 11)
    assert is_local_period("010", 1, 2)  # window is just w[1] = w[3]
    for w in ("01", "0102", "00121"):
        for p in range(1, len(w)):
            assert is_local_period(w, p, len(w))


def test_is_local_period_errors():
    with pytest.raises(InvalidPosition):
        is_local_period("012", 0, 1)
    with pytest.raises(InvalidPosition):
        is_local_period("012", 3, 1)
    with pytest.raises(InvalidPeriod):
        is_local_period("012", 1, 0)
    with pytest.raises(InvalidPeriod):
        is_local_period("012", 1, 4)


def test_window_condition_matches_candidate_enumeration():
    # the window test agrees with the literal shape: some u of length q
    # ends at the cut (or absorbs x) and starts after it (or absorbs y)
    for n in range(2, 6):
        for w in all_words(n):
            for p in range(1, n):
                for q in range(1, n + 1):
                    exists = bool(repetition_candidates(w, p, q))
                    assert is_local_period(w, p, q) == exists, (w, p, q)


def test_local_period_matches_candidate_enumeration():
    for n in range(2, 6):
        for w in all_words(n):
            for p in range(1, n):
                assert local_period(w, p) == brute_local_period(w, p)


def test_local_period_examples(example1):
    assert [local_period(example1, p) for p in range(1, 19)] == EX1_LP
    assert local_period("01", 1) == 2
    assert local_period("010", 1) == 2


def test_local_period_errors():
    with pytest.raises(InvalidPosition):
        local_period("01", 2)
    with pytest.raises(InvalidPosition):
        local_period("0", 1)


def test_scan_and_sweep_agree_exhaustively():
    for n in range(2, 11):
        for w in all_words(n):
            assert local_periods(w) == local_periods_scan(w)
    for n in range(2, 14):
        for w in all_words(n, "01"):
            assert local_periods(w) == local_periods_scan(w)


@settings(max_examples=200)
@given(st.text(alphabet="012", min_size=2, max_size=150))
def test_scan_and_sweep_agree_random(w):
    assert local_periods(w) == local_periods_scan(w)


def test_repetition_info_examples(example2):
    info = repetition_info(example2, 4)
    assert info.u == "012021020102"
    assert info.length == 12
    assert info.left_overflow and not info.right_overflow

    info = repetition_info("010", 1)
    assert (info.u, info.length) == ("10", 2)
    assert info.left_overflow and not info.right_overflow


def test_repetition_info_flags_follow_length():
    for n in range(2, 9):
        for w in all_words(n):
            for p in range(1, n):
                info = repetition_info(w, p)
                assert info.length == len(info.u)
                assert info.left_overflow == (info.length > p)
                assert info.right_overflow == (info.length > n - p)


def test_minimal_repetition_word_unique_and_unbordered():
    # at the minimal length exactly one candidate exists, it is the
    # reconstructed one, and it has no border
    for n in range(2, 6):
        for w in all_words(n):
            for p in range(1, n):
                info = repetition_info(w, p)
                cands = repetition_candidates(w, p, info.length)
                assert cands == [info.u]
                u = info.u
                assert not any(u[:k] == u[-k:] for k in range(1, len(u)))


def test_double_overflow_rebuild_is_y_then_missing_x():
    # "01" at p=1 overflows both ways: u = y.x
    info = repetition_info("01", 1)
    assert info.u == "10"
    assert info.left_overflow and info.right_overflow
    info = repetition_info("012", 2)
    assert info.u == "201"


def test_profile_example1(example1):
    prof = profile(example1)
    assert prof.period == 19
    assert list(prof.local_periods) == EX1_LP
    assert prof.critical_points == (7, 8, 11, 12)
    assert prof.eta == 4
    assert prof.density == Fraction(4, 18)
    assert (prof.eta, len(prof.word) - 1) == (4, 18)


def test_profile_example2(example2):
    prof = profile(example2)
    assert prof.period == 17
    assert prof.critical_points == tuple(range(5, 14))
    assert prof.eta == 9
    assert prof.density == Fraction(9, 16)
    assert critical_interval(prof) == (5, 13)


def test_profile_example3(example3):
    prof = profile(example3)
    assert list(prof.local_periods) == [3, 6, 6, 12, 12, 12, 12] + [24] * 12 + [14, 14, 6, 2]
    assert prof.eta == 12
    assert is_unimodal(prof)


def test_profile_too_short():
    with pytest.raises(TooShort):
        profile("0")
    with pytest.raises(TooShort):
        profile("")


def test_midpoint():
    assert midpoint("0" * 17) == 9
    assert midpoint("0" * 24) == 12
    assert midpoint("01") == 1
    with pytest.raises(TooShort):
        midpoint("0")


def test_critical_interval(example1, example2):
    assert critical_interval(profile(example1)) is None  # {7,8,11,12} has gaps
    assert critical_interval(profile(example2)) == (5, 13)
    assert critical_interval(profile("01")) == (1, 1)


def test_is_unimodal(example1, example3):
    assert not is_unimodal(profile(example1))  # 5,5,2,5 breaks the rise
    assert is_unimodal(profile(example3))
    for w in square_free_words(12):
        assert is_unimodal(profile(w))


def test_local_periods_reverse_symmetry():
    for n in range(2, 9):
        for w in all_words(n):
            assert local_periods(reverse(w)) == local_periods(w)[::-1]


@settings(max_examples=150)
@given(st.text(alphabet="012", min_size=2, max_size=80))
def test_local_periods_reverse_symmetry_random(w):
    assert local_periods(reverse(w)) == local_periods(w)[::-1]


def test_global_period_is_local_period_everywhere():
    for n in range(2, 9):
        for w in all_words(n):
            prof = profile(w)
            assert all(v <= prof.period for v in prof.local_periods)
            assert prof.critical_points  # CFT at desk scale
            assert prof.critical_points[0] <= prof.period


def test_profile_json_shape(example2):
    doc = profile_json_dict(profile(example2))
    assert list(doc) == [
        "word", "period", "localPeriods", "criticalPoints", "eta",
        "densityNum", "densityDen", "midpoint", "repetitionWords",
    ]
    assert doc["criticalPoints"] == list(range(5, 14))
    assert doc["densityNum"] == 9 and doc["densityDen"] == 16
    rep4 = doc["repetitionWords"][3]
    assert rep4 == {"p": 4, "u": "012021020102", "leftOverflow": True, "rightOverflow": False}
    json.dumps(doc)  # must be serialisable as-is


def test_profile_csv_rows(example2):
    rows = profile_csv_rows(profile(example2))
    assert len(rows) == 16
    assert rows[3] == (4, 12, "012021020102", True, False, False)
    assert rows[4][5] is True  # p = 5 is critical


def test_density_over_length(example2):
    prof = profile(example2)
    assert prof.density_over_length == Fraction(9, 17)


def test_profile_length_ceiling():
    from critfact import ResourceGuard

    long_word = "01" * 3000
    with pytest.raises(ResourceGuard):
        profile(long_word)
    assert profile(long_word, max_len=6000).period == 2
