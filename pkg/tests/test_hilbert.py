import random

import pytest
from hypothesis import given, strategies as st

from ncg.casebook import MON, MON7
from ncg.hilbert import (
    EQUAL,
    BadDenominator,
    EmptyForbiddenWord,
    FirstDifference,
    brute_force_counts,
    build_automaton,
    compare_series,
    count_normal_words,
    expand_rational,
    hilbert_from_lms,
    parse_rational,
)

HS = [1, 2, 4, 7, 11, 16, 23, 31]


def enumerate_hs(N):
    """Count solutions of m = a + b + 2c + 3d directly."""
    out = []
    for m in range(N + 1):
        n = 0
        for c in range(m // 2 + 1):
            for d in range((m - 2 * c) // 3 + 1):
                n += m - 2 * c - 3 * d + 1
        out.append(n)
    return out


# -- automaton ---------------------------------------------------------------


def test_mon_automaton_states():
    aut = build_automaton(sorted(MON))
    # root plus the live proper prefixes x1, x1x2, x1x2x1
    assert sorted(aut.prefixes) == [(), (0,), (0, 1), (0, 1, 0)]
    assert not aut.accepts((1, 0, 1, 1)) and aut.accepts((1, 1, 0, 0))


def test_no_forbidden_words():
    aut = build_automaton([])
    assert aut.nstates == 1
    assert list(count_normal_words(aut, [1, 1], 6)) == [2**m for m in range(7)]


def test_all_generators_forbidden():
    assert list(hilbert_from_lms([(0,), (1,)], [1, 1], 4)) == [1, 0, 0, 0, 0]


def test_empty_forbidden_word():
    with pytest.raises(EmptyForbiddenWord):
        build_automaton([()])


def test_mon_counts():
    assert list(hilbert_from_lms(sorted(MON), [1, 1], 5)) == [1, 2, 4, 7, 11, 17]


def test_mon7_counts():
    assert list(hilbert_from_lms(sorted(MON7), [1, 1], 7)) == [1, 2, 4, 7, 11, 16, 23, 32]


def test_weighted_counts():
    # x of degree 1, z of degree 2, no relations: c_m = Fibonacci numbers
    counts = list(hilbert_from_lms([], [1, 2], 8))
    assert counts == [1, 1, 2, 3, 5, 8, 13, 21, 34]


def test_weights_must_match():
    with pytest.raises(ValueError):
        count_normal_words(build_automaton([(0, 1)]), [1, 1, 1], 3)


def _random_forbidden(rng):
    k = rng.randint(1, 4)
    return sorted({tuple(rng.randrange(2) for _ in range(rng.randint(2, 5))) for _ in range(k)})


@pytest.mark.parametrize("seed", range(10))
def test_automaton_matches_brute_force(seed):
    rng = random.Random(seed)
    forb = _random_forbidden(rng)
    assert list(hilbert_from_lms(forb, [1, 1], 8)) == list(brute_force_counts(forb, [1, 1], 8))


@given(
    st.lists(st.lists(st.integers(0, 2), min_size=1, max_size=4).map(tuple), min_size=1, max_size=4),
    st.sampled_from([(1, 1, 1), (1, 2, 3), (2, 1, 1)]),
)
def test_automaton_matches_brute_force_three_letters(forb, weights):
    assert list(hilbert_from_lms(forb, weights, 6)) == list(brute_force_counts(forb, weights, 6))


@given(st.lists(st.integers(0, 1), max_size=7).map(tuple), st.lists(st.integers(0, 1), min_size=1, max_size=3).map(tuple))
def test_accepts_matches_factor_test(word, forb):
    aut = build_automaton([forb])
    has = any(word[i : i + len(forb)] == forb for i in range(len(word) - len(forb) + 1))
    assert aut.accepts(word) == (not has)


# -- rational series ---------------------------------------------------------


def test_expand_hilbert_series():
    assert list(expand_rational([1], [1, 1, 2, 3], 7)) == HS


def test_expand_tail_against_enumeration():
    series = list(expand_rational([1], [1, 1, 2, 3], 10))
    assert series[8:] == [41, 53, 67]
    assert series == enumerate_hs(10)


def test_expand_geometric():
    assert list(expand_rational([1], [1], 3)) == [1, 1, 1, 1]


def test_bad_denominator():
    with pytest.raises(BadDenominator):
        expand_rational([1], [0], 3)


@pytest.mark.parametrize(
    "text,exps",
    [
        ("1/((1-t)^2*(1-t^2)*(1-t^3))", [1, 1, 2, 3]),
        ("1/(1-t)", [1]),
        ("1 / ( (1 - t^2) * (1-t)^3 )", [2, 1, 1, 1]),
        ("1", []),
    ],
)
def test_parse_rational(text, exps):
    assert parse_rational(text) == ([1], exps)


def test_parse_rational_rejects_other_numerators():
    with pytest.raises(ValueError):
        parse_rational("2/(1-t)")
    with pytest.raises(ValueError):
        parse_rational("1/(1+t)")


def test_misprinted_cube_differs():
    # one extra factor (1-t) would already change the degree-2 coefficient
    assert list(expand_rational([1], [1, 1, 1, 2, 3], 7))[:3] == [1, 3, 7]


# -- comparison ----------------------------------------------------------------


def test_compare_mon_against_hs():
    mon = list(hilbert_from_lms(sorted(MON), [1, 1], 7))
    assert compare_series(mon, HS) == FirstDifference(5, 1)


def test_compare_mon7_against_hs():
    mon7 = list(hilbert_from_lms(sorted(MON7), [1, 1], 7))
    assert compare_series(mon7, HS) == FirstDifference(7, 1)
    assert [a - b for a, b in zip(mon7, HS)] == [0] * 7 + [1]


def test_compare_equal_and_mismatch():
    assert compare_series(HS, HS) == EQUAL
    assert compare_series([1, 2], [1, 3]) == FirstDifference(1, -1)
    with pytest.raises(ValueError):
        compare_series([1], [1, 2])
