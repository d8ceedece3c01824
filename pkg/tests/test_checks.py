import itertools
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from horadam.catalog import ORDERED_PAIRS
from horadam.checks import (
    HOLDS,
    DeltaArgs,
    Fails,
    Skipped,
    SkipReason,
    check_binomial_sum,
    check_lambda_relation,
    check_lemma3,
    check_three_term_xx,
    check_three_term_xy,
    check_weighted_sum_xx,
    check_weighted_sum_xy,
    delta2,
    deltas,
    solve_lambda_pair,
)
from horadam.sequences import BUILTIN_LABELS, RecurrencePair, SequenceError, SequenceSpec, builtin, term

ZERO = Skipped(SkipReason.ZERO_DENOMINATOR)
F, L, J, j, P, Q = (builtin(label) for label in BUILTIN_LABELS)

small = st.integers(-6, 6)


@st.composite
def same_recurrence_pair(draw):
    p = draw(st.integers(-5, 5))
    q = draw(st.integers(-5, 5).filter(bool))
    seeds = draw(st.lists(st.integers(-5, 5), min_size=4, max_size=4))
    pair = RecurrencePair(p, q)
    return SequenceSpec(pair, seeds[0], seeds[1]), SequenceSpec(pair, seeds[2], seeds[3])


def test_delta2_examples():
    assert delta2(DeltaArgs(F, L, d=0, e=1, a=0, b=0)) == -2
    assert delta2(DeltaArgs(F, F, d=3, e=3, a=-2, b=5)) == 0
    assert delta2(DeltaArgs(P, P, d=2, e=0, a=0, b=1)) == 2


def test_delta_args_require_same_recurrence():
    with pytest.raises(SequenceError, match='do not share a recurrence'):
        DeltaArgs(F, J, 0, 1, 0, 0)


def test_solve_lambda_pair_examples():
    assert solve_lambda_pair(F, L, 0, 0, 1, 0, 1) == (Fraction(-1, 2), Fraction(1, 2))
    assert solve_lambda_pair(F, F, 0, 1, 0, 1, 3) == (1, 0)
    assert solve_lambda_pair(F, L, 2, -1, 4, 3, 3) == ZERO


def test_solve_lambda_pair_matches_fibonacci_lucas_oracle():
    l1, l2 = solve_lambda_pair(F, L, 0, 0, 1, 0, 1)
    for m in range(-15, 16):
        assert term(F, m - 1) == l1 * term(F, m) + l2 * term(L, m)
        assert term(F, m - 1) == Fraction(term(L, m) - term(F, m), 2)


def test_solve_lambda_pair_rejects_mismatched_pairs():
    with pytest.raises(SequenceError):
        solve_lambda_pair(P, j, 0, 0, 1, 0, 1)


@settings(max_examples=500, deadline=None)
@given(same_recurrence_pair(), small, small, small, small, small)
def test_solver_relation_holds_beyond_the_two_solved_rows(xy, a, b, c, d, e):
    X, Y = xy
    assume(deltas(X, Y, a, b, c, d, e)[0] != 0)
    solved = solve_lambda_pair(X, Y, a, b, c, d, e)
    assert not isinstance(solved, Skipped)
    l1, l2 = solved
    for m in range(-10, 10):
        assert term(X, m - c) == l1 * term(X, m - a) + l2 * term(Y, m - b)
        assert check_lambda_relation(X, Y, a, b, c, d, e, m) == HOLDS


def test_three_term_xy_examples():
    assert check_three_term_xy(F, L, a=1, b=2, c=0, d=3, e=5, m=4) == HOLDS
    assert check_three_term_xy(J, j, a=3, b=-1, c=2, d=4, e=4, m=0) == HOLDS
    assert check_three_term_xy(P, Q, a=2, b=2, c=2, d=-3, e=5, m=7) == HOLDS


def test_three_term_xy_strict_mode_skips_singular_tuples():
    assert check_three_term_xy(F, L, 1, 2, 0, 3, 3, 4, strict=True) == Skipped(SkipReason.PRECONDITION_UNMET)
    assert check_three_term_xy(F, L, 1, 2, 0, 3, 3, 4) == HOLDS


def test_three_term_xy_rejects_mismatched_pairs():
    with pytest.raises(SequenceError):
        check_three_term_xy(F, Q, 0, 0, 0, 0, 1, 0)


@pytest.mark.parametrize('x_label, y_label', ORDERED_PAIRS)
def test_three_term_xy_never_fails_for_builtin_pairs(x_label, y_label):
    X, Y = builtin(x_label), builtin(y_label)
    for a, b, c, d, e in itertools.product(range(-2, 3), repeat=5):
        for m in range(-3, 4):
            assert check_three_term_xy(X, Y, a, b, c, d, e, m) == HOLDS, (a, b, c, d, e, m)
        strict = check_three_term_xy(X, Y, a, b, c, d, e, a + d - e, strict=True)
        assert strict in (HOLDS, Skipped(SkipReason.PRECONDITION_UNMET))


def test_three_term_xx_examples():
    assert check_three_term_xx(F, 0, 1, 2, 3, 5, 7) == HOLDS
    assert check_three_term_xx(Q, 4, -3, 1, 2, 2, 9) == HOLDS
    witness = SequenceSpec(RecurrencePair(3, -2), 1, 4)
    assert check_three_term_xx(witness, a=-1, b=2, c=0, d=1, e=4, m=-3) == HOLDS


@settings(max_examples=200, deadline=None)
@given(same_recurrence_pair(), small, small, small, small, small, small)
def test_three_term_xx_holds_for_any_recurrence(xy, a, b, c, d, e, m):
    X, _ = xy
    assert check_three_term_xx(X, a, b, c, d, e, m) == HOLDS


def test_diagonal_three_term_examples():
    assert check_lemma3(L, a=2, b=-1, c=3, m=0) == HOLDS
    assert check_lemma3(P, a=4, b=4, c=-2, m=1) == HOLDS
    assert check_lemma3(J, a=0, b=0, c=0, m=5) == HOLDS


@settings(max_examples=100, deadline=None)
@given(same_recurrence_pair(), small, small, small, small)
def test_diagonal_three_term_holds_for_any_recurrence(xy, a, b, c, m):
    assert check_lemma3(xy[0], a, b, c, m) == HOLDS


def _nonsingular_tuple(X, Y):
    for a, b, c, d, e in itertools.product(range(-3, 4), repeat=5):
        if 0 not in deltas(X, Y, a, b, c, d, e):
            return a, b, c, d, e
    raise AssertionError('no nonsingular tuple in window')


def test_weighted_sum_xy_example():
    outcome = check_weighted_sum_xy(F, L, a=2, b=0, c=1, d=0, e=3, m=4, k=3)
    if 0 in deltas(F, L, 2, 0, 1, 0, 3):
        assert outcome == ZERO
    else:
        assert outcome == HOLDS


def test_weighted_sum_xy_empty_sum_at_minus_one(witness_pair):
    X, Y = witness_pair
    a, b, c, d, e = _nonsingular_tuple(X, Y)
    assert check_weighted_sum_xy(X, Y, a, b, c, d, e, m=2, k=-1) == HOLDS


def test_weighted_sum_xy_skips_when_d_equals_e():
    assert check_weighted_sum_xy(J, j, 1, 2, 3, 4, 4, 0, 2) == ZERO


@pytest.mark.parametrize('x_label, y_label', ORDERED_PAIRS)
def test_weighted_sum_xy_never_fails(x_label, y_label):
    X, Y = builtin(x_label), builtin(y_label)
    for a, b, c, d, e in itertools.product(range(-2, 3), repeat=5):
        for k in (-4, -1, 0, 3):
            assert not isinstance(check_weighted_sum_xy(X, Y, a, b, c, d, e, a - e, k), Fails)


def test_weighted_sum_xx_examples():
    assert not isinstance(check_weighted_sum_xx(P, 1, a=3, b=0, c=1, d=0, e=2, m=5, k=4), Fails)
    assert not isinstance(check_weighted_sum_xx(L, 2, a=3, b=1, c=1, d=0, e=2, m=5, k=4), Fails)
    assert check_weighted_sum_xx(F, 3, a=3, b=0, c=1, d=2, e=2, m=5, k=4) == ZERO


def test_weighted_sum_xx_rejects_unknown_variant():
    with pytest.raises(ValueError, match='variant'):
        check_weighted_sum_xx(F, 4, 0, 0, 0, 0, 0, 0, 0)


@settings(max_examples=150, deadline=None)
@given(same_recurrence_pair(), st.sampled_from([1, 2, 3]),
       st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4),
       st.integers(-4, 4), st.integers(-6, 6))
def test_weighted_sums_hold_for_any_recurrence(xy, variant, a, b, c, d, e, m, k):
    X, Y = xy
    assert not isinstance(check_weighted_sum_xx(X, variant, a, b, c, d, e, m, k), Fails)
    assert not isinstance(check_weighted_sum_xy(X, Y, a, b, c, d, e, m, k), Fails)


def test_binomial_sum_examples():
    assert not isinstance(check_binomial_sum(F, 1, a=1, b=3, c=0, d=2, e=5, m=0, k=4), Fails)
    assert not isinstance(check_binomial_sum(Q, 3, a=2, b=2, c=0, d=1, e=4, m=3, k=5), Fails)


@pytest.mark.parametrize('variant', [1, 2, 3])
def test_binomial_sum_at_k_zero(variant):
    outcome = check_binomial_sum(P, variant, a=3, b=0, c=1, d=0, e=2, m=5, k=0)
    assert outcome in (HOLDS, ZERO)


def test_binomial_sum_rejects_negative_k():
    with pytest.raises(ValueError):
        check_binomial_sum(F, 1, 0, 1, 2, 3, 4, 5, -1)


@settings(max_examples=150, deadline=None)
@given(same_recurrence_pair(), st.sampled_from([1, 2, 3]),
       st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4),
       st.integers(-4, 4), st.integers(0, 7))
def test_binomial_sums_hold_for_any_recurrence(xy, variant, a, b, c, d, e, m, k):
    assert not isinstance(check_binomial_sum(xy[0], variant, a, b, c, d, e, m, k), Fails)


def test_fails_carries_both_sides():
    outcome = Fails(Fraction(3, 6), 2)
    assert str(outcome) == 'Fails(lhs=1/2, rhs=2)'
