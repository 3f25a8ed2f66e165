import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from quantlang.analysis import (
    boolean_weight_reduction,
    cutpoint_ddisc,
    cutpoint_dlavg,
    dsup_bound,
    isolation_check_dlavg,
    isolation_probe_disc,
    sampled_dsup,
)
from quantlang.catalog import long_run_a, one_state, two_scc_limavg
from quantlang.core import LIMAVG, LIMSUP, SUM, SUP, disc, epsilon_approximation, make_automaton
from quantlang.errors import EpsNotPositive, NotDeterministic, NotIsolated, TagMismatch, WeightOutOfRange
from quantlang.sampling import random_automaton
from quantlang.valuation import evaluate_lasso
from quantlang.words import LassoWord, all_lassos, sample_lassos

F = Fraction
WORDS = all_lassos("ab", 4)
QUARTERS = (0, F(1, 4), F(1, 2), F(3, 4), 1)


def test_reduction_of_half_weight():
    A = one_state({"a": F(1, 2), "b": 0}, LIMAVG)
    R = boolean_weight_reduction(A)
    assert len(R.states) == 2
    assert {t.weight for t in R.transitions} == {0, 1}
    assert evaluate_lasso(R, LassoWord((), ("a",))) == F(1, 2)


def test_reduction_rejects_out_of_range():
    with pytest.raises(WeightOutOfRange):
        boolean_weight_reduction(one_state({"a": 2}, LIMAVG))


def test_long_run_a_half_is_not_isolated():
    res = isolation_check_dlavg(long_run_a(), F(1, 2))
    assert res.verdict == "not_isolated"
    assert res.value == F(1, 2)
    assert evaluate_lasso(long_run_a(), res.witness) == F(1, 2)
    with pytest.raises(NotIsolated):
        cutpoint_dlavg(long_run_a(), F(1, 2))


def test_two_scc_margin():
    res = isolation_check_dlavg(two_scc_limavg(), F(1, 2))
    assert res.isolated and res.margin == F(1, 2)


def test_cutpoint_needs_determinism():
    A = make_automaton([("p", "a", "p", 0), ("p", "a", "p", 1)], "p", LIMAVG)
    with pytest.raises(NotDeterministic):
        isolation_check_dlavg(A, 0)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10**6), st.integers(-1, 13))
def test_isolation_verdicts_are_sound(seed, k):
    rng = random.Random(seed)
    eta = F(k, 12)
    A = random_automaton(rng, LIMAVG, rng.randint(1, 3), weights=QUARTERS, deterministic=True)
    res = isolation_check_dlavg(A, eta)
    if res.isolated:
        cp = cutpoint_dlavg(A, eta)
        for w in WORDS:
            v = evaluate_lasso(A, w)
            assert abs(v - eta) >= res.margin
            assert cp.accepts(w) == (v >= eta)
    else:
        assert evaluate_lasso(A, res.witness) == res.value


def test_ddisc_cutpoint_example():
    A = one_state({"a": 1, "b": 0}, disc(F(1, 4)))
    cp = cutpoint_ddisc(A, F(1, 2), F(1, 8))
    assert cp.depth == 2
    assert all(cp.accepts(w) == (w.symbol_at(0) == "a") for w in WORDS)
    with pytest.raises(EpsNotPositive):
        cutpoint_ddisc(A, F(1, 2), 0)


def test_disc_probe():
    A = one_state({"a": 1, "b": 0}, disc(F(1, 4)))
    assert isolation_probe_disc(A, F(1, 2), F(1, 8)).isolated
    res = isolation_probe_disc(A, F(4, 3), F(1, 100))
    assert res.verdict == "not_isolated"
    assert res.value == F(4, 3)


@pytest.mark.parametrize("tag, expected", [(SUP, F(1, 10)), (LIMSUP, F(1, 10)), (disc(F(1, 2)), F(1, 5))])
def test_dsup_bound(tag, expected):
    assert dsup_bound(tag, F(1, 10)) == expected


def test_dsup_bound_rejects_sum():
    with pytest.raises(TagMismatch):
        dsup_bound(SUM, 1)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([F(1, 10), F(1, 3), F(1)]))
def test_perturbation_within_bound(seed, eps):
    rng = random.Random(seed)
    A = random_automaton(rng, disc(F(3, 4)), 3, weights=QUARTERS)
    B = epsilon_approximation(A, eps, seed)
    assert sampled_dsup(A, B, sample_lassos("ab", 20, seed)) <= dsup_bound(A.value_function, eps)
