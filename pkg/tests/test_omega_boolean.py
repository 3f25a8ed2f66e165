import random

import pytest
from hypothesis import given, settings, strategies as st

from quantlang.catalog import one_state
from quantlang.core import LIMAVG, LIMINF, LIMSUP
from quantlang.errors import UnsupportedTag
from quantlang.omega_boolean import (
    COBUCHI,
    BooleanOmegaAutomaton,
    MembershipChecker,
    accepted_witness,
    lasso_membership,
    nbw_complement,
    nbw_emptiness,
    ncw_determinize,
    nlinf_determinize,
    threshold_automaton,
)
from quantlang.sampling import random_automaton, random_nbw
from quantlang.valuation import evaluate_lasso
from quantlang.words import LassoWord, all_lassos

from support import WEIGHTS

WORDS = all_lassos("ab", 4)


def eventually_always_a():
    # guess the point after which only a is read
    return BooleanOmegaAutomaton(
        ("p", "q"), "p", ("a", "b"),
        (("p", "a", "p", False), ("p", "b", "p", False), ("p", "a", "q", True), ("q", "a", "q", True)),
    )


def test_membership_basic():
    B = eventually_always_a()
    assert lasso_membership(B, LassoWord(("b",), ("a",)))
    assert not lasso_membership(B, LassoWord((), ("a", "b")))
    assert not B.is_total


def test_complement_of_eventually_always_a():
    C = nbw_complement(eventually_always_a())
    assert lasso_membership(C, LassoWord((), ("a", "b")))
    assert not lasso_membership(C, LassoWord(("b", "b"), ("a",)))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_complement_xor(seed):
    B = random_nbw(random.Random(seed), 2, max_branch=2)
    mb, mc = MembershipChecker(B), MembershipChecker(nbw_complement(B))
    assert all(mb(w) != mc(w) for w in WORDS)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_emptiness_and_witness(seed):
    B = random_nbw(random.Random(seed), 3, p_accepting=0.2)
    w = accepted_witness(B)
    assert nbw_emptiness(B) == (w is None)
    if w is not None:
        assert lasso_membership(B, w)
    else:
        assert not any(lasso_membership(B, x) for x in WORDS)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_ncw_determinize(seed):
    rng = random.Random(seed)
    B = random_nbw(rng, 3)
    B = BooleanOmegaAutomaton(B.states, B.initial, B.alphabet, B.transitions, COBUCHI)
    D = ncw_determinize(B)
    assert D.is_deterministic and D.kind == COBUCHI
    as_a, as_d = B.as_weighted(), D.as_weighted()
    assert all(evaluate_lasso(as_a, w) == evaluate_lasso(as_d, w) for w in WORDS)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_nlinf_determinize(seed):
    rng = random.Random(seed)
    A = random_automaton(rng, LIMINF, rng.randint(1, 3), weights=WEIGHTS)
    D = nlinf_determinize(A)
    assert D.is_deterministic
    assert all(evaluate_lasso(A, w) == evaluate_lasso(D, w) for w in WORDS)


def test_threshold_automaton():
    A = one_state({"a": 1, "b": 0}, LIMSUP)
    T = threshold_automaton(A, 1)
    assert lasso_membership(T, LassoWord(("b",), ("b", "a")))
    assert not lasso_membership(T, LassoWord(("a",), ("b",)))
    with pytest.raises(UnsupportedTag):
        threshold_automaton(one_state({"a": 1}, LIMAVG), 1)
