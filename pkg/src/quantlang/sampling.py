"""Seeded random automata for property tests and demos."""

from __future__ import annotations

import random
from typing import Sequence

from .core import ValueFunction, WeightedAutomaton, as_rational, make_automaton
from .omega_boolean import BooleanOmegaAutomaton


def random_automaton(
    rng: random.Random,
    value_function: ValueFunction,
    n_states: int = 3,
    alphabet: Sequence[str] = ("a", "b"),
    weights: Sequence = (0, 1),
    deterministic: bool = False,
    max_branch: int = 2,
    name: str = "",
) -> WeightedAutomaton:
    """Total automaton with ``n_states`` states, every state reachable or not.

    Nondeterministic automata draw 1 to ``max_branch`` transitions per
    (state, symbol) pair.
    """
    states = [f"q{i}" for i in range(n_states)]
    weights = [as_rational(w) for w in weights]
    trans = []
    for q in states:
        for sym in alphabet:
            k = 1 if deterministic else rng.randint(1, max_branch)
            for _ in range(k):
                trans.append((q, sym, rng.choice(states), rng.choice(weights)))
    return make_automaton(trans, states[0], value_function, states=states, alphabet=alphabet, name=name)


def random_nbw(
    rng: random.Random,
    n_states: int = 3,
    alphabet: Sequence[str] = ("a", "b"),
    max_branch: int = 2,
    p_accepting: float = 0.4,
) -> BooleanOmegaAutomaton:
    states = [f"q{i}" for i in range(n_states)]
    trans = []
    for q in states:
        for sym in alphabet:
            for t in rng.sample(states, rng.randint(1, min(max_branch, n_states))):
                trans.append((q, sym, t, rng.random() < p_accepting))
    return BooleanOmegaAutomaton(tuple(states), states[0], tuple(alphabet), tuple(trans))
