"""Max, min, sum and complement of finite-word weighted automata.

Each operation picks its construction from the value function and from
whether the inputs are deterministic.  Combinations for which no
construction can exist raise :class:`ClosureError`.

=========  =====  =====  =====  ==========
class      max    min    sum    complement
=========  =====  =====  =====  ==========
D/N Max    yes    yes    yes    no
D/N Last   yes    yes    yes    yes
D Sum      no     no     yes    yes
N Sum      yes    no     yes    no
=========  =====  =====  =====  ==========
"""

from __future__ import annotations

from typing import Optional

from ._build import (
    check_compatible,
    class_name,
    explore,
    initial_choice,
    max_track_product,
    resolve_determinism,
    synchronized_product,
)
from .core import WeightedAutomaton, shift
from .errors import ClosureError, WrongArity


def _require_finite(*automata) -> str:
    kind = automata[0].value_function.kind
    for A in automata:
        if not A.value_function.is_finite_word:
            raise WrongArity(f"{A.value_function} is not a finite-word value function")
    return kind


def max_finite(A1: WeightedAutomaton, A2: WeightedAutomaton, deterministic: Optional[bool] = None):
    """Automaton for ``max(L1, L2)``."""
    check_compatible(A1, A2)
    kind = _require_finite(A1, A2)
    det = resolve_determinism((A1, A2), deterministic)
    if not det:
        return initial_choice(A1, A2, name=f"max({A1.name},{A2.name})")
    if kind == "sum":
        raise ClosureError(
            "max", class_name(kind, det),
            "deterministic Sum-automata are not closed under max "
            "(max of the a-counter and the b-counter needs nondeterminism)",
        )
    return synchronized_product(A1, A2, max, name=f"max({A1.name},{A2.name})")


def min_finite(A1: WeightedAutomaton, A2: WeightedAutomaton, deterministic: Optional[bool] = None):
    """Automaton for ``min(L1, L2)``."""
    check_compatible(A1, A2)
    kind = _require_finite(A1, A2)
    det = resolve_determinism((A1, A2), deterministic)
    name = f"min({A1.name},{A2.name})"
    if kind == "last":
        return synchronized_product(A1, A2, min, name=name)
    if kind == "max":
        return max_track_product(A1, A2, min, name=name)
    raise ClosureError(
        "min", class_name(kind, det),
        "Sum-automata are not closed under min (min of the a-counter and the b-counter)",
    )


def sum_finite(A1: WeightedAutomaton, A2: WeightedAutomaton, deterministic: Optional[bool] = None):
    """Automaton for ``L1 + L2``; every finite-word class is closed under sum."""
    check_compatible(A1, A2)
    kind = _require_finite(A1, A2)
    resolve_determinism((A1, A2), deterministic)
    name = f"sum({A1.name},{A2.name})"
    if kind == "max":
        return max_track_product(A1, A2, lambda a, b: a + b, name=name)
    return synchronized_product(A1, A2, lambda a, b: a + b, name=name)


def determinize_last(A: WeightedAutomaton) -> WeightedAutomaton:
    """Subset construction preserving a Last-language.

    From subset ``S`` on ``sigma`` the single transition carries the largest
    weight of any ``sigma``-transition leaving ``S``: that is exactly the
    best last weight over all runs ending there.
    """

    def step(S, sym):
        succ = [pair for q in sorted(S) for pair in A.successors[(q, sym)]]
        yield frozenset(t for t, _ in succ), max(w for _, w in succ)

    return explore(frozenset([A.initial]), A.alphabet, step, A.value_function, name=f"det({A.name})")


def complement_finite(A: WeightedAutomaton, deterministic: Optional[bool] = None):
    """Automaton for ``1 - L``."""
    kind = _require_finite(A)
    det = resolve_determinism((A,), deterministic)
    if kind == "max":
        raise ClosureError(
            "complement", class_name(kind, det),
            "Max-automata are not closed under complement (1 - max would need a running minimum)",
        )
    if kind == "sum" and not det:
        raise ClosureError(
            "complement", class_name(kind, det),
            "nondeterministic Sum-automata are not closed under complement "
            "(the complement of max of the a- and b-counters is not realizable)",
        )
    if kind == "last" and not det:
        A = determinize_last(A)
    negated = A.map_weights(lambda w: -w)
    return shift(negated, 1).replace(name=f"comp({A.name})")
