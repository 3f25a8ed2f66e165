"""Shared plumbing for automaton constructions: compatibility checks,
reachable-part exploration and readable state names."""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from typing import Callable, Hashable, Iterable, Optional

from .core import Transition, ValueFunction, WeightedAutomaton, weight_set
from .errors import AlphabetMismatch, LambdaMismatch, TagMismatch

TAG_ABBREV = {
    "max": "Max", "last": "Last", "sum": "Sum", "sup": "Sup",
    "limsup": "Lsup", "liminf": "Linf", "limavg": "Lavg", "disc": "Disc",
}


def check_compatible(A1: WeightedAutomaton, A2: WeightedAutomaton) -> None:
    if set(A1.alphabet) != set(A2.alphabet):
        raise AlphabetMismatch(f"alphabets differ: {A1.alphabet} vs {A2.alphabet}")
    f1, f2 = A1.value_function, A2.value_function
    if f1.kind != f2.kind:
        raise TagMismatch(f"value functions differ: {f1} vs {f2}")
    if f1.lam != f2.lam:
        raise LambdaMismatch(f"discount factors differ: {f1.lam} vs {f2.lam}")


def resolve_determinism(automata: Iterable[WeightedAutomaton], deterministic: Optional[bool]) -> bool:
    """Which class the inputs are taken from.  ``None`` infers it; ``False``
    forces the nondeterministic class even for deterministic inputs."""
    inferred = all(A.is_deterministic for A in automata)
    if deterministic is None:
        return inferred
    if deterministic and not inferred:
        raise ValueError("deterministic=True but an input automaton is nondeterministic")
    return bool(deterministic)


def class_name(kind: str, det: bool) -> str:
    return ("D" if det else "N") + TAG_ABBREV[kind]


def fmt(key) -> str:
    """Compact, readable rendering of a composite state key."""
    if isinstance(key, str):
        return key
    if isinstance(key, Fraction):
        return str(key)
    if key is None:
        return "-"
    if isinstance(key, frozenset):
        return "{" + ",".join(sorted(fmt(k) for k in key)) + "}"
    if isinstance(key, tuple):
        return "(" + ",".join(fmt(k) for k in key) + ")"
    return str(key)


def explore(
    initial: Hashable,
    alphabet: tuple,
    step: Callable,
    value_function: ValueFunction,
    name: str = "",
) -> WeightedAutomaton:
    """Breadth-first construction of the reachable part.

    ``step(key, symbol)`` yields ``(target_key, weight)`` pairs.  Only keys
    reachable from ``initial`` become states, so unreachable product states
    are pruned for free.
    """
    order = [initial]
    seen = {initial}
    queue = deque([initial])
    raw = []
    while queue:
        key = queue.popleft()
        for sym in alphabet:
            for target, weight in step(key, sym):
                raw.append((key, sym, target, weight))
                if target not in seen:
                    seen.add(target)
                    order.append(target)
                    queue.append(target)
    names = {k: fmt(k) for k in order}
    if len(set(names.values())) != len(order):
        names = {k: f"s{i}" for i, k in enumerate(order)}
    return WeightedAutomaton(
        states=tuple(names[k] for k in order),
        initial=names[initial],
        alphabet=alphabet,
        transitions=tuple(Transition(names[s], a, names[t], w) for s, a, t, w in raw),
        value_function=value_function,
        name=name,
    )


def initial_choice(A1: WeightedAutomaton, A2: WeightedAutomaton, name: str = "") -> WeightedAutomaton:
    """Disjoint union of two automata entered through a fresh initial state.

    The fresh state copies the initial out-transitions of both inputs, so the
    value of a word is the larger of the two input values.
    """
    start = "init"

    def step(key, sym):
        if key == start:
            for i, A in ((1, A1), (2, A2)):
                for target, w in A.successors[(A.initial, sym)]:
                    yield (i, target), w
            return
        i, q = key
        A = A1 if i == 1 else A2
        for target, w in A.successors[(q, sym)]:
            yield (i, target), w

    return explore(start, A1.alphabet, step, A1.value_function, name)


def synchronized_product(A1: WeightedAutomaton, A2: WeightedAutomaton, combine, name: str = "") -> WeightedAutomaton:
    """Pairs of runs read in lock-step; the joint weight is ``combine(w1, w2)``."""

    def step(key, sym):
        q1, q2 = key
        for t1, w1 in A1.successors[(q1, sym)]:
            for t2, w2 in A2.successors[(q2, sym)]:
                yield (t1, t2), combine(w1, w2)

    return explore((A1.initial, A2.initial), A1.alphabet, step, A1.value_function, name)


def max_track_product(A1: WeightedAutomaton, A2: WeightedAutomaton, combine, name: str = "") -> WeightedAutomaton:
    """Product remembering the largest weight each component has crossed.

    States are ``(q1, v1, q2, v2)``; the tracked values start at each
    automaton's own minimum weight and the emitted weight is
    ``combine(v1', v2')`` of the updated running maxima.
    """
    start = (A1.initial, weight_set(A1)[0], A2.initial, weight_set(A2)[0])

    def step(key, sym):
        q1, v1, q2, v2 = key
        for t1, w1 in A1.successors[(q1, sym)]:
            for t2, w2 in A2.successors[(q2, sym)]:
                m1, m2 = max(v1, w1), max(v2, w2)
                yield (t1, m1, t2, m2), combine(m1, m2)

    return explore(start, A1.alphabet, step, A1.value_function, name)
