"""Weighted automata over exact rational weights.

A weighted automaton is a finite automaton whose transitions carry rational
weights, together with a value function that turns the weight sequence of a
run into a single number.  The value of a word is the supremum over the runs
reading it.

All arithmetic uses :class:`fractions.Fraction`; floats never enter the core.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, NamedTuple, Optional, Sequence, Union

from .errors import MissingLambda, NegativeScale, NotTotal, UnsupportedTag

Rational = Fraction
RationalLike = Union[Fraction, int, str]

FINITE_KINDS = ("max", "last", "sum")
INFINITE_KINDS = ("sup", "limsup", "liminf", "limavg", "disc")

#: granularity of the rational grid used by :func:`epsilon_approximation`
PERTURBATION_GRID = 16


def as_rational(x: RationalLike) -> Fraction:
    """Coerce ints, Fractions and strings such as ``"3/4"`` or ``"-2"``."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not weights")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError("floats are not accepted as exact weights; pass a string or Fraction")
    return Fraction(x)


def format_rational(x: Fraction) -> str:
    """Render as ``"p/q"``, always with an explicit denominator."""
    x = as_rational(x)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class ValueFunction:
    """Tag selecting how a run's weight sequence is valued.

    ``kind`` is one of ``max``, ``last``, ``sum`` (finite words) or ``sup``,
    ``limsup``, ``liminf``, ``limavg``, ``disc`` (infinite words).  ``disc``
    carries its discount factor ``lam`` with ``0 < lam < 1``.
    """

    kind: str
    lam: Optional[Fraction] = None

    def __post_init__(self):
        if self.kind not in FINITE_KINDS + INFINITE_KINDS:
            raise UnsupportedTag(f"unknown value function {self.kind!r}")
        if self.kind == "disc":
            if self.lam is None:
                raise MissingLambda("disc requires a discount factor")
            lam = as_rational(self.lam)
            if not 0 < lam < 1:
                raise ValueError(f"discount factor must lie in (0, 1), got {lam}")
            object.__setattr__(self, "lam", lam)
        elif self.lam is not None:
            raise ValueError(f"{self.kind} takes no discount factor")

    @property
    def is_finite_word(self) -> bool:
        return self.kind in FINITE_KINDS

    def __str__(self):
        if self.kind == "disc":
            return f"disc({format_rational(self.lam)})"
        return self.kind


MAX = ValueFunction("max")
LAST = ValueFunction("last")
SUM = ValueFunction("sum")
SUP = ValueFunction("sup")
LIMSUP = ValueFunction("limsup")
LIMINF = ValueFunction("liminf")
LIMAVG = ValueFunction("limavg")


def disc(lam: RationalLike) -> ValueFunction:
    return ValueFunction("disc", as_rational(lam))


class Transition(NamedTuple):
    source: str
    symbol: str
    target: str
    weight: Fraction


@dataclass(frozen=True)
class ValidationReport:
    is_total: bool
    is_deterministic: bool
    violations: tuple = ()


@dataclass(frozen=True, eq=False)
class WeightedAutomaton:
    """An immutable weighted automaton.

    Parallel transitions (same source, symbol and target with different
    weights) are kept distinct; they are indexed by position in
    ``transitions``.  Totality is *not* enforced here so that
    :func:`validate` can report violations; constructions in this package
    only ever build total automata.
    """

    states: tuple
    initial: str
    alphabet: tuple
    transitions: tuple
    value_function: ValueFunction
    name: str = field(default="", compare=False)

    def __post_init__(self):
        states = tuple(str(q) for q in self.states)
        alphabet = tuple(str(s) for s in self.alphabet)
        if len(set(states)) != len(states):
            raise ValueError("duplicate state identifiers")
        if len(set(alphabet)) != len(alphabet):
            raise ValueError("duplicate alphabet symbols")
        if not alphabet:
            raise ValueError("alphabet must be nonempty")
        if str(self.initial) not in states:
            raise ValueError(f"initial state {self.initial!r} is not a state")
        known, symbols = set(states), set(alphabet)
        transitions = []
        for t in self.transitions:
            src, sym, dst, w = t
            src, sym, dst = str(src), str(sym), str(dst)
            if src not in known or dst not in known:
                raise ValueError(f"transition {t!r} references an unknown state")
            if sym not in symbols:
                raise ValueError(f"transition {t!r} uses symbol outside the alphabet")
            transitions.append(Transition(src, sym, dst, as_rational(w)))
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "initial", str(self.initial))
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "transitions", tuple(transitions))

    @cached_property
    def successors(self) -> dict:
        """Map ``(state, symbol)`` to the list of ``(target, weight)`` pairs."""
        out = {(q, s): [] for q in self.states for s in self.alphabet}
        for t in self.transitions:
            out[(t.source, t.symbol)].append((t.target, t.weight))
        return out

    @cached_property
    def out_transitions(self) -> dict:
        out = {q: [] for q in self.states}
        for t in self.transitions:
            out[t.source].append(t)
        return out

    @property
    def is_deterministic(self) -> bool:
        return validate(self).is_deterministic

    def require_total(self) -> "WeightedAutomaton":
        report = validate(self)
        if not report.is_total:
            raise NotTotal(report.violations)
        return self

    def replace(self, **changes) -> "WeightedAutomaton":
        fields = dict(
            states=self.states,
            initial=self.initial,
            alphabet=self.alphabet,
            transitions=self.transitions,
            value_function=self.value_function,
            name=self.name,
        )
        fields.update(changes)
        return WeightedAutomaton(**fields)

    def map_weights(self, fn) -> "WeightedAutomaton":
        return self.replace(
            transitions=tuple(t._replace(weight=as_rational(fn(t.weight))) for t in self.transitions)
        )

    def __repr__(self):
        return (
            f"WeightedAutomaton({self.name or 'unnamed'}, {self.value_function}, "
            f"{len(self.states)} states, {len(self.transitions)} transitions)"
        )


def make_automaton(
    transitions: Iterable[Sequence],
    initial: str,
    value_function: ValueFunction,
    *,
    states: Optional[Iterable[str]] = None,
    alphabet: Optional[Iterable[str]] = None,
    name: str = "",
) -> WeightedAutomaton:
    """Build an automaton from ``(source, symbol, target, weight)`` tuples.

    States and alphabet default to those mentioned by the transitions, in
    order of first appearance (the initial state first).
    """
    transitions = [tuple(t) for t in transitions]
    if states is None:
        seen = {str(initial): None}
        for src, _, dst, _ in transitions:
            seen.setdefault(str(src), None)
            seen.setdefault(str(dst), None)
        states = list(seen)
    if alphabet is None:
        alphabet = list(dict.fromkeys(str(t[1]) for t in transitions))
    return WeightedAutomaton(
        states=tuple(states),
        initial=initial,
        alphabet=tuple(alphabet),
        transitions=tuple(transitions),
        value_function=value_function,
        name=name,
    )


def validate(A: WeightedAutomaton) -> ValidationReport:
    """Report totality and determinism.

    Determinism is counted on transitions, so two parallel transitions with
    different weights make the automaton nondeterministic.
    """
    counts = {(q, s): 0 for q in A.states for s in A.alphabet}
    for t in A.transitions:
        counts[(t.source, t.symbol)] += 1
    violations = tuple(pair for pair, c in counts.items() if c == 0)
    total = not violations
    deterministic = total and all(c == 1 for c in counts.values())
    return ValidationReport(is_total=total, is_deterministic=deterministic, violations=violations)


def weight_set(A: WeightedAutomaton) -> list:
    return sorted({t.weight for t in A.transitions})


def fresh_name(base: str, taken) -> str:
    name = base
    k = 0
    while name in taken:
        k += 1
        name = f"{base}'{k}" if k > 1 else f"{base}'"
    return name


def shift(A: WeightedAutomaton, c: RationalLike) -> WeightedAutomaton:
    """Automaton for ``c + L_A``.

    Sum and discounted automata get a fresh copy of the initial state whose
    outgoing weights are raised by ``c``: only the first weight of a run
    moves.  Every other value function is shifted by raising all weights.
    """
    c = as_rational(c)
    if A.value_function.kind not in ("sum", "disc"):
        return A.map_weights(lambda w: w + c)
    start = fresh_name(f"{A.initial}+", set(A.states))
    extra = [Transition(start, t.symbol, t.target, t.weight + c) for t in A.out_transitions[A.initial]]
    return A.replace(
        states=(start,) + A.states,
        initial=start,
        transitions=tuple(extra) + A.transitions,
    )


def scale(A: WeightedAutomaton, c: RationalLike) -> WeightedAutomaton:
    c = as_rational(c)
    if c < 0:
        raise NegativeScale(f"scale factor must be nonnegative, got {c}")
    return A.map_weights(lambda w: w * c)


def epsilon_approximation(A: WeightedAutomaton, eps: RationalLike, seed: int = 0) -> WeightedAutomaton:
    """Same structure, each weight moved by ``k * eps / 16`` with ``k`` in ``[-16, 16]``."""
    eps = as_rational(eps)
    if eps < 0:
        raise ValueError("eps must be nonnegative")
    rng = random.Random(seed)
    step = eps / PERTURBATION_GRID
    moved = tuple(
        t._replace(weight=t.weight + rng.randint(-PERTURBATION_GRID, PERTURBATION_GRID) * step)
        for t in A.transitions
    )
    return A.replace(transitions=moved)
