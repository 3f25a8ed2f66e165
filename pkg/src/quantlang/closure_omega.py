"""Max, min, sum and complement of infinite-word weighted automata.

Constructions are chosen by value function and by whether the inputs are
deterministic (inferred, or forced with ``deterministic=False``).  Classes
that provably cannot express the result raise :class:`ClosureError`.

==========  =====  =====  =====  ==========
class       max    min    sum    complement
==========  =====  =====  =====  ==========
D/N Sup     yes    yes    yes    no
D/N Linf    yes    yes    yes    no
D Lsup      yes    yes    yes    no
N Lsup      yes    yes    yes    yes
D Lavg      no     no     no     no
N Lavg      yes    no     no     no
D Disc      no     no     yes    yes
N Disc      yes    no     yes    no
==========  =====  =====  =====  ==========
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
from .core import WeightedAutomaton, make_automaton, weight_set
from .errors import ClosureError, WrongArity
from .omega_boolean import nbw_complement, nlinf_determinize, threshold_automaton


def _require_infinite(*automata) -> str:
    for A in automata:
        if A.value_function.is_finite_word:
            raise WrongArity(f"{A.value_function} is not an infinite-word value function")
    return automata[0].value_function.kind


def _plus(a, b):
    return a + b


def _no(op, kind, det, reason):
    raise ClosureError(op, class_name(kind, det), reason)


# --------------------------------------------------------------------------
# max


def max_omega(A1: WeightedAutomaton, A2: WeightedAutomaton, deterministic: Optional[bool] = None):
    """Automaton for ``max(L1, L2)``."""
    check_compatible(A1, A2)
    kind = _require_infinite(A1, A2)
    det = resolve_determinism((A1, A2), deterministic)
    name = f"max({A1.name},{A2.name})"
    if not det:
        return initial_choice(A1, A2, name=name)
    if kind in ("sup", "limsup"):
        return synchronized_product(A1, A2, max, name=name)
    if kind == "liminf":
        return nlinf_determinize(initial_choice(A1, A2)).replace(name=name)
    if kind == "limavg":
        _no("max", kind, det, "deterministic LimAvg-automata are not closed under max "
            "(max of the long-run averages of a's and of b's)")
    _no("max", kind, det, "deterministic Disc-automata are not closed under max "
        "(max of the discounted a-counter and b-counter)")


# --------------------------------------------------------------------------
# min


def _dlsup_min(A1: WeightedAutomaton, A2: WeightedAutomaton, name: str) -> WeightedAutomaton:
    """One watched copy per weight ``v``; the watch moves to the other copy
    when the watched one crosses a weight of at least ``v``.  ``v`` moves
    forever exactly when both limsups reach ``v``."""
    values = sorted(set(weight_set(A1)) | set(weight_set(A2)))
    floor = values[0]

    def step(key, sym):
        q1, q2, bits = key
        (t1, w1), = A1.successors[(q1, sym)]
        (t2, w2), = A2.successors[(q2, sym)]
        new, weight = [], floor
        for v, b in zip(values, bits):
            if (w1 if b == 1 else w2) >= v:
                new.append(3 - b)
                weight = max(weight, v)
            else:
                new.append(b)
        yield (t1, t2, tuple(new)), weight

    start = (A1.initial, A2.initial, tuple(1 for _ in values))
    return explore(start, A1.alphabet, step, A1.value_function, name)


def _nlsup_min(A1: WeightedAutomaton, A2: WeightedAutomaton, name: str) -> WeightedAutomaton:
    """Guess the value ``v`` up front, then alternate between copies that
    must each reach ``v``; every completed hand-over weighs ``v``."""
    values = sorted(set(weight_set(A1)) | set(weight_set(A2)))
    floor = values[0]

    def moves(q1, q2, j, v, sym):
        for t1, w1 in A1.successors[(q1, sym)]:
            for t2, w2 in A2.successors[(q2, sym)]:
                if (w1 if j == 1 else w2) >= v:
                    yield (t1, t2, 3 - j, v), v
                else:
                    yield (t1, t2, j, v), floor

    def step(key, sym):
        if key == "guess":
            for v in values:
                for target, _ in moves(A1.initial, A2.initial, 1, v, sym):
                    yield target, floor
            return
        yield from moves(*key, sym)

    return explore("guess", A1.alphabet, step, A1.value_function, name)


def min_omega(A1: WeightedAutomaton, A2: WeightedAutomaton, deterministic: Optional[bool] = None):
    """Automaton for ``min(L1, L2)``."""
    check_compatible(A1, A2)
    kind = _require_infinite(A1, A2)
    det = resolve_determinism((A1, A2), deterministic)
    name = f"min({A1.name},{A2.name})"
    if kind == "sup":
        return max_track_product(A1, A2, min, name=name)
    if kind == "liminf":
        return synchronized_product(A1, A2, min, name=name)
    if kind == "limsup":
        return _dlsup_min(A1, A2, name) if det else _nlsup_min(A1, A2, name)
    if kind == "limavg":
        _no("min", kind, det, f"{'deterministic' if det else 'nondeterministic'} LimAvg-automata "
            "are not closed under min (min of the long-run averages of a's and of b's)")
    _no("min", kind, det, f"{'deterministic' if det else 'nondeterministic'} Disc-automata "
        "are not closed under min (min of the discounted a-counter and b-counter)")


# --------------------------------------------------------------------------
# sum


def _nlsup_sum(A1: WeightedAutomaton, A2: WeightedAutomaton, name: str) -> WeightedAutomaton:
    """Guess the pair of limsups ``(v1, v2)``; alternate between the copies,
    each hand-over weighing ``v1 + v2``.  Other steps weigh the smallest
    possible pair sum."""
    V1, V2 = weight_set(A1), weight_set(A2)
    floor = V1[0] + V2[0]

    def moves(q1, q2, b, v1, v2, sym):
        for t1, w1 in A1.successors[(q1, sym)]:
            for t2, w2 in A2.successors[(q2, sym)]:
                if (w1 >= v1) if b == 1 else (w2 >= v2):
                    yield (t1, t2, 3 - b, v1, v2), v1 + v2
                else:
                    yield (t1, t2, b, v1, v2), floor

    def step(key, sym):
        if key == "guess":
            for v1 in V1:
                for v2 in V2:
                    for target, _ in moves(A1.initial, A2.initial, 1, v1, v2, sym):
                        yield target, floor
            return
        yield from moves(*key, sym)

    return explore("guess", A1.alphabet, step, A1.value_function, name)


def _dlsup_sum(A1: WeightedAutomaton, A2: WeightedAutomaton, name: str) -> WeightedAutomaton:
    """One bit per weight pair ``(v1, v2)``, flipped when the copy it points
    at crosses exactly its weight; the step weighs the largest flipped sum."""
    pairs = [(v1, v2) for v1 in weight_set(A1) for v2 in weight_set(A2)]
    floor = min(a + b for a, b in pairs)

    def step(key, sym):
        q1, q2, bits = key
        (t1, w1), = A1.successors[(q1, sym)]
        (t2, w2), = A2.successors[(q2, sym)]
        new, weight = [], floor
        for (v1, v2), b in zip(pairs, bits):
            if (w1 == v1) if b == 1 else (w2 == v2):
                new.append(3 - b)
                weight = max(weight, v1 + v2)
            else:
                new.append(b)
        yield (t1, t2, tuple(new)), weight

    start = (A1.initial, A2.initial, tuple(1 for _ in pairs))
    return explore(start, A1.alphabet, step, A1.value_function, name)


def _liminf_sum(A1: WeightedAutomaton, A2: WeightedAutomaton, name: str) -> WeightedAutomaton:
    """Pair each first-copy weight ``w1`` with the smallest second-copy weight
    seen since the first copy last dropped to ``w1`` or below.

    The memory maps every ``v`` in ``V1`` to the minimum of the second
    copy's weights since the first copy last crossed a weight ``<= v``
    (``None`` if it never has).  Along any pair of runs the liminf of the
    emitted weights is ``liminf(w1) + liminf(w2)``.
    """
    V1 = weight_set(A1)

    def low(a, b):
        return b if a is None else min(a, b)

    def step(key, sym):
        q1, q2, memo = key
        for t1, w1 in A1.successors[(q1, sym)]:
            for t2, w2 in A2.successors[(q2, sym)]:
                paired = low(memo[V1.index(w1)], w2)
                new = tuple(None if w1 <= v else low(m, w2) for v, m in zip(V1, memo))
                yield (t1, t2, new), w1 + paired

    start = (A1.initial, A2.initial, tuple(None for _ in V1))
    return explore(start, A1.alphabet, step, A1.value_function, name)


def sum_omega(A1: WeightedAutomaton, A2: WeightedAutomaton, deterministic: Optional[bool] = None):
    """Automaton for ``L1 + L2``."""
    check_compatible(A1, A2)
    kind = _require_infinite(A1, A2)
    det = resolve_determinism((A1, A2), deterministic)
    name = f"sum({A1.name},{A2.name})"
    if kind == "sup":
        return max_track_product(A1, A2, _plus, name=name)
    if kind == "limsup":
        return _dlsup_sum(A1, A2, name) if det else _nlsup_sum(A1, A2, name)
    if kind == "liminf":
        return _liminf_sum(A1, A2, name)
    if kind == "disc":
        return synchronized_product(A1, A2, _plus, name=name)
    _no("sum", kind, det, f"{'deterministic' if det else 'nondeterministic'} LimAvg-automata "
        "are not closed under sum (long-run average of a's plus that of b's)")


# --------------------------------------------------------------------------
# complement


def _nlsup_complement(A: WeightedAutomaton) -> WeightedAutomaton:
    values = weight_set(A)
    if len(values) == 1:
        return make_automaton(
            [("c", s, "c", 1 - values[0]) for s in A.alphabet], "c", A.value_function,
            alphabet=A.alphabet, name=f"comp({A.name})",
        )
    # B_i: words below v_i get 1 - v_{i-1} on their accepting edges
    pieces = []
    for lower, v in zip(values, values[1:]):
        below = nbw_complement(threshold_automaton(A, v))
        pieces.append(make_automaton(
            [(t.source, t.symbol, t.target, 1 - lower if t.accepting else 1 - values[-1])
             for t in below.transitions],
            below.initial, A.value_function, states=below.states, alphabet=A.alphabet,
        ))
    out = pieces[0]
    for piece in pieces[1:]:
        out = initial_choice(out, piece)
    return out.replace(name=f"comp({A.name})")


def complement_omega(A: WeightedAutomaton, deterministic: Optional[bool] = None):
    """Automaton for ``1 - L``."""
    kind = _require_infinite(A)
    det = resolve_determinism((A,), deterministic)
    if kind == "disc" and det:
        lam = A.value_function.lam
        return A.map_weights(lambda v: 1 - lam - v).replace(name=f"comp({A.name})")
    if kind == "limsup" and not det:
        return _nlsup_complement(A)
    reasons = {
        "sup": "Sup-automata are not closed under complement (1 - sup would need an infimum)",
        "liminf": "LimInf-automata are not closed under complement "
                  "(the complement of 'eventually only a' is 'infinitely many b')",
        "limsup": "deterministic LimSup-automata are not closed under complement "
                  "(the complement of 'infinitely many a' is 'eventually only b')",
        "limavg": "LimAvg-automata are not closed under complement",
        "disc": "nondeterministic Disc-automata are not closed under complement",
    }
    _no("complement", kind, det, reasons[kind])
