"""Expressiveness tooling: boolean weights, cut-points, isolation, robustness.

* :func:`boolean_weight_reduction` rewrites a LimAvg automaton with weights
  in [0, 1] into one with weights in {0, 1} and the same language.
* :func:`cutpoint_dlavg` and :func:`cutpoint_ddisc` turn ``{w : L(w) >= eta}``
  into a Büchi automaton when ``eta`` is an isolated cut-point.
* :func:`isolation_check_dlavg` decides isolation for deterministic LimAvg;
  :func:`isolation_probe_disc` is only a semi-decision for Disc.
* :func:`dsup_bound` and :func:`sampled_dsup` bound and measure the distance
  between an automaton and its perturbations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Optional

from .core import ValueFunction, WeightedAutomaton, as_rational, make_automaton
from .errors import (
    EpsNotPositive,
    NotDeterministic,
    NotIsolated,
    TagMismatch,
    UnsupportedTag,
    WeightOutOfRange,
)
from .graph import reachable_part, shortest_path
from .omega_boolean import BUCHI, BooleanOmegaAutomaton, MembershipChecker
from .valuation import automaton_graph, evaluate_lasso, scc_cycle_stats, top_value
from .words import LassoWord

# --------------------------------------------------------------------------
# boolean weights


def boolean_weight_reduction(A: WeightedAutomaton) -> WeightedAutomaton:
    """Equivalent LimAvg automaton with weights in {0, 1}.

    With ``1/n`` the gcd of the weights, state ``(q, i)`` carries the
    fractional part ``i/n`` of the weight accumulated so far; a transition
    emits 1 exactly when that part overflows.  All ``|Q| * n`` states are
    kept, reachable or not.
    """
    if A.value_function.kind != "limavg":
        raise UnsupportedTag(f"boolean weight reduction needs limavg, not {A.value_function}")
    for t in A.transitions:
        if not 0 <= t.weight <= 1:
            raise WeightOutOfRange(f"weight {t.weight} of {t} is outside [0, 1]")
    n = lcm(*(t.weight.denominator for t in A.transitions))

    def name(q, i):
        return f"({q},{i})"

    trans = []
    for t in A.transitions:
        k = int(t.weight * n)
        for i in range(n):
            if i + k < n:
                trans.append((name(t.source, i), t.symbol, name(t.target, i + k), 0))
            else:
                trans.append((name(t.source, i), t.symbol, name(t.target, i + k - n), 1))
    states = [name(q, i) for q in A.states for i in range(n)]
    return make_automaton(
        trans, name(A.initial, 0), A.value_function, states=states, alphabet=A.alphabet,
        name=f"bool({A.name})",
    )


# --------------------------------------------------------------------------
# results


@dataclass(frozen=True)
class IsolationResult:
    """``verdict`` is ``"isolated"``, ``"not_isolated"`` or ``"unknown"``.

    An isolated verdict carries ``margin``: no word value lies strictly
    closer than ``margin`` to the cut-point.  A not-isolated verdict carries
    a ``witness`` word and its exact ``value``.  ``depth`` records how far a
    probe unfolded.
    """

    verdict: str
    margin: Optional[Fraction] = None
    witness: Optional[LassoWord] = None
    value: Optional[Fraction] = None
    depth: Optional[int] = None

    @property
    def isolated(self) -> bool:
        return self.verdict == "isolated"


def Isolated(margin, depth=None) -> IsolationResult:
    return IsolationResult("isolated", margin=as_rational(margin), depth=depth)


def NotIsolatedResult(witness, value, depth=None) -> IsolationResult:
    return IsolationResult("not_isolated", witness=witness, value=value, depth=depth)


def Unknown(depth) -> IsolationResult:
    return IsolationResult("unknown", depth=depth)


@dataclass(frozen=True, eq=False)
class CutpointAutomaton:
    """Büchi automaton for ``{w : source(w) >= eta}`` plus where it came from."""

    automaton: BooleanOmegaAutomaton
    source: WeightedAutomaton
    eta: Fraction
    eps: Optional[Fraction] = None
    depth: Optional[int] = None
    _checker: MembershipChecker = field(default=None, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_checker", MembershipChecker(self.automaton))

    def accepts(self, w: LassoWord) -> bool:
        return self._checker(w)


# --------------------------------------------------------------------------
# deterministic limit average


def _require_dlavg(A: WeightedAutomaton) -> None:
    if A.value_function.kind != "limavg":
        raise UnsupportedTag(f"expected a limavg automaton, got {A.value_function}")
    if not A.is_deterministic:
        raise NotDeterministic("only deterministic limavg automata are supported")


def _scc_intervals(A: WeightedAutomaton):
    g = reachable_part(automaton_graph(A))
    return g, scc_cycle_stats(g)


def _mixing_witness(g, comp, stats, eta: Fraction) -> LassoWord:
    """Lasso whose run settles on a closed walk of mean exactly ``eta``.

    The walk repeats the min-mean cycle ``p`` times, moves to the max-mean
    cycle, repeats it ``q`` times and returns; the connecting loop may be
    traversed ``k`` times in all.  ``p, q, k`` solve the integer equation
    that makes the total excess over ``eta`` vanish.
    """
    lo, hi = list(stats.min_cycle), list(stats.max_cycle)
    members = set(comp)

    def excess(edges):
        return sum((e.weight - eta for e in edges), Fraction(0))

    def lasso(period):
        head = shortest_path(g, g.root, period[0].src)
        return LassoWord(tuple(e.label for e in head), tuple(e.label for e in period))

    a, b = -excess(lo), excess(hi)
    if a == 0:
        return lasso(lo)
    if b == 0:
        return lasso(hi)
    inside = lambda e: e.src in members and e.dst in members  # noqa: E731
    go = shortest_path(g, lo[0].src, hi[0].src, inside)
    back = shortest_path(g, hi[0].src, lo[0].src, inside)
    c = excess(go + back)
    scale = lcm(a.denominator, b.denominator, c.denominator)
    A_, B_, C_ = int(a * scale), int(b * scale), int(c * scale)
    # p*A_ - q*B_ = k*C_ with p, q >= 0 and k >= 1
    g_ab = gcd(A_, B_)
    k = g_ab // gcd(g_ab, abs(C_)) if C_ else 1
    target = k * C_
    x, y = _bezout(A_, B_)  # x*A_ + y*B_ = g_ab
    p0, q0 = x * (target // g_ab), -y * (target // g_ab)
    sa, sb = B_ // g_ab, A_ // g_ab
    t = max(-(p0 // sa), -(q0 // sb), 0)
    p, q = p0 + t * sa, q0 + t * sb
    if p == 0 and q == 0 and not (go + back):
        p, q = sa, sb
    period = lo * p + go + hi * q + back + (go + back) * (k - 1)
    return lasso(period)


def _bezout(a: int, b: int):
    """``(x, y)`` with ``x*a + y*b == gcd(a, b)``."""
    old_r, r, old_x, x, old_y, y = a, b, 1, 0, 0, 1
    while r:
        quo = old_r // r
        old_r, r = r, old_r - quo * r
        old_x, x = x, old_x - quo * x
        old_y, y = y, old_y - quo * y
    return old_x, old_y


def isolation_check_dlavg(A: WeightedAutomaton, eta) -> IsolationResult:
    """Decide whether ``eta`` is isolated for a deterministic LimAvg automaton.

    Word values are exactly the means achievable inside reachable
    components, which fill the intervals ``[m_i, M_i]``.
    """
    _require_dlavg(A)
    eta = as_rational(eta)
    g, intervals = _scc_intervals(A)
    margin = None
    for comp, stats in intervals:
        lo, hi = stats.min_mean, stats.max_mean
        if lo <= eta <= hi:
            w = _mixing_witness(g, comp, stats, eta)
            return NotIsolatedResult(w, evaluate_lasso(A, w))
        d = lo - eta if eta < lo else eta - hi
        margin = d if margin is None else min(margin, d)
    return Isolated(margin)


def cutpoint_dlavg(A: WeightedAutomaton, eta) -> CutpointAutomaton:
    """Deterministic Büchi automaton for ``{w : L(w) >= eta}``.

    Accepting edges leave states of components whose smallest cycle mean
    exceeds ``eta``.  Raises :class:`NotIsolated` when ``eta`` falls inside
    some component's interval.
    """
    eta = as_rational(eta)
    verdict = isolation_check_dlavg(A, eta)
    if not verdict.isolated:
        raise NotIsolated(eta, verdict.witness, verdict.value)
    _, intervals = _scc_intervals(A)
    good = {q for comp, stats in intervals if stats.min_mean > eta for q in comp}
    B = BooleanOmegaAutomaton(
        A.states, A.initial, A.alphabet,
        tuple((t.source, t.symbol, t.target, t.source in good) for t in A.transitions),
        BUCHI, name=f"{A.name}>={eta}",
    )
    return CutpointAutomaton(B, A, eta)


# --------------------------------------------------------------------------
# discounted sum


def _tail_bound(A: WeightedAutomaton, n: int) -> Fraction:
    lam = A.value_function.lam
    V = max(abs(t.weight) for t in A.transitions)
    return V * lam**n / (1 - lam)


def _unfold(A: WeightedAutomaton, depth: int) -> dict:
    """Depth-``depth`` frontier: ``(state, partial value) -> a prefix reaching it``."""
    lam = A.value_function.lam
    frontier = {(A.initial, Fraction(0)): ()}
    for k in range(depth):
        nxt = {}
        for (q, val), word in frontier.items():
            for t in A.out_transitions[q]:
                key = (t.target, val + t.weight * lam**k)
                nxt.setdefault(key, word + (t.symbol,))
        frontier = nxt
    return frontier


def cutpoint_ddisc(A: WeightedAutomaton, eta, eps) -> CutpointAutomaton:
    """Büchi automaton for ``{w : L(w) >= eta}`` given that every word value
    is more than ``eps`` away from ``eta``.

    Unfolds ``A`` to the least depth ``n`` whose tail bound ``u_n`` is below
    ``eps``; a depth-``n`` prefix of value at least ``eta + eps - u_n``
    settles acceptance, anything else settles rejection.
    """
    if A.value_function.kind != "disc":
        raise UnsupportedTag(f"expected a disc automaton, got {A.value_function}")
    eta, eps = as_rational(eta), as_rational(eps)
    if eps <= 0:
        raise EpsNotPositive(f"eps must be positive, got {eps}")
    lam = A.value_function.lam
    n = 0
    while _tail_bound(A, n) >= eps:
        n += 1
    bar = eta + eps - _tail_bound(A, n)

    names, trans = {}, []
    levels = [{(A.initial, Fraction(0))}]
    for k in range(n):
        nxt = set()
        for q, val in levels[-1]:
            for t in A.out_transitions[q]:
                nxt.add((t.target, val + t.weight * lam**k))
        levels.append(nxt)

    def node(k, q, val):
        if k == n:
            return "accept" if val >= bar else "reject"
        key = (k, q, val)
        if key not in names:
            names[key] = f"{q}@{k}:{val}"
        return names[key]

    start = node(0, A.initial, Fraction(0))
    for k in range(n):
        for q, val in sorted(levels[k], key=str):
            for t in A.out_transitions[q]:
                trans.append((node(k, q, val), t.symbol, node(k + 1, t.target, val + t.weight * lam**k), False))
    for sink in ("accept", "reject"):
        trans += [(sink, s, sink, sink == "accept") for s in A.alphabet]
    states = list(dict.fromkeys([start, *names.values(), "accept", "reject"]))
    B = BooleanOmegaAutomaton(tuple(states), start, A.alphabet, tuple(trans), BUCHI, name=f"{A.name}>={eta}")
    return CutpointAutomaton(B, A, eta, eps=eps, depth=n)


def _restart(A: WeightedAutomaton, q: str, negate: bool) -> WeightedAutomaton:
    B = A.replace(initial=q)
    return B.map_weights(lambda w: -w) if negate else B


def isolation_probe_disc(A: WeightedAutomaton, eta, delta, max_depth: int = 8) -> IsolationResult:
    """Semi-decide whether every word value is more than ``delta`` from ``eta``.

    At depth ``n`` every word value lies within ``u_n`` of some depth-``n``
    partial value.  If no partial value is within ``delta + u_n`` of ``eta``
    the cut-point is isolated.  Otherwise prefixes near ``eta`` are completed
    with the best and the worst continuation and evaluated exactly; a value
    within ``delta`` of ``eta`` refutes isolation.
    """
    if A.value_function.kind != "disc":
        raise UnsupportedTag(f"expected a disc automaton, got {A.value_function}")
    eta, delta = as_rational(eta), as_rational(delta)
    if delta <= 0:
        raise EpsNotPositive(f"delta must be positive, got {delta}")
    tried = set()
    for n in range(1, max_depth + 1):
        u = _tail_bound(A, n)
        frontier = _unfold(A, n)
        near = [(key, word) for key, word in frontier.items() if abs(key[1] - eta) <= delta + u]
        if not near:
            return Isolated(delta, depth=n)
        for (q, _), word in sorted(near, key=lambda p: (abs(p[0][1] - eta), p[1])):
            for negate in (False, True):
                if (q, word, negate) in tried:
                    continue
                tried.add((q, word, negate))
                _, tail = top_value(_restart(A, q, negate))
                w = LassoWord(word + tail.prefix, tail.period)
                value = evaluate_lasso(A, w)
                if abs(value - eta) <= delta:
                    return NotIsolatedResult(w, value, depth=n)
    return Unknown(max_depth)


# --------------------------------------------------------------------------
# robustness


def dsup_bound(tag: ValueFunction, eps) -> Fraction:
    """Largest possible ``D_sup`` between an automaton and any of its
    ``eps``-approximations."""
    eps = as_rational(eps)
    if tag.kind == "disc":
        return eps / (1 - tag.lam)
    if tag.kind == "sum":
        raise TagMismatch("sum automata have no uniform distance bound")
    return eps


def sampled_dsup(A: WeightedAutomaton, B: WeightedAutomaton, sample) -> Fraction:
    """``max |L_A(w) - L_B(w)|`` over the sample: a lower bound on ``D_sup``."""
    if A.value_function != B.value_function:
        raise TagMismatch(f"value functions differ: {A.value_function} vs {B.value_function}")
    return max((abs(evaluate_lasso(A, w) - evaluate_lasso(B, w)) for w in sample), default=Fraction(0))
