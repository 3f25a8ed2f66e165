"""Edge-accepting Büchi and coBüchi automata.

A Büchi automaton accepts a word when some run crosses accepting edges
infinitely often; a coBüchi automaton accepts when some run eventually
crosses only accepting edges.  These are exactly LimSup and LimInf automata
with weights in {0, 1}, which is how membership is evaluated here.

Included: thresholds of weighted automata, rank-based Büchi complementation,
breakpoint determinization of coBüchi automata and, built on it,
determinization of nondeterministic LimInf automata.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Optional

from ._build import explore, fmt
from .core import LIMINF, LIMSUP, Transition, WeightedAutomaton, as_rational, weight_set
from .errors import TooLarge, UnsupportedTag
from .graph import Edge, Graph, cycle_through, cyclic_components, reachable, shortest_path
from .words import LassoWord

BUCHI = "buchi"
COBUCHI = "cobuchi"

#: refuse to build complements or determinizations beyond this many states
STATE_CAP = 200_000


class BoolTransition(NamedTuple):
    source: str
    symbol: str
    target: str
    accepting: bool


@dataclass(frozen=True, eq=False)
class BooleanOmegaAutomaton:
    states: tuple
    initial: str
    alphabet: tuple
    transitions: tuple
    kind: str = BUCHI
    name: str = ""

    def __post_init__(self):
        if self.kind not in (BUCHI, COBUCHI):
            raise UnsupportedTag(f"unknown acceptance kind {self.kind!r}")
        object.__setattr__(
            self, "transitions",
            tuple(BoolTransition(str(s), str(a), str(t), bool(acc)) for s, a, t, acc in self.transitions),
        )
        object.__setattr__(self, "states", tuple(str(q) for q in self.states))
        object.__setattr__(self, "alphabet", tuple(str(a) for a in self.alphabet))
        object.__setattr__(self, "initial", str(self.initial))

    @cached_property
    def successors(self) -> dict:
        out = {(q, a): [] for q in self.states for a in self.alphabet}
        for t in self.transitions:
            out[(t.source, t.symbol)].append((t.target, t.accepting))
        return out

    @property
    def is_deterministic(self) -> bool:
        return all(len(v) == 1 for v in self.successors.values())

    @property
    def is_total(self) -> bool:
        return all(self.successors.values())

    def as_weighted(self) -> WeightedAutomaton:
        """The same automaton as a {0,1}-weighted LimSup (Büchi) or LimInf (coBüchi) automaton."""
        vf = LIMSUP if self.kind == BUCHI else LIMINF
        return WeightedAutomaton(
            self.states, self.initial, self.alphabet,
            tuple(Transition(t.source, t.symbol, t.target, int(t.accepting)) for t in self.transitions),
            vf, self.name,
        )

    def __repr__(self):
        return (f"BooleanOmegaAutomaton({self.name or 'unnamed'}, {self.kind}, "
                f"{len(self.states)} states, {len(self.transitions)} transitions)")


def _explore_bool(initial, alphabet, step, kind, name="", render=fmt) -> BooleanOmegaAutomaton:
    order, seen, raw = [initial], {initial}, []
    i = 0
    while i < len(order):
        key = order[i]
        i += 1
        for sym in alphabet:
            for target, acc in step(key, sym):
                raw.append((key, sym, target, acc))
                if target not in seen:
                    seen.add(target)
                    order.append(target)
                    if len(order) > STATE_CAP:
                        raise TooLarge(f"construction exceeds {STATE_CAP} states")
    names = {k: render(k) for k in order}
    if len(set(names.values())) != len(order):
        names = {k: f"s{j}" for j, k in enumerate(order)}
    return BooleanOmegaAutomaton(
        tuple(names[k] for k in order), names[initial], tuple(alphabet),
        tuple((names[s], a, names[t], acc) for s, a, t, acc in raw), kind, name,
    )


def threshold_automaton(A: WeightedAutomaton, v) -> BooleanOmegaAutomaton:
    """Boolean automaton for ``{w : L_A(w) >= v}``; accepting edges weigh at least ``v``."""
    v = as_rational(v)
    kinds = {"limsup": BUCHI, "liminf": COBUCHI}
    if A.value_function.kind not in kinds:
        raise UnsupportedTag(f"thresholds are defined for limsup and liminf, not {A.value_function}")
    return BooleanOmegaAutomaton(
        A.states, A.initial, A.alphabet,
        tuple((t.source, t.symbol, t.target, t.weight >= v) for t in A.transitions),
        kinds[A.value_function.kind], name=f"{A.name}>={v}",
    )


class MembershipChecker:
    """Lasso membership with the per-period work cached.

    For a period ``v`` the states from which ``v^omega`` is accepted are found
    once, on the product of the automaton with the positions of ``v``; a
    lasso ``u v^omega`` is then accepted iff reading ``u`` reaches one of them.
    """

    def __init__(self, B: BooleanOmegaAutomaton):
        self.B = B
        self._winners = {}

    def winners(self, period: tuple) -> frozenset:
        if period not in self._winners:
            self._winners[period] = self._compute(period)
        return self._winners[period]

    def _compute(self, period) -> frozenset:
        B, p = self.B, len(period)
        nodes = [(q, i) for q in B.states for i in range(p)]
        edges = tuple(
            Edge((q, i), (t, (i + 1) % p), acc)
            for q, i in nodes for t, acc in B.successors[(q, period[i])]
        )
        g = Graph(tuple(nodes), edges)
        if B.kind == BUCHI:
            good = {v for comp, internal in cyclic_components(g) if any(e.weight for e in internal) for v in comp}
        else:
            sub = g.subgraph(edge_filter=lambda e: e.weight)
            good = {v for comp, _ in cyclic_components(sub) for v in comp}
        back = {v: [] for v in nodes}
        for e in edges:
            back[e.dst].append(e.src)
        todo = list(good)
        while todo:
            v = todo.pop()
            for u in back[v]:
                if u not in good:
                    good.add(u)
                    todo.append(u)
        return frozenset(q for q, i in good if i == 0)

    def __call__(self, w: LassoWord) -> bool:
        current = {self.B.initial}
        for sym in w.prefix:
            current = {t for q in current for t, _ in self.B.successors[(q, sym)]}
        return not current.isdisjoint(self.winners(tuple(w.period)))


def lasso_membership(B: BooleanOmegaAutomaton, w: LassoWord) -> bool:
    return MembershipChecker(B)(w)


def _graph(B: BooleanOmegaAutomaton) -> Graph:
    edges = tuple(Edge(t.source, t.target, t.accepting, t.symbol) for t in B.transitions)
    return Graph(B.states, edges, B.initial)


def _lasso(path, cycle) -> LassoWord:
    return LassoWord(tuple(e.label for e in path), tuple(e.label for e in cycle))


def accepted_witness(B: BooleanOmegaAutomaton) -> Optional[LassoWord]:
    """Some accepted lasso word, or ``None`` when the language is empty."""
    g = _graph(B)
    live = reachable(g)
    if B.kind == BUCHI:
        sub = g.subgraph(live)
        for comp, internal in cyclic_components(sub):
            for e in internal:
                if e.weight:
                    cycle = cycle_through(sub, e, set(comp))
                    return _lasso(shortest_path(sub, B.initial, e.src), cycle)
        return None
    good = g.subgraph(live, edge_filter=lambda e: e.weight)
    for comp, internal in cyclic_components(good):
        e = internal[0]
        cycle = cycle_through(good, e, set(comp))
        return _lasso(shortest_path(g, B.initial, e.src), cycle)
    return None


def nbw_emptiness(B: BooleanOmegaAutomaton) -> bool:
    """True when the language is empty.  Works for either acceptance kind."""
    return accepted_witness(B) is None


def _tight(ranks) -> bool:
    """Largest rank odd and every odd rank below it in use."""
    used = {r for r in ranks if r >= 0}
    top = max(used)
    return top % 2 == 1 and all(r in used for r in range(1, top, 2))


def nbw_complement(B: BooleanOmegaAutomaton) -> BooleanOmegaAutomaton:
    """Büchi automaton for the complement language, by level rankings.

    The automaton first tracks the plain subset of current states, then
    guesses a point from which it ranks them.  A ranked state is ``(g, O)``:
    ``g`` gives each current state a rank, ``O`` holds the even-ranked
    states still owing a visit to an odd rank.  Ranks never increase along
    edges, an accepting edge may not stay on the same odd rank, and only
    tight rankings (largest rank odd, every smaller odd rank used) are
    kept.  The complement accepts when ``O`` empties infinitely often.
    """
    if B.kind != BUCHI:
        raise UnsupportedTag("nbw_complement expects a Büchi automaton")
    n = len(B.states)
    index = {q: i for i, q in enumerate(B.states)}
    succ = {
        (i, a): [(index[t], acc) for t, acc in B.successors[(q, a)]]
        for q, i in index.items() for a in B.alphabet
    }
    start = ("S", 1 << index[B.initial])

    def image(mask, sym):
        out = 0
        for q in range(n):
            if mask >> q & 1:
                for t, _ in succ[(q, sym)]:
                    out |= 1 << t
        return out

    def ranked(combo_targets, combos, owed, acc):
        for combo in combos:
            ranks = [-1] * n
            for t, r in zip(combo_targets, combo):
                ranks[t] = r
            if not _tight(ranks):
                continue
            o2 = 0
            for t, r in zip(combo_targets, combo):
                if r % 2 == 0 and owed >> t & 1:
                    o2 |= 1 << t
            yield (tuple(ranks), o2), acc

    def step(key, sym):
        if key[0] == "S":
            S2 = image(key[1], sym)
            yield ("S", S2), False
            targets = [t for t in range(n) if S2 >> t & 1]
            top = 2 * len(targets) - 1
            combos = itertools.product(range(top + 1), repeat=len(targets))
            yield from ranked(targets, combos, 0, False)
            return
        ranks, owing = key
        lo = [None] * n
        banned = [()] * n
        for q, r in enumerate(ranks):
            if r < 0:
                continue
            for t, acc in succ[(q, sym)]:
                lo[t] = r if lo[t] is None else min(lo[t], r)
                if acc and r % 2:
                    banned[t] += (r,)
        owed = image(owing, sym) if owing else (1 << n) - 1
        targets = [t for t in range(n) if lo[t] is not None]
        top = 2 * len(targets) - 1
        choices = [[r for r in range(min(lo[t], top) + 1) if r not in banned[t]] for t in targets]
        yield from ranked(targets, itertools.product(*choices), owed, not owing)

    def render(key):
        if key[0] == "S":
            return "{" + ",".join(B.states[i] for i in range(n) if key[1] >> i & 1) + "}"
        ranks, owing = key
        body = ",".join(f"{B.states[i]}:{r}{'*' if owing >> i & 1 else ''}" for i, r in enumerate(ranks) if r >= 0)
        return "[" + body + "]"

    return _explore_bool(start, B.alphabet, step, BUCHI, name=f"comp({B.name})", render=render)


def ncw_determinize(B: BooleanOmegaAutomaton) -> BooleanOmegaAutomaton:
    """Deterministic coBüchi automaton by the breakpoint construction.

    State ``(S, O)``: ``S`` is the reachable subset, ``O`` the part of it
    reached through accepting edges only since the last breakpoint.  When
    ``O`` dies the edge is rejecting and ``O`` restarts from ``S``.
    """
    if B.kind != COBUCHI:
        raise UnsupportedTag("ncw_determinize expects a coBüchi automaton")
    start = (frozenset([B.initial]), frozenset([B.initial]))

    def step(key, sym):
        S, O = key
        S2 = frozenset(t for q in S for t, _ in B.successors[(q, sym)])
        O2 = frozenset(t for q in O for t, acc in B.successors[(q, sym)] if acc)
        if O2:
            yield (S2, O2), True
        else:
            yield (S2, S2), False

    return _explore_bool(start, B.alphabet, step, COBUCHI, name=f"det({B.name})")


def nlinf_determinize(A: WeightedAutomaton) -> WeightedAutomaton:
    """Deterministic LimInf automaton with the same quantitative language.

    One breakpoint component per threshold ``v1 < ... < vk`` of the weights
    runs on a shared subset.  A joint step weighs the largest ``vi`` such that
    components ``1..i`` all avoid a breakpoint, so the liminf of the output
    is the largest threshold whose coBüchi language contains the word.
    """
    if A.value_function.kind != "liminf":
        raise UnsupportedTag(f"nlinf_determinize expects a liminf automaton, not {A.value_function}")
    values = weight_set(A)
    start = (frozenset([A.initial]), tuple(frozenset([A.initial]) for _ in values))

    def step(key, sym):
        S, owing = key
        succ = [(t, w) for q in sorted(S) for t, w in A.successors[(q, sym)]]
        S2 = frozenset(t for t, _ in succ)
        new, weight, clean = [], values[0], True
        for v, O in zip(values, owing):
            O2 = frozenset(t for q in O for t, w in A.successors[(q, sym)] if w >= v)
            if O2:
                new.append(O2)
                if clean:
                    weight = v
            else:
                new.append(S2)
                clean = False
        yield (S2, tuple(new)), weight

    return explore(start, A.alphabet, step, A.value_function, name=f"det({A.name})")
