"""Exact values of words.

``evaluate_finite`` and ``evaluate_lasso`` compute ``L_A(w)``, the supremum
over runs of ``A`` on ``w`` of the valued weight sequence.  For lasso words
the runs live in the product of ``A`` with the word's positions, a finite
graph on which every value function is optimised by a memoryless choice:

* Sup      -- largest reachable edge weight
* LimSup   -- largest weight on a reachable cycle
* LimInf   -- largest threshold whose sub-graph still has a reachable cycle
* LimAvg   -- largest reachable cycle mean (Karp)
* Disc     -- optimal discounted payoff (policy iteration)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .core import ValueFunction, WeightedAutomaton, as_rational
from .errors import Acyclic, AlphabetMismatch, DeadEnd, MissingLambda, WrongArity
from .graph import (
    Edge,
    Graph,
    cycle_through,
    cyclic_components,
    has_cycle,
    reachable_part,
    shortest_path,
    walk_to_cycle,
)
from .words import FiniteWord, LassoWord, Word


# --------------------------------------------------------------------------
# value functions on explicit sequences


def value_finite(f: ValueFunction, seq: Sequence) -> Fraction:
    if not f.is_finite_word:
        raise WrongArity(f"{f} values infinite sequences")
    seq = [as_rational(x) for x in seq]
    if not seq:
        raise ValueError("empty weight sequence")
    if f.kind == "max":
        return max(seq)
    if f.kind == "last":
        return seq[-1]
    return sum(seq, Fraction(0))


def value_lasso(f: ValueFunction, prefix_weights: Sequence, period_weights: Sequence,
                lam=None) -> Fraction:
    """Value of the ultimately periodic sequence ``prefix . period^omega``."""
    if f.is_finite_word:
        raise WrongArity(f"{f} values finite sequences")
    u = [as_rational(x) for x in prefix_weights]
    v = [as_rational(x) for x in period_weights]
    if not v:
        raise ValueError("period must be nonempty")
    kind = f.kind
    if kind == "sup":
        return max(u + v)
    if kind == "limsup":
        return max(v)
    if kind == "liminf":
        return min(v)
    if kind == "limavg":
        return Fraction(sum(v, Fraction(0)), len(v))
    lam = f.lam if lam is None else as_rational(lam)
    if lam is None:
        raise MissingLambda("discounted value needs lambda")
    head = sum((lam ** i * x for i, x in enumerate(u)), Fraction(0))
    loop = sum((lam ** j * x for j, x in enumerate(v)), Fraction(0))
    return head + lam ** len(u) * loop / (1 - lam ** len(v))


# --------------------------------------------------------------------------
# finite words


def _check_word(A: WeightedAutomaton, symbols) -> None:
    alpha = set(A.alphabet)
    bad = [s for s in symbols if s not in alpha]
    if bad:
        raise AlphabetMismatch(f"symbols {bad} are not in the alphabet {A.alphabet}")


def evaluate_finite(A: WeightedAutomaton, w: FiniteWord) -> Fraction:
    """Forward dynamic programme over states; exact sup over runs."""
    f = A.value_function
    if not f.is_finite_word:
        raise WrongArity(f"{f} automata read infinite words")
    if not isinstance(w, FiniteWord):
        w = FiniteWord(tuple(w))
    _check_word(A, w.symbols)
    succ = A.successors

    if f.kind == "last":
        frontier = {A.initial}
        for sym in w.symbols[:-1]:
            frontier = {t for q in frontier for t, _ in succ[(q, sym)]}
        return max(wt for q in frontier for _, wt in succ[(q, w.symbols[-1])])

    best: dict = {}
    for q_next, wt in succ[(A.initial, w.symbols[0])]:
        _relax(best, q_next, wt)
    for sym in w.symbols[1:]:
        nxt: dict = {}
        for q, acc in best.items():
            for q_next, wt in succ[(q, sym)]:
                _relax(nxt, q_next, acc + wt if f.kind == "sum" else max(acc, wt))
        best = nxt
    return max(best.values())


def _relax(table: dict, key, value) -> None:
    if key not in table or value > table[key]:
        table[key] = value


# --------------------------------------------------------------------------
# graphs built from automata


def product_graph(A: WeightedAutomaton, w: LassoWord) -> Graph:
    """Reachable part of ``A`` x positions of ``w``.

    Node ``(q, i)`` means: in state ``q`` about to read position ``i``; the
    last position wraps back to ``|u|``.
    """
    _check_word(A, w.prefix + w.period)
    n, loop_start = len(w), len(w.prefix)
    succ = A.successors
    root = (A.initial, 0)
    nodes, edges = [root], []
    seen = {root}
    todo = [root]
    while todo:
        q, i = todo.pop()
        sym = w.symbol_at(i)
        j = i + 1 if i + 1 < n else loop_start
        for target, wt in succ[(q, sym)]:
            dst = (target, j)
            edges.append(Edge((q, i), dst, wt, sym))
            if dst not in seen:
                seen.add(dst)
                nodes.append(dst)
                todo.append(dst)
    return Graph(tuple(nodes), tuple(edges), root)


def automaton_graph(A: WeightedAutomaton) -> Graph:
    """The transition graph of ``A`` itself, edges labelled by symbols."""
    edges = tuple(Edge(t.source, t.target, t.weight, t.symbol) for t in A.transitions)
    return Graph(A.states, edges, A.initial)


# --------------------------------------------------------------------------
# mean-payoff cycles


@dataclass(frozen=True)
class CycleStats:
    max_mean: Fraction
    min_mean: Fraction
    max_cycle: tuple
    min_cycle: tuple


def cycle_mean(cycle) -> Fraction:
    return Fraction(sum((e.weight for e in cycle), Fraction(0)), len(cycle))


def _karp_component(nodes, internal_edges, negate: bool = False):
    """Karp's maximum mean cycle on one strongly connected component.

    Returns ``(mean, cycle_edges)``.  The cycle is cut from the critical
    length-``n`` walk; every cycle on that walk attains the optimum.
    """
    sign = -1 if negate else 1
    n = len(nodes)
    incoming = {v: [] for v in nodes}
    for e in internal_edges:
        incoming[e.dst].append(e)
    source = nodes[0]
    # best[k][v]: max weight of a walk with exactly k edges from source to v
    best = [{source: Fraction(0)}]
    pred = [{}]
    for k in range(1, n + 1):
        row, prow = {}, {}
        prev = best[k - 1]
        for v in nodes:
            for e in incoming[v]:
                if e.src in prev:
                    cand = prev[e.src] + sign * e.weight
                    if v not in row or cand > row[v]:
                        row[v] = cand
                        prow[v] = e
        best.append(row)
        pred.append(prow)
    top, arg = None, None
    for v in nodes:
        if v not in best[n]:
            continue
        worst = None
        for k in range(n):
            if v in best[k]:
                r = (best[n][v] - best[k][v]) / (n - k)
                if worst is None or r < worst:
                    worst = r
        if worst is not None and (top is None or worst > top):
            top, arg = worst, v
    # trace the critical walk back and cut a cycle out of it
    walk = []
    v = arg
    for k in range(n, 0, -1):
        e = pred[k][v]
        walk.append(e)
        v = e.src
    walk.reverse()
    position = {}
    for idx, e in enumerate(walk):
        if e.src in position:
            cyc = walk[position[e.src]:idx]
            break
        position[e.src] = idx
    else:
        # the walk has n edges over n nodes, so its endpoint repeats
        cyc = walk[position[walk[-1].dst]:]
    mean = sign * top
    if cycle_mean(cyc) != mean:  # pragma: no cover - guarded by theory
        raise AssertionError("Karp witness cycle does not attain the optimum")
    return mean, tuple(cyc)


def scc_cycle_stats(graph: Graph) -> list:
    """Per cyclic component of ``graph``: ``(nodes, CycleStats)``."""
    out = []
    for comp, internal in cyclic_components(graph):
        hi, hi_cyc = _karp_component(comp, internal)
        lo, lo_cyc = _karp_component(comp, internal, negate=True)
        out.append((comp, CycleStats(hi, lo, hi_cyc, lo_cyc)))
    return out


def max_mean_cycle(graph: Graph) -> CycleStats:
    """Max and min cycle means over the part of ``graph`` reachable from its root
    (the whole graph if it has no root)."""
    g = reachable_part(graph) if graph.root is not None else graph
    stats = [s for _, s in scc_cycle_stats(g)]
    if not stats:
        raise Acyclic("graph has no reachable cycle")
    hi = max(stats, key=lambda s: s.max_mean)
    lo = min(stats, key=lambda s: s.min_mean)
    return CycleStats(hi.max_mean, lo.min_mean, hi.max_cycle, lo.min_cycle)


# --------------------------------------------------------------------------
# discounted payoff


def _edge_key(e: Edge):
    return (str(e.dst), e.weight, str(e.label))


def _evaluate_policy(graph: Graph, policy: dict, lam: Fraction) -> dict:
    """Exact value of a memoryless policy: each node's run is rho-shaped."""
    val: dict = {}
    for start in graph.nodes:
        if start in val:
            continue
        chain, where = [], {}
        v = start
        while v not in val and v not in where:
            where[v] = len(chain)
            chain.append(v)
            v = policy[v].dst
        if v in where:
            cyc = chain[where[v]:]
            ws = [policy[c].weight for c in cyc]
            k = len(cyc)
            loop = sum((lam ** j * x for j, x in enumerate(ws)), Fraction(0))
            val[cyc[0]] = loop / (1 - lam ** k)
            for c in reversed(cyc[1:]):
                e = policy[c]
                val[c] = e.weight + lam * val[e.dst]
            chain = chain[:where[v]]
        for c in reversed(chain):
            e = policy[c]
            val[c] = e.weight + lam * val[e.dst]
    return val


def discounted_optimum(graph: Graph, lam, return_policy: bool = False):
    """Unique fixed point of ``val(s) = max_e w(e) + lam * val(dst(e))``.

    Policy iteration with exact evaluation.  A node switches only to a
    strictly better edge; among best edges the smallest
    ``(target name, weight)`` wins.
    """
    lam = as_rational(lam)
    if not 0 < lam < 1:
        raise ValueError("discount factor must lie in (0, 1)")
    out = graph.out_edges
    for v in graph.nodes:
        if not out[v]:
            raise DeadEnd(f"node {v!r} has no successor")

    def pick(edges, score):
        top = max(score(e) for e in edges)
        return min((e for e in edges if score(e) == top), key=_edge_key)

    policy = {v: pick(out[v], lambda e: e.weight) for v in graph.nodes}
    while True:
        val = _evaluate_policy(graph, policy, lam)
        changed = False
        for v in graph.nodes:
            def q(e):
                return e.weight + lam * val[e.dst]
            best = pick(out[v], q)
            if q(best) > val[v]:
                policy[v] = best
                changed = True
        if not changed:
            return (val, policy) if return_policy else val


# --------------------------------------------------------------------------
# evaluation on lasso words


def _liminf_graph_value(g: Graph) -> Fraction:
    for v in sorted({e.weight for e in g.edges}, reverse=True):
        if has_cycle(g.subgraph(edge_filter=lambda e, v=v: e.weight >= v)):
            return v
    raise Acyclic("graph has no cycle")  # pragma: no cover


def _graph_value(f: ValueFunction, g: Graph) -> Fraction:
    """Sup over infinite paths from the root of the reachable graph ``g``."""
    kind = f.kind
    if kind == "sup":
        return max(e.weight for e in g.edges)
    if kind == "limsup":
        return max(e.weight for _, internal in cyclic_components(g) for e in internal)
    if kind == "liminf":
        return _liminf_graph_value(g)
    if kind == "limavg":
        return max(s.max_mean for _, s in scc_cycle_stats(g))
    return discounted_optimum(g, f.lam)[g.root]


def evaluate_lasso(A: WeightedAutomaton, w: LassoWord) -> Fraction:
    f = A.value_function
    if f.is_finite_word:
        raise WrongArity(f"{f} automata read finite words")
    return _graph_value(f, product_graph(A, w))


def evaluate(A: WeightedAutomaton, w: Word) -> Fraction:
    if isinstance(w, LassoWord):
        return evaluate_lasso(A, w)
    return evaluate_finite(A, w)


# --------------------------------------------------------------------------
# best word


def _lasso_from(path, cycle) -> LassoWord:
    return LassoWord(tuple(e.label for e in path), tuple(e.label for e in cycle))


def top_value(A: WeightedAutomaton):
    """``sup_w L_A(w)`` with a lasso word attaining it.

    Returns ``(value, witness)``.
    """
    f = A.value_function
    if f.is_finite_word:
        raise WrongArity("top_value is defined for infinite-word automata")
    g = reachable_part(automaton_graph(A))
    root = g.root
    kind = f.kind

    if kind == "disc":
        val, policy = discounted_optimum(g, f.lam, return_policy=True)
        path, seen, v = [], {root: 0}, root
        while True:
            e = policy[v]
            path.append(e)
            v = e.dst
            if v in seen:
                k = seen[v]
                return val[root], _lasso_from(path[:k], path[k:])
            seen[v] = len(path)

    if kind == "sup":
        target = max(g.edges, key=lambda e: e.weight)
        head = shortest_path(g, root, target.src) + [target]
        tail, cyc = walk_to_cycle(g, target.dst)
        return target.weight, _lasso_from(head + tail, cyc)

    if kind == "limsup":
        comps = cyclic_components(g)
        members, target = max(
            ((set(c), e) for c, internal in comps for e in internal), key=lambda p: p[1].weight
        )
        cyc = cycle_through(g, target, members)
    elif kind == "liminf":
        value = _liminf_graph_value(g)
        sub = g.subgraph(edge_filter=lambda e: e.weight >= value)
        comp, internal = cyclic_components(sub)[0]
        cyc = cycle_through(sub, internal[0], set(comp))
    else:
        best = max(scc_cycle_stats(g), key=lambda p: p[1].max_mean)[1]
        cyc = list(best.max_cycle)
    head = shortest_path(g, root, cyc[0].src)
    return _graph_value(f, g), _lasso_from(head, cyc)
