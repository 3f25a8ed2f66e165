"""Brute-force reference values, kept independent of :mod:`valuation`.

Finite words: enumerate every run.  Lasso words: enumerate every "product
lasso", a simple path followed by a simple cycle in the product of the
automaton with the word's positions.  Memoryless optima exist for all five
infinite-word value functions on that finite graph, so the best product
lasso gives the exact value.  Everything here is deliberately naive.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import ValueFunction, WeightedAutomaton
from .errors import TooLarge
from .graph import Graph
from .words import FiniteWord, LassoWord

RUN_CAP = 10**6
PRODUCT_NODE_CAP = 200
CYCLE_NODE_CAP = 12


def sequence_value(f: ValueFunction, weights) -> Fraction:
    """Value of a finite weight sequence."""
    if f.kind == "max":
        return max(weights)
    if f.kind == "last":
        return weights[-1]
    if f.kind == "sum":
        return sum(weights, Fraction(0))
    raise ValueError(f"{f} is not a finite-word value function")


def lasso_sequence_value(f: ValueFunction, prefix, cycle) -> Fraction:
    """Value of the infinite sequence ``prefix cycle cycle ...``."""
    if f.kind == "sup":
        return max(list(prefix) + list(cycle))
    if f.kind == "limsup":
        return max(cycle)
    if f.kind == "liminf":
        return min(cycle)
    if f.kind == "limavg":
        return Fraction(sum(cycle, Fraction(0)), len(cycle))
    if f.kind == "disc":
        lam = f.lam
        head = sum((w * lam**i for i, w in enumerate(prefix)), Fraction(0))
        loop = sum((w * lam**i for i, w in enumerate(cycle)), Fraction(0))
        return head + lam ** len(prefix) * loop / (1 - lam ** len(cycle))
    raise ValueError(f"{f} is not an infinite-word value function")


@dataclass(frozen=True)
class RunEnumeration:
    """All runs over a finite word as ``(states, weights)`` pairs."""

    runs: tuple

    def __len__(self):
        return len(self.runs)


def enumerate_runs(A: WeightedAutomaton, w: FiniteWord, cap: int = RUN_CAP) -> RunEnumeration:
    runs = [((A.initial,), ())]
    for sym in w:
        grown = []
        for states, weights in runs:
            for t in A.transitions:
                if t.source == states[-1] and t.symbol == sym:
                    grown.append((states + (t.target,), weights + (t.weight,)))
                    if len(grown) > cap:
                        raise TooLarge(f"more than {cap} runs")
        runs = grown
    return RunEnumeration(tuple(runs))


def brute_value_finite(A: WeightedAutomaton, w: FiniteWord, cap: int = RUN_CAP) -> Fraction:
    return max(sequence_value(A.value_function, weights) for _, weights in enumerate_runs(A, w, cap).runs)


def _product_lassos(A: WeightedAutomaton, w: LassoWord, cap: int):
    """Yield ``(prefix_weights, cycle_weights)`` for every product lasso."""
    u, v = w.prefix, w.period
    length = len(u) + len(v)

    def symbol(i):
        return u[i] if i < len(u) else v[i - len(u)]

    def nxt(i):
        return i + 1 if i + 1 < length else len(u)

    moves = {}
    for t in A.transitions:
        moves.setdefault(t.source, []).append(t)
    if len(A.states) * length > PRODUCT_NODE_CAP:
        raise TooLarge(f"product exceeds {PRODUCT_NODE_CAP} nodes")

    root = (A.initial, 0)
    path_nodes = [root]
    path_weights = []
    where = {root: 0}
    count = 0
    # explicit stack of edge iterators to avoid recursion limits
    def edges_from(node):
        q, i = node
        return iter([((t.target, nxt(i)), t.weight) for t in moves.get(q, ()) if t.symbol == symbol(i)])

    stack = [edges_from(root)]
    while stack:
        step = next(stack[-1], None)
        if step is None:
            stack.pop()
            gone = path_nodes.pop()
            del where[gone]
            if path_weights:
                path_weights.pop()
            continue
        node, weight = step
        if node in where:
            j = where[node]
            count += 1
            if count > cap:
                raise TooLarge(f"more than {cap} product lassos")
            yield tuple(path_weights[:j]), tuple(path_weights[j:]) + (weight,)
            continue
        where[node] = len(path_nodes)
        path_nodes.append(node)
        path_weights.append(weight)
        stack.append(edges_from(node))


def brute_value_lasso(A: WeightedAutomaton, w: LassoWord, cap: int = RUN_CAP) -> Fraction:
    f = A.value_function
    return max(lasso_sequence_value(f, p, c) for p, c in _product_lassos(A, w, cap))


def truncated_disc_bounds(A: WeightedAutomaton, w: LassoWord, steps: int) -> tuple:
    """Interval certain to contain a discounted value, from the first ``steps`` symbols.

    Every run prefix of that length is enumerated; the unseen tail
    contributes at most ``V lam^N / (1 - lam)`` in absolute value.
    """
    lam = A.value_function.lam
    symbols = FiniteWord(tuple(w.symbol_at(i) for i in range(steps)))
    best = max(
        sum((x * lam**i for i, x in enumerate(weights)), Fraction(0))
        for _, weights in enumerate_runs(A, symbols).runs
    )
    V = max(abs(t.weight) for t in A.transitions)
    tail = V * lam**steps / (1 - lam)
    return best - tail, best + tail


def enumerate_simple_cycles(graph: Graph, cap: int = CYCLE_NODE_CAP) -> list:
    """All simple cycles as ``(edges, mean)``; each cycle is listed once,
    starting from its smallest node in ``graph.nodes`` order."""
    if len(graph.nodes) > cap:
        raise TooLarge(f"cycle enumeration is limited to {cap} nodes")
    order = {v: i for i, v in enumerate(graph.nodes)}
    out = []
    for start in graph.nodes:
        floor = order[start]

        def extend(node, path, visited):
            for e in graph.out_edges[node]:
                if order[e.dst] < floor:
                    continue
                if e.dst == start:
                    cycle = path + [e]
                    out.append((tuple(cycle), Fraction(sum(x.weight for x in cycle), len(cycle))))
                elif e.dst not in visited:
                    extend(e.dst, path + [e], visited | {e.dst})

        extend(start, [], {start})
    return out


def brute_max_mean(graph: Graph) -> Optional[Fraction]:
    cycles = enumerate_simple_cycles(graph)
    return max((m for _, m in cycles), default=None)
