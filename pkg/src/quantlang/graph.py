"""Labelled weighted digraphs: the structure every evaluation runs on.

Nodes are arbitrary hashables (automaton states, or ``(state, position)``
pairs for products with a lasso word).  Parallel edges are allowed.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, NamedTuple, Optional


class Edge(NamedTuple):
    src: Hashable
    dst: Hashable
    weight: object
    label: object = None


@dataclass(frozen=True, eq=False)
class Graph:
    nodes: tuple
    edges: tuple
    root: Optional[Hashable] = None

    @cached_property
    def out_edges(self) -> dict:
        out = {v: [] for v in self.nodes}
        for e in self.edges:
            out[e.src].append(e)
        return out

    def subgraph(self, nodes: Iterable = None, edge_filter=None) -> "Graph":
        keep = set(self.nodes) if nodes is None else set(nodes)
        edges = tuple(
            e for e in self.edges
            if e.src in keep and e.dst in keep and (edge_filter is None or edge_filter(e))
        )
        return Graph(tuple(v for v in self.nodes if v in keep), edges, self.root if self.root in keep else None)


def reachable(graph: Graph, start=None) -> set:
    start = graph.root if start is None else start
    seen = {start}
    todo = [start]
    while todo:
        v = todo.pop()
        for e in graph.out_edges[v]:
            if e.dst not in seen:
                seen.add(e.dst)
                todo.append(e.dst)
    return seen


def reachable_part(graph: Graph) -> Graph:
    return graph.subgraph(reachable(graph))


def strongly_connected_components(graph: Graph) -> list:
    """Tarjan's algorithm, iterative.  Components come out in reverse
    topological order (sinks first)."""
    index, low, on_stack = {}, {}, set()
    stack, comps = [], []
    counter = 0
    for root in graph.nodes:
        if root in index:
            continue
        work = [(root, iter(graph.out_edges[root]))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for e in it:
                w = e.dst
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(graph.out_edges[w])))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                comps.append(comp)
    return comps


def cyclic_components(graph: Graph) -> list:
    """Components that contain at least one edge, each as ``(nodes, internal_edges)``."""
    out = []
    for comp in strongly_connected_components(graph):
        members = set(comp)
        internal = [e for v in comp for e in graph.out_edges[v] if e.dst in members]
        if internal:
            out.append((comp, internal))
    return out


def has_cycle(graph: Graph) -> bool:
    return bool(cyclic_components(graph))


def shortest_path(graph: Graph, src, dst, edge_filter=None) -> Optional[list]:
    """BFS path from ``src`` to ``dst`` as a list of edges (empty if equal)."""
    if src == dst:
        return []
    parent = {src: None}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        for e in graph.out_edges[v]:
            if edge_filter is not None and not edge_filter(e):
                continue
            if e.dst not in parent:
                parent[e.dst] = e
                if e.dst == dst:
                    path = []
                    node = dst
                    while parent[node] is not None:
                        path.append(parent[node])
                        node = parent[node].src
                    return path[::-1]
                queue.append(e.dst)
    return None


def cycle_through(graph: Graph, edge: Edge, members=None) -> list:
    """A closed walk starting with ``edge`` and returning to its source."""
    flt = None if members is None else (lambda e: e.src in members and e.dst in members)
    back = shortest_path(graph, edge.dst, edge.src, flt)
    if back is None:
        raise ValueError("edge does not lie on a cycle")
    return [edge] + back


def walk_to_cycle(graph: Graph, start) -> tuple:
    """Follow first out-edges from ``start`` until a node repeats.

    Returns ``(path, cycle)`` as edge lists with ``path`` ending where
    ``cycle`` starts.
    """
    seen = {start: 0}
    walk = []
    v = start
    while True:
        e = graph.out_edges[v][0]
        walk.append(e)
        v = e.dst
        if v in seen:
            k = seen[v]
            return walk[:k], walk[k:]
        seen[v] = len(walk)
