"""Directed multigraph store and the Hierholzer circuit engine used by every construction."""

from __future__ import annotations

from typing import Any, Callable, Hashable, Iterable, Optional

import networkx as nx

from .errors import NotEulerianError, SequenceError
from .models import CircuitResult

# A tie-break orders the candidate out-arcs of a vertex, given as (head, arc index) pairs.
TieBreak = Callable[[list[tuple[Any, int]]], list[tuple[Any, int]]]


def lexicographic(candidates: list[tuple[Any, int]]) -> list[tuple[Any, int]]:
    """Smallest head first; parallel arcs in insertion order."""
    return sorted(candidates)


def reverse_lexicographic(candidates: list[tuple[Any, int]]) -> list[tuple[Any, int]]:
    return sorted(candidates, key=lambda c: (c[0], -c[1]), reverse=True)


class DirectedMultigraph:
    """
    Vertices plus a multiset of arcs with stable insertion order.

    Arcs may carry a label (the de Bruijn subgraphs label each arc with its
    n-tuple). Parallel arcs and self-loops are allowed.
    """

    def __init__(self, vertices: Iterable[Hashable] = ()):
        self._graph = nx.MultiDiGraph()
        self._graph.add_nodes_from(vertices)
        self._arcs: list[tuple[Hashable, Hashable, Any]] = []

    def add_vertex(self, v: Hashable) -> None:
        self._graph.add_node(v)

    def add_arc(self, tail: Hashable, head: Hashable, label: Any = None) -> int:
        """Add an arc between registered vertices and return its index."""
        if tail not in self._graph or head not in self._graph:
            raise SequenceError(f"arc {tail!r} -> {head!r} has an unregistered endpoint")
        index = len(self._arcs)
        self._arcs.append((tail, head, label))
        self._graph.add_edge(tail, head, key=index)
        return index

    @property
    def vertices(self) -> list[Hashable]:
        return list(self._graph.nodes)

    @property
    def arcs(self) -> list[tuple[Hashable, Hashable, Any]]:
        return list(self._arcs)

    @property
    def nx_graph(self) -> nx.MultiDiGraph:
        return self._graph

    def in_degree(self, v: Hashable) -> int:
        return self._graph.in_degree(v)

    def out_degree(self, v: Hashable) -> int:
        return self._graph.out_degree(v)

    def support(self) -> list[Hashable]:
        """Vertices touched by at least one arc."""
        return [v for v in self._graph.nodes if self._graph.degree(v) > 0]

    def __len__(self) -> int:
        return len(self._arcs)


def check_balanced(g: DirectedMultigraph) -> bool:
    """True iff in-degree equals out-degree at every vertex."""
    return all(g.in_degree(v) == g.out_degree(v) for v in g.vertices)


def check_connected_on_support(g: DirectedMultigraph) -> bool:
    """True iff the vertices with arcs form one weakly connected component."""
    support = g.support()
    if not support:
        return True
    return nx.is_weakly_connected(g.nx_graph.subgraph(support))


def eulerian_circuit(
    g: DirectedMultigraph,
    start: Optional[Hashable] = None,
    tie_break: TieBreak = lexicographic,
) -> CircuitResult:
    """
    Closed walk consuming every arc of `g` exactly once (Hierholzer).

    Args:
        g: Balanced graph, connected on its support
        start: First vertex of the walk; defaults to the smallest vertex with arcs
        tie_break: Order in which unused out-arcs are tried

    Returns:
        CircuitResult whose vertex list starts and ends at `start`

    Raises:
        NotEulerianError: If `g` is unbalanced or disconnected, or if the
            walk fails to consume every arc
    """
    if not check_balanced(g):
        raise NotEulerianError("not Eulerian (degree): in-degree differs from out-degree")
    if not check_connected_on_support(g):
        raise NotEulerianError("not Eulerian (connectivity): arcs lie in several components")

    arcs = g.arcs
    if not arcs:
        return CircuitResult(vertices=[], arcs_consumed=0)
    if start is None:
        start = min(g.support())
    elif start not in g.nx_graph:
        raise SequenceError(f"start vertex {start!r} is not a vertex of the graph")
    elif g.out_degree(start) == 0:
        raise SequenceError(f"start vertex {start!r} has no arcs")

    outgoing: dict[Hashable, list[tuple[Any, int]]] = {v: [] for v in g.vertices}
    for index, (tail, head, _) in enumerate(arcs):
        outgoing[tail].append((head, index))
    # pop() from the end yields the preferred arc first
    pending = {v: [index for _, index in reversed(tie_break(cands))] for v, cands in outgoing.items()}

    stack: list[tuple[Hashable, Optional[int]]] = [(start, None)]
    walk: list[tuple[Hashable, Optional[int]]] = []
    used = 0
    while stack:
        v, _ = stack[-1]
        if pending[v]:
            index = pending[v].pop()
            used += 1
            stack.append((arcs[index][1], index))
        else:
            walk.append(stack.pop())

    if used != len(arcs):
        raise NotEulerianError(f"walk consumed {used} of {len(arcs)} arcs")
    walk.reverse()
    # each entry carries the arc that entered its vertex
    return CircuitResult(
        vertices=[v for v, _ in walk],
        arcs_consumed=used,
        labels=[arcs[index][2] for _, index in walk[1:]],
    )


def undirected_euler(
    q: int,
    edges: Iterable[tuple[int, int]],
    start: int = 0,
    tie_break: TieBreak = lexicographic,
) -> CircuitResult:
    """
    Closed walk on vertices 0..q-1 using every undirected edge once.

    Each edge is consumed once in total, whichever direction it is walked.

    Raises:
        NotEulerianError: On an odd-degree vertex or a disconnected support
    """
    edge_list = list(edges)
    multigraph = nx.MultiGraph()
    multigraph.add_nodes_from(range(q))
    multigraph.add_edges_from(edge_list)

    odd = [v for v, d in multigraph.degree() if d % 2]
    if odd:
        raise NotEulerianError(f"not Eulerian (degree): odd degree at {odd}")
    support = [v for v, d in multigraph.degree() if d > 0]
    if not edge_list:
        return CircuitResult(vertices=[], arcs_consumed=0)
    if not nx.is_connected(multigraph.subgraph(support)):
        raise NotEulerianError("not Eulerian (connectivity): edges lie in several components")
    if start not in support:
        start = min(support)

    incident: dict[int, list[tuple[int, int]]] = {v: [] for v in range(q)}
    for index, (a, b) in enumerate(edge_list):
        incident[a].append((b, index))
        if a != b:
            incident[b].append((a, index))
    pending = {v: [index for _, index in reversed(tie_break(cands))] for v, cands in incident.items()}
    used = [False] * len(edge_list)

    stack = [start]
    walk: list[int] = []
    while stack:
        v = stack[-1]
        while pending[v] and used[pending[v][-1]]:
            pending[v].pop()
        if pending[v]:
            index = pending[v].pop()
            used[index] = True
            a, b = edge_list[index]
            stack.append(b if a == v else a)
        else:
            walk.append(stack.pop())

    consumed = sum(used)
    if consumed != len(edge_list):
        raise NotEulerianError(f"walk consumed {consumed} of {len(edge_list)} edges")
    walk.reverse()
    return CircuitResult(vertices=walk, arcs_consumed=consumed)
