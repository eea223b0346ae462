"""Vertex elimination on directed graphs.

Eliminating ``v`` removes it and connects each in-neighbour of ``v`` to each
out-neighbour (the fill-in).  The elimination graph is the input plus every
fill-in arc produced along an ordering.  A digraph has a directed cycle iff
its elimination graph, under any ordering, contains a 2-cycle.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

Vertex = Hashable
Arc = tuple[Vertex, Vertex]


@dataclass(frozen=True)
class Digraph:
    vertices: tuple[Vertex, ...]
    arcs: frozenset[Arc] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "arcs", frozenset(self.arcs))
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise ValueError("duplicate vertex")
        for x, y in self.arcs:
            if x not in vs or y not in vs:
                raise ValueError(f"arc {(x, y)!r} leaves the vertex set")

    @classmethod
    def from_arcs(cls, arcs: Iterable[Arc], vertices: Iterable[Vertex] = ()) -> "Digraph":
        arcs = list(arcs)
        order: dict = dict.fromkeys(vertices)
        for x, y in arcs:
            order.setdefault(x)
            order.setdefault(y)
        return cls(tuple(order), frozenset(arcs))

    def successors(self) -> dict[Vertex, set[Vertex]]:
        succ: dict = {v: set() for v in self.vertices}
        for x, y in self.arcs:
            succ[x].add(y)
        return succ


@dataclass(frozen=True)
class EliminationOrdering:
    order: tuple[Vertex, ...]
    strategy: str = "input-order"


@dataclass(frozen=True)
class EliminationResult:
    ordering: EliminationOrdering
    steps: tuple[frozenset[Arc], ...]  # fill-in of order[i] in the i-th residual graph
    fill_in: frozenset[Arc]
    elimination_graph: Digraph
    two_cycle_pairs: frozenset[tuple[Vertex, Vertex]] = field(default=frozenset())
    width: int = 0  # max residual degree at elimination time


def fill_in_of(graph: Digraph, v: Vertex) -> frozenset[Arc]:
    if v not in graph.vertices:
        raise KeyError(f"unknown vertex {v!r}")
    ins = [x for x, y in graph.arcs if y == v]
    outs = [y for x, y in graph.arcs if x == v]
    return frozenset((x, y) for x in ins for y in outs if x != y)


def has_cycle(graph: Digraph) -> bool:
    succ = graph.successors()
    indeg = {v: 0 for v in graph.vertices}
    for _, y in graph.arcs:
        indeg[y] += 1
    stack = [v for v, d in indeg.items() if d == 0]
    seen = 0
    while stack:
        v = stack.pop()
        seen += 1
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    return seen != len(graph.vertices)


def _check_ordering(graph: Digraph, order: Sequence[Vertex]) -> None:
    if len(order) != len(graph.vertices) or set(order) != set(graph.vertices):
        raise ValueError("ordering is not a permutation of the vertices")


class _Residual:
    """Mutable adjacency used while eliminating."""

    def __init__(self, graph: Digraph):
        self.succ = {v: set() for v in graph.vertices}
        self.pred = {v: set() for v in graph.vertices}
        for x, y in graph.arcs:
            if x == y:
                raise ValueError(f"self-loop on {x!r} cannot be eliminated")
            self.succ[x].add(y)
            self.pred[y].add(x)

    def degree(self, v) -> int:
        return len(self.succ[v]) + len(self.pred[v])

    def eliminate(self, v) -> frozenset[Arc]:
        ins, outs = self.pred.pop(v), self.succ.pop(v)
        for x in ins:
            self.succ[x].discard(v)
        for y in outs:
            self.pred[y].discard(v)
        fill = frozenset((x, y) for x in ins for y in outs if x != y)
        for x, y in fill:
            self.succ[x].add(y)
            self.pred[y].add(x)
        return fill


def eliminate(graph: Digraph, ordering: EliminationOrdering | Sequence[Vertex]) -> EliminationResult:
    if not isinstance(ordering, EliminationOrdering):
        ordering = EliminationOrdering(tuple(ordering))
    _check_ordering(graph, ordering.order)
    residual = _Residual(graph)
    steps = []
    width = 0
    for v in ordering.order:
        width = max(width, residual.degree(v))
        steps.append(residual.eliminate(v))
    fill = frozenset().union(*steps)
    star = Digraph(graph.vertices, graph.arcs | fill)
    pos = {v: i for i, v in enumerate(graph.vertices)}
    pairs = frozenset(
        (x, y) for x, y in star.arcs if (y, x) in star.arcs and pos[x] < pos[y]
    )
    return EliminationResult(ordering, tuple(steps), fill, star, pairs, width)


def min_degree_ordering(graph: Digraph) -> EliminationOrdering:
    """Greedy minimum (in+out) degree over the residual graph, fill-in included.

    Ties go to the vertex listed first in ``graph.vertices``.
    """
    residual = _Residual(graph)
    remaining = list(graph.vertices)
    order = []
    while remaining:
        v = min(remaining, key=residual.degree)  # min() keeps the first minimum
        remaining.remove(v)
        residual.eliminate(v)
        order.append(v)
    return EliminationOrdering(tuple(order), "min-degree")


def input_ordering(graph: Digraph) -> EliminationOrdering:
    return EliminationOrdering(tuple(graph.vertices), "input-order")
