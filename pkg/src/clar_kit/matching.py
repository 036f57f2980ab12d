"""Perfect matchings (Kekulé structures) and alternating hexagons."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

import networkx as nx
import numpy as np

from . import _kernels
from .benzenoid import BenzenoidGraph
from .config import caps
from .errors import InvalidArgument, ResourceLimit

Edge = tuple[int, int]


@dataclass(frozen=True)
class SimpleGraph:
    """Bare vertex/edge structure for graphs that are not benzenoids."""

    vertex_count: int
    edges: tuple[Edge, ...]

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(tuple(sorted(a)) for a in adj)


@dataclass(frozen=True)
class PerfectMatching:
    edges: frozenset[Edge]

    @classmethod
    def from_edges(cls, edges: Iterable[Iterable[int]]) -> PerfectMatching:
        return cls(frozenset(tuple(sorted(e)) for e in edges))

    def to_json(self) -> dict:
        return {"edges": [list(e) for e in sorted(self.edges)]}

    @classmethod
    def from_json(cls, data: Mapping) -> PerfectMatching:
        try:
            return cls.from_edges(data["edges"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidArgument(f"malformed matching JSON: {exc}") from None

    def is_perfect_for(self, graph) -> bool:
        edge_set = set(graph.edges)
        covered = [0] * graph.vertex_count
        for u, v in self.edges:
            if (u, v) not in edge_set:
                return False
            covered[u] += 1
            covered[v] += 1
        return all(c == 1 for c in covered)


def _csr(graph) -> tuple[np.ndarray, np.ndarray]:
    if isinstance(graph, BenzenoidGraph):
        return graph.csr
    indptr = np.zeros(graph.vertex_count + 1, np.int64)
    indptr[1:] = np.cumsum([len(a) for a in graph.adjacency])
    indices = np.fromiter(itertools.chain.from_iterable(graph.adjacency), np.int64, count=int(indptr[-1]))
    return indptr, indices


def _two_colouring(graph) -> list[int] | None:
    if isinstance(graph, BenzenoidGraph):
        part = graph.bipartition
        return None if part is None else list(part)
    color = [-1] * graph.vertex_count
    for s in range(graph.vertex_count):
        if color[s] != -1:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in graph.adjacency[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def maximum_matching(graph, removed: Iterable[int] = ()) -> dict[int, int]:
    """Maximum matching of ``graph`` minus ``removed`` vertices, as a mate map.

    Bipartite graphs go through the Hopcroft-Karp kernel; anything else falls
    back to networkx's blossom implementation.
    """
    active = np.ones(graph.vertex_count, np.bool_)
    for v in removed:
        active[v] = False
    color = _two_colouring(graph)
    if color is not None:
        indptr, indices = _csr(graph)
        mate = _kernels.hopcroft_karp(indptr, indices, np.array(color, np.bool_) == 0, active)
        return {u: int(v) for u, v in enumerate(mate) if v >= 0}
    g = nx.Graph()
    g.add_nodes_from(v for v in range(graph.vertex_count) if active[v])
    g.add_edges_from((u, v) for u, v in graph.edges if active[u] and active[v])
    mates = {}
    for u, v in nx.max_weight_matching(g, maxcardinality=True):
        mates[u] = v
        mates[v] = u
    return mates


def has_perfect_matching(graph) -> bool:
    if graph.vertex_count % 2:
        return False
    return len(maximum_matching(graph)) == graph.vertex_count


def _mates_to_matching(mates: Mapping[int, int]) -> PerfectMatching:
    return PerfectMatching(frozenset((u, v) for u, v in mates.items() if u < v))


def enumerate_perfect_matchings(graph, cap: int | None = None) -> list[PerfectMatching]:
    """All perfect matchings, in backtracking order (lowest uncovered vertex first)."""
    cap = caps().vertices if cap is None else cap
    if graph.vertex_count > cap:
        raise ResourceLimit(f"matching enumeration is capped at {cap} vertices, graph has {graph.vertex_count}")
    indptr, indices = _csr(graph)
    active = np.ones(graph.vertex_count, np.bool_)
    rows = _kernels.enumerate_mates(indptr, indices, active, np.iinfo(np.int64).max)
    return [_mates_to_matching({u: int(v) for u, v in enumerate(row)}) for row in rows]


def alternating_hexagons(graph: BenzenoidGraph, m: PerfectMatching) -> frozenset[int]:
    """Hexagons holding exactly three edges of ``m``."""
    if not m.is_perfect_for(graph):
        raise InvalidArgument("matching is not a perfect matching of the graph")
    return frozenset(
        h for h in range(graph.hexagon_count) if sum(e in m.edges for e in graph.hexagon_edges(h)) == 3
    )


def matching_after_removal(graph: BenzenoidGraph, hexes: Iterable[int]) -> PerfectMatching | None:
    """Perfect matching of ``graph`` with the vertices of ``hexes`` deleted, if any."""
    hexes = sorted(set(hexes))
    removed: set[int] = set()
    for h in hexes:
        vs = set(graph.hexagons[h])
        if vs & removed:
            raise InvalidArgument(f"hexagon set {hexes} is not independent")
        removed |= vs
    if (graph.vertex_count - len(removed)) % 2:
        return None
    mates = maximum_matching(graph, removed)
    if len(mates) != graph.vertex_count - len(removed):
        return None
    return _mates_to_matching(mates)
