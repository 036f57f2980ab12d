"""Exact Clar numbers with certificates, and the dualist-tree upper bound."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping

from .benzenoid import BenzenoidGraph, dualist_tree
from .config import caps
from .errors import Infeasible, InvalidArgument, ResourceLimit
from .matching import (
    PerfectMatching,
    alternating_hexagons,
    enumerate_perfect_matchings,
    has_perfect_matching,
    matching_after_removal,
)
from .trees import alpha, independence_bound, iter_independent_sets


@dataclass(frozen=True)
class ClarCertificate:
    """Independent hexagons plus a perfect matching making each of them alternating."""

    clar_set: tuple[int, ...]
    witness: PerfectMatching

    @property
    def value(self) -> int:
        return len(self.clar_set)

    def to_json(self) -> dict:
        return {"value": self.value, "clar_set": list(self.clar_set), "witness": self.witness.to_json()}

    @classmethod
    def from_json(cls, data: Mapping) -> ClarCertificate:
        try:
            cert = cls(tuple(sorted(int(h) for h in data["clar_set"])), PerfectMatching.from_json(data["witness"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidArgument(f"malformed certificate JSON: {exc}") from None
        if "value" in data and int(data["value"]) != cert.value:
            raise InvalidArgument("certificate value disagrees with its clar_set")
        return cert


def clar_bounds(graph: BenzenoidGraph) -> dict[str, int]:
    """Both upper bounds: alpha of the dualist tree and the closed formula."""
    tree = dualist_tree(graph)
    tree_alpha = alpha(tree)
    formula = independence_bound(graph.hexagon_count)
    return {
        "n": graph.hexagon_count,
        "tree_alpha": tree_alpha,
        "formula_bound": formula,
        "bound": min(tree_alpha, formula),
    }


def clar_upper_bound(graph: BenzenoidGraph) -> int:
    return clar_bounds(graph)["bound"]


def _assemble(graph: BenzenoidGraph, clar_set: tuple[int, ...], residual: PerfectMatching) -> ClarCertificate:
    edges = set(residual.edges)
    for h in clar_set:
        edges.update(graph.hexagon_edges(h)[0::2])
    return ClarCertificate(clar_set, PerfectMatching(frozenset(edges)))


def clar_number(graph: BenzenoidGraph) -> ClarCertificate:
    """Largest independent hexagon set whose removal leaves a Kekuléan graph.

    Candidate sets come from the dualist tree, largest size first starting at
    the upper bound, lexicographically within a size; the first feasible one
    is returned.
    """
    tree = dualist_tree(graph)
    if not has_perfect_matching(graph):
        raise Infeasible("graph has no perfect matching")
    for size in range(clar_upper_bound(graph), -1, -1):
        for candidate in iter_independent_sets(tree, size):
            residual = matching_after_removal(graph, candidate)
            if residual is not None:
                return _assemble(graph, candidate, residual)
    raise Infeasible("no feasible hexagon set")  # unreachable: size 0 is feasible


def clar_number_bruteforce(graph: BenzenoidGraph, cap: int | None = None) -> ClarCertificate:
    """Scan every perfect matching and every subset of its alternating hexagons."""
    cap = caps().vertices if cap is None else cap
    if graph.vertex_count > cap:
        raise ResourceLimit(f"brute-force Clar search is capped at {cap} vertices, graph has {graph.vertex_count}")
    vsets = [frozenset(h) for h in graph.hexagons]
    best: tuple[int, tuple[int, ...], PerfectMatching] | None = None
    for m in enumerate_perfect_matchings(graph, cap):
        alt = sorted(alternating_hexagons(graph, m))
        for size in range(len(alt), -1, -1):
            if best is not None and size < best[0]:
                break
            hit = None
            for combo in itertools.combinations(alt, size):
                if all(not (vsets[a] & vsets[b]) for a, b in itertools.combinations(combo, 2)):
                    hit = combo
                    break
            if hit is not None:
                if best is None or (size, _neg(hit)) > (best[0], _neg(best[1])):
                    best = (size, hit, m)
                break
    if best is None:
        raise Infeasible("graph has no perfect matching")
    return ClarCertificate(best[1], best[2])


def _neg(combo: tuple[int, ...]) -> tuple[int, ...]:
    # larger key means lexicographically smaller hexagon set
    return tuple(-h for h in combo)
