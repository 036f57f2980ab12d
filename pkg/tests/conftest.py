import itertools
import math

import networkx as nx
import pytest

from clar_kit.benzenoid import BenzenoidGraph, BenzenoidSpec, build_benzenoid
from clar_kit.extremal import enumerate_catacondensed

# acceptance lines collected by test_acceptance.py, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


# -- independent oracles ----------------------------------------------------


def lattice_graph(centers):
    """Benzenoid from axial hexagon centres, with vertices found geometrically.

    Shares nothing with the gluing constructor: corners are placed in the
    plane and merged by rounded coordinates.
    """
    ids = {}
    hexagons = []
    for q, r in centers:
        cx = math.sqrt(3) * (q + r / 2.0)
        cy = 1.5 * r
        cycle = []
        for i in range(6):
            ang = math.radians(60 * i + 30)
            key = (round((cx + math.cos(ang)) * 1000), round((cy + math.sin(ang)) * 1000))
            cycle.append(ids.setdefault(key, len(ids)))
        hexagons.append(tuple(cycle))
    edges = {tuple(sorted((h[i], h[(i + 1) % 6]))) for h in hexagons for i in range(6)}
    return BenzenoidGraph(len(ids), tuple(edges), tuple(hexagons))


def to_nx(graph):
    g = nx.Graph()
    g.add_nodes_from(range(graph.vertex_count))
    g.add_edges_from(graph.edges)
    return g


def check_certificate(graph, clar_set, witness_edges):
    """Revalidate a Clar certificate from the raw graph data only.

    Returns a list of problems; empty means valid.
    """
    problems = []
    edge_set = {tuple(sorted(e)) for e in graph.edges}
    matched = [tuple(sorted(e)) for e in witness_edges]
    cover = [0] * graph.vertex_count
    for u, v in matched:
        if (u, v) not in edge_set:
            problems.append(f"witness edge {(u, v)} not in graph")
        cover[u] += 1
        cover[v] += 1
    if any(c != 1 for c in cover):
        problems.append("witness does not cover every vertex exactly once")
    for a, b in itertools.combinations(clar_set, 2):
        if set(graph.hexagons[a]) & set(graph.hexagons[b]):
            problems.append(f"hexagons {a} and {b} are not disjoint")
    matched_set = set(matched)
    for h in clar_set:
        cyc = graph.hexagons[h]
        inside = sum(tuple(sorted((cyc[i], cyc[(i + 1) % 6]))) in matched_set for i in range(6))
        if inside != 3:
            problems.append(f"hexagon {h} holds {inside} witness edges, not 3")
    return problems


def brute_mis_sets(tree):
    """All maximum independent sets by scanning every subset (tiny trees only)."""
    n = tree.node_count
    best, sets = -1, []
    for mask in range(1 << n):
        members = [v for v in range(n) if mask >> v & 1]
        if any(mask >> u & 1 and mask >> v & 1 for u, v in tree.edges):
            continue
        if len(members) > best:
            best, sets = len(members), []
        if len(members) == best:
            sets.append(frozenset(members))
    return sets


# -- fixtures ---------------------------------------------------------------


@pytest.fixture(scope="session")
def pyrene():
    """Pericondensed: four hexagons, two internal vertices."""
    return lattice_graph([(0, 0), (1, 0), (1, -1), (0, 1)])


@pytest.fixture(scope="session")
def corpus_small():
    """Every catacondensed benzenoid with at most 6 hexagons."""
    return [spec for n in range(1, 7) for spec in enumerate_catacondensed(n)]


@pytest.fixture(scope="session")
def naphthalene():
    return build_benzenoid(BenzenoidSpec.chain(2))


@pytest.fixture(scope="session")
def b1():
    return build_benzenoid(BenzenoidSpec.chain(3, [2]))


@pytest.fixture(scope="session")
def straight3():
    return build_benzenoid(BenzenoidSpec.chain(3))
