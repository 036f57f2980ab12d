import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clar_kit.errors import InvalidArgument, ResourceLimit
from clar_kit.trees import (
    SubcubicTree,
    TreeKind,
    alpha,
    canonical_form,
    classify_extremal_tree,
    double_leaf_neighbors,
    enumerate_mis,
    enumerate_subcubic_trees,
    independence_bound,
    is_tk,
    iter_independent_sets,
    leaf_containing_mis,
    make_tk,
    random_subcubic_tree,
    tk_descriptor,
    vertex_cover_size,
)

from conftest import brute_mis_sets


def star3():
    return SubcubicTree.from_edges(4, [(0, 1), (0, 2), (0, 3)])


def to_nx(tree):
    g = nx.Graph()
    g.add_nodes_from(range(tree.node_count))
    g.add_edges_from(tree.edges)
    return g


@st.composite
def subcubic_trees(draw, max_n=40):
    n = draw(st.integers(1, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_subcubic_tree(n, random.Random(seed))


ALL_SMALL = [t for n in range(1, 11) for t in enumerate_subcubic_trees(n)]


# -- construction -------------------------------------------------------------


def test_tree_validation():
    with pytest.raises(InvalidArgument):
        SubcubicTree.from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
    with pytest.raises(InvalidArgument):
        SubcubicTree.from_edges(3, [(0, 1), (1, 2), (2, 0)])
    with pytest.raises(InvalidArgument):
        SubcubicTree.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(InvalidArgument):
        SubcubicTree.from_edges(0, [])
    with pytest.raises(InvalidArgument):
        SubcubicTree.from_json({"n": 3, "edges": [[0, 1]]})


def test_json_roundtrip():
    t = make_tk(4)
    assert SubcubicTree.from_json(t.to_json()) == t
    assert t.to_json()["n"] == 11


# -- independence bound and alpha ------------------------------------------------


@pytest.mark.parametrize("n,expected", [(1, 1), (11, 7), (5, 3)])
def test_independence_bound(n, expected):
    assert independence_bound(n) == expected


def test_independence_bound_rejects_zero():
    with pytest.raises(InvalidArgument):
        independence_bound(0)


@pytest.mark.parametrize(
    "tree,expected",
    [(SubcubicTree.path(3), 2), (make_tk(4), 7), (star3(), 3), (SubcubicTree.path(1), 1)],
)
def test_alpha_examples(tree, expected):
    assert alpha(tree) == expected


@pytest.mark.parametrize("tree", ALL_SMALL, ids=lambda t: canonical_form(t))
def test_alpha_matches_subset_scan(tree):
    assert alpha(tree) == len(brute_mis_sets(tree)[0])


@settings(max_examples=200, deadline=None)
@given(subcubic_trees(max_n=200))
def test_alpha_below_bound(tree):
    assert alpha(tree) <= independence_bound(tree.node_count)


@settings(max_examples=200, deadline=None)
@given(subcubic_trees())
def test_gallai_identity(tree):
    assert alpha(tree) + vertex_cover_size(tree) == tree.node_count


# -- leaf-containing MIS ---------------------------------------------------------


def test_leaf_containing_mis_examples():
    assert leaf_containing_mis(SubcubicTree.path(3)) == {0, 2}
    assert leaf_containing_mis(star3()) == {1, 2, 3}
    # T_2 is the 5-path: v1, v3, v5
    assert leaf_containing_mis(make_tk(2)) == {0, 2, 4}


@pytest.mark.parametrize("n", [1, 2])
def test_leaf_containing_mis_rejects_tiny(n):
    with pytest.raises(InvalidArgument):
        leaf_containing_mis(SubcubicTree.path(n))


def _check_leaf_mis(tree):
    s = leaf_containing_mis(tree)
    assert not any(u in s and v in s for u, v in tree.edges)
    assert len(s) == alpha(tree)
    assert set(tree.leaves) <= s


@pytest.mark.parametrize("tree", [t for t in ALL_SMALL if t.node_count >= 3], ids=canonical_form)
def test_leaf_containing_mis_exhaustive(tree):
    _check_leaf_mis(tree)


@settings(max_examples=200, deadline=None)
@given(subcubic_trees(max_n=120))
def test_leaf_containing_mis_random(tree):
    if tree.node_count >= 3:
        _check_leaf_mis(tree)


# -- vertex cover ------------------------------------------------------------


def _brute_cover(tree):
    for size in range(tree.node_count + 1):
        for cover in itertools.combinations(range(tree.node_count), size):
            c = set(cover)
            if all(u in c or v in c for u, v in tree.edges):
                return size


def test_vertex_cover_examples():
    assert vertex_cover_size(SubcubicTree.path(3)) == 1
    assert vertex_cover_size(SubcubicTree.path(1)) == 0
    t4 = make_tk(4)
    assert _brute_cover(t4) == 4
    assert vertex_cover_size(t4) == 4


# -- T_k ---------------------------------------------------------------------


def test_make_tk_examples():
    assert make_tk(2) == SubcubicTree.path(5)
    t4 = make_tk(4)
    assert t4.node_count == 11
    # extra leaves hang from v4 and v6 (node ids 3 and 5)
    assert sorted(t4.adjacency[9] + t4.adjacency[10]) == [3, 5]
    t3 = make_tk(3)
    assert t3.node_count == 8 and t3.adjacency[7] == (3,)


@pytest.mark.parametrize("k", [1, 0, -3])
def test_make_tk_rejects_small_k(k):
    with pytest.raises(InvalidArgument):
        make_tk(k)


@pytest.mark.parametrize("k", range(2, 51))
def test_tk_size_and_alpha(k):
    t = make_tk(k)
    assert t.node_count == 3 * k - 1
    assert alpha(t) == 2 * k - 1 == independence_bound(3 * k - 1)
    desc = is_tk(t)
    assert desc is not None and desc.k == k


@pytest.mark.parametrize("k", range(2, 9))
def test_tk_mis_unique(k):
    sets = enumerate_mis(make_tk(k))
    assert sets == [tk_descriptor(k).expected_mis()]


def test_is_tk_negative_examples():
    assert is_tk(star3()) is None
    assert is_tk(SubcubicTree.path(6)) is None
    # no tree on 6 nodes is isomorphic to any T_k: the sizes 3k-1 skip 6
    tks = {canonical_form(make_tk(k)) for k in range(2, 5)}
    assert all(canonical_form(t) not in tks for t in enumerate_subcubic_trees(6))


def test_is_tk_prefers_smaller_spine():
    desc = is_tk(make_tk(3))
    assert desc.spine == tuple(range(7))
    assert desc.extra_leaves == {4: 7}


@pytest.mark.parametrize("n", range(1, 12))
def test_is_tk_agrees_with_isomorphism(n):
    targets = [make_tk(k) for k in range(2, 5) if 3 * k - 1 == n]
    for tree in enumerate_subcubic_trees(n):
        desc = is_tk(tree)
        iso = any(nx.is_isomorphic(to_nx(tree), to_nx(t)) for t in targets)
        assert (desc is not None) == iso
        if desc is not None:
            # the descriptor must be an explicit isomorphism onto make_tk(k)
            ref = tk_descriptor(desc.k)
            mapping = dict(zip(ref.spine, desc.spine))
            mapping.update({ref.extra_leaves[p]: desc.extra_leaves[p] for p in ref.extra_leaves})
            image = {tuple(sorted((mapping[u], mapping[v]))) for u, v in make_tk(desc.k).edges}
            assert image == set(tree.edges)


def test_is_tk_rejects_wrong_residue():
    rng = random.Random(5)
    for _ in range(100):
        tree = random_subcubic_tree(rng.randint(1, 60), rng)
        if tree.node_count % 3 != 2:
            assert is_tk(tree) is None


# -- classification ------------------------------------------------------------


def test_classify_examples():
    c = classify_extremal_tree(make_tk(3))
    assert c.kind is TreeKind.IS_TK and c.descriptor.k == 3
    spider = SubcubicTree.from_edges(6, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)])
    c = classify_extremal_tree(spider)
    assert c.kind is TreeKind.HAS_DOUBLE_LEAF_NEIGHBOR and c.node == 0
    assert classify_extremal_tree(SubcubicTree.path(2)).kind is TreeKind.SMALL
    assert classify_extremal_tree(SubcubicTree.path(1)).kind is TreeKind.SMALL


def test_classify_rejects_non_extremal():
    p4 = SubcubicTree.path(4)
    assert alpha(p4) == 2 and independence_bound(4) == 3
    with pytest.raises(InvalidArgument):
        classify_extremal_tree(p4)


def test_double_leaf_neighbors():
    assert double_leaf_neighbors(star3()) == [0]
    assert double_leaf_neighbors(make_tk(4)) == []


# -- MIS enumeration -------------------------------------------------------------


def test_enumerate_mis_examples():
    assert len(enumerate_mis(make_tk(3))) == 1
    assert enumerate_mis(SubcubicTree.path(2)) == [{0}, {1}]
    assert len(enumerate_mis(SubcubicTree.path(4))) == 3


def test_enumerate_mis_p4_against_subsets():
    assert sorted(map(sorted, brute_mis_sets(SubcubicTree.path(4)))) == [[0, 2], [0, 3], [1, 3]]


@pytest.mark.parametrize("tree", ALL_SMALL, ids=canonical_form)
def test_enumerate_mis_matches_subset_scan(tree):
    assert set(enumerate_mis(tree)) == set(brute_mis_sets(tree))


def test_enumerate_mis_cap():
    with pytest.raises(ResourceLimit):
        enumerate_mis(SubcubicTree.path(31))
    assert len(enumerate_mis(SubcubicTree.path(31), cap=40)) == 1


# -- enumeration helpers -----------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 13))
def test_subcubic_tree_counts(n):
    expected = sum(1 for t in nx.nonisomorphic_trees(n) if max(d for _, d in t.degree) <= 3) if n > 1 else 1
    trees = enumerate_subcubic_trees(n)
    assert len(trees) == expected
    assert len({canonical_form(t) for t in trees}) == expected


@pytest.mark.parametrize("tree", [t for t in ALL_SMALL if t.node_count <= 8], ids=canonical_form)
def test_iter_independent_sets_lexicographic(tree):
    n = tree.node_count
    for size in range(n + 1):
        expected = [
            c for c in itertools.combinations(range(n), size)
            if not any(u in c and v in c for u, v in tree.edges)
        ]
        assert list(iter_independent_sets(tree, size)) == expected
