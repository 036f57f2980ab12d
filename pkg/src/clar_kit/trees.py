"""Subcubic trees: independence numbers, leaf-containing MIS, the T_k family.

Node ids are ``0..node_count-1``.  ``T_k`` is the path ``v1..v(2k+1)`` with one
extra leaf hanging from each of ``v4, v6, ..., v(2k-2)``; it has ``3k-1``
nodes and a unique maximum independent set of size ``2k-1``.
"""

from __future__ import annotations

import enum
import itertools
import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping

from .config import MIS_NODE_CAP
from .errors import InvalidArgument, ResourceLimit

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SubcubicTree:
    """Unrooted tree with maximum degree 3."""

    node_count: int
    edges: frozenset[Edge]

    def __post_init__(self):
        n = self.node_count
        if not isinstance(n, int) or n < 1:
            raise InvalidArgument(f"node_count must be a positive integer, got {n!r}")
        normed = set()
        for u, v in self.edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidArgument(f"edge ({u}, {v}) references a node outside 0..{n - 1}")
            if u == v:
                raise InvalidArgument(f"self-loop at node {u}")
            normed.add(_norm(u, v))
        if len(normed) != n - 1:
            raise InvalidArgument(f"a tree on {n} nodes needs {n - 1} distinct edges, got {len(normed)}")
        object.__setattr__(self, "edges", frozenset(normed))
        if max(self.degrees, default=0) > 3:
            raise InvalidArgument("tree is not subcubic (a node has degree > 3)")
        if len(self._bfs_order(0)[0]) != n:
            raise InvalidArgument("edges do not form a connected tree")

    @classmethod
    def from_edges(cls, node_count: int, edges: Iterable[Iterable[int]]) -> SubcubicTree:
        return cls(node_count, frozenset(tuple(e) for e in edges))

    @classmethod
    def path(cls, n: int) -> SubcubicTree:
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.node_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @property
    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    @property
    def leaves(self) -> list[int]:
        return [v for v, a in enumerate(self.adjacency) if len(a) == 1]

    def _bfs_order(self, root: int) -> tuple[list[int], list[int]]:
        parent = [-1] * self.node_count
        seen = [False] * self.node_count
        seen[root] = True
        order = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in self.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    parent[w] = u
                    order.append(w)
                    queue.append(w)
        return order, parent

    def to_json(self) -> dict:
        return {"n": self.node_count, "edges": [list(e) for e in sorted(self.edges)]}

    @classmethod
    def from_json(cls, data: Mapping) -> SubcubicTree:
        try:
            return cls.from_edges(int(data["n"]), data["edges"])
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, InvalidArgument):
                raise
            raise InvalidArgument(f"malformed tree JSON: {exc}") from None


@dataclass(frozen=True)
class TkDescriptor:
    """An explicit isomorphism onto ``T_k``.

    ``spine[i]`` is the node playing ``v(i+1)``; ``extra_leaves`` maps the
    1-based spine positions 4, 6, ..., 2k-2 to the leaf hanging there.
    """

    k: int
    spine: tuple[int, ...]
    extra_leaves: Mapping[int, int] = field(hash=False)

    def node_at(self, position: int) -> int:
        return self.spine[position - 1]

    def expected_mis(self) -> frozenset[int]:
        odd = self.spine[0::2]
        return frozenset(odd) | frozenset(self.extra_leaves.values())


class TreeKind(enum.Enum):
    IS_TK = "is_tk"
    HAS_DOUBLE_LEAF_NEIGHBOR = "has_double_leaf_neighbor"
    NOT_EXTREMAL = "not_extremal"
    SMALL = "small"


@dataclass(frozen=True)
class TreeClassification:
    kind: TreeKind
    descriptor: TkDescriptor | None = None
    node: int | None = None


def independence_bound(n: int) -> int:
    """Upper bound ``floor((2n+1)/3)`` on alpha for subcubic trees on n nodes."""
    if n < 1:
        raise InvalidArgument(f"n must be >= 1, got {n}")
    return (2 * n + 1) // 3


def _mis_tables(tree: SubcubicTree, allowed=None):
    """Two-state DP rooted at the lowest allowed node of each component.

    Returns ``(order, parent, take, skip)`` where ``take[v]``/``skip[v]`` are
    the best subtree sizes with ``v`` in/out.  ``allowed`` restricts the DP to
    an induced sub-forest.
    """
    n = tree.node_count
    if allowed is None:
        allowed = [True] * n
    parent = [-1] * n
    seen = [not a for a in allowed]
    order: list[int] = []
    for root in range(n):
        if seen[root]:
            continue
        seen[root] = True
        stack = [root]
        while stack:
            u = stack.pop()
            order.append(u)
            for w in tree.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    parent[w] = u
                    stack.append(w)
    take = [0] * n
    skip = [0] * n
    for u in reversed(order):
        take[u] += 1
        p = parent[u]
        if p >= 0:
            take[p] += skip[u]
            skip[p] += max(take[u], skip[u])
    return order, parent, take, skip


def forest_alpha(tree: SubcubicTree, allowed) -> int:
    """Independence number of the sub-forest induced by ``allowed`` nodes."""
    order, parent, take, skip = _mis_tables(tree, allowed)
    return sum(max(take[u], skip[u]) for u in order if parent[u] == -1)


def alpha(tree: SubcubicTree) -> int:
    """Independence number, computed exactly by tree DP."""
    _, _, take, skip = _mis_tables(tree)
    return max(take[0], skip[0])


def vertex_cover_size(tree: SubcubicTree) -> int:
    """Minimum vertex cover size through the Gallai identity."""
    return tree.node_count - alpha(tree)


def leaf_containing_mis(tree: SubcubicTree) -> frozenset[int]:
    """A maximum independent set that contains every leaf.

    A DP solution (ties broken toward leaves) is repaired by the exchange
    rules: a missing leaf either replaces its neighbour or is simply added.
    The two-node tree is rejected because its two leaves are adjacent.
    """
    if tree.node_count < 3:
        raise InvalidArgument("leaf_containing_mis needs a tree with at least 3 nodes")
    order, parent, take, skip = _mis_tables(tree)
    degree = tree.degrees
    chosen: set[int] = set()
    for u in order:
        p = parent[u]
        if p >= 0 and p in chosen:
            continue
        if take[u] > skip[u] or (take[u] == skip[u] and degree[u] == 1):
            chosen.add(u)
    for _ in range(tree.node_count):
        missing = [u for u in tree.leaves if u not in chosen]
        if not missing:
            break
        u = missing[0]
        (v,) = tree.adjacency[u]
        chosen.discard(v)
        chosen.add(u)
    return frozenset(chosen)


def make_tk(k: int) -> SubcubicTree:
    """The tree ``T_k``; spine ``v_i`` is node ``i-1``, extra leaves follow."""
    if k < 2:
        raise InvalidArgument(f"T_k needs k >= 2, got {k}")
    spine_len = 2 * k + 1
    edges = [(i, i + 1) for i in range(spine_len - 1)]
    leaf = spine_len
    for pos in range(4, 2 * k - 1, 2):
        edges.append((pos - 1, leaf))
        leaf += 1
    return SubcubicTree.from_edges(3 * k - 1, edges)


def tk_descriptor(k: int) -> TkDescriptor:
    """Descriptor of ``make_tk(k)`` under its own labelling."""
    spine = tuple(range(2 * k + 1))
    extra = {pos: 2 * k + 1 + i for i, pos in enumerate(range(4, 2 * k - 1, 2))}
    return TkDescriptor(k, spine, extra)


def _tk_from_endpoint(tree: SubcubicTree, start: int, k: int) -> TkDescriptor | None:
    adj = tree.adjacency
    spine = [start]
    prev, cur = -1, start
    while len(spine) < 2 * k + 1:
        nxt = [w for w in adj[cur] if w != prev and len(adj[w]) > 1]
        if len(spine) == 2 * k:
            nxt = [w for w in adj[cur] if w != prev]
        if len(nxt) != 1:
            return None
        prev, cur = cur, nxt[0]
        spine.append(cur)
    extra = {}
    for pos in range(4, 2 * k - 1, 2):
        hanging = [w for w in adj[spine[pos - 1]] if len(adj[w]) == 1]
        if len(hanging) != 1:
            return None
        extra[pos] = hanging[0]
    desc = TkDescriptor(k, tuple(spine), extra)
    expected = {_norm(spine[i], spine[i + 1]) for i in range(2 * k)}
    expected |= {_norm(spine[pos - 1], leaf) for pos, leaf in extra.items()}
    if expected != tree.edges:
        return None
    return desc


def is_tk(tree: SubcubicTree) -> TkDescriptor | None:
    """Recognize ``T_k``; ties (spine reversal) go to the smaller spine."""
    n = tree.node_count
    if n < 5 or n % 3 != 2:
        return None
    k = (n + 1) // 3
    adj = tree.adjacency
    found = []
    for u in tree.leaves:
        if len(adj[adj[u][0]]) != 2:
            continue
        desc = _tk_from_endpoint(tree, u, k)
        if desc is not None:
            found.append(desc)
    if not found:
        return None
    return min(found, key=lambda d: d.spine)


def double_leaf_neighbors(tree: SubcubicTree) -> list[int]:
    """Nodes adjacent to at least two leaves, in increasing order."""
    deg = tree.degrees
    return [u for u, a in enumerate(tree.adjacency) if sum(deg[w] == 1 for w in a) >= 2]


def classify_extremal_tree(tree: SubcubicTree) -> TreeClassification:
    bound = independence_bound(tree.node_count)
    a = alpha(tree)
    if a != bound:
        raise InvalidArgument(f"tree is not extremal: alpha={a} < bound={bound}")
    if tree.node_count < 3:
        return TreeClassification(TreeKind.SMALL)
    desc = is_tk(tree)
    if desc is not None:
        return TreeClassification(TreeKind.IS_TK, descriptor=desc)
    doubles = double_leaf_neighbors(tree)
    if doubles:
        return TreeClassification(TreeKind.HAS_DOUBLE_LEAF_NEIGHBOR, node=doubles[0])
    return TreeClassification(TreeKind.NOT_EXTREMAL)


def enumerate_mis(tree: SubcubicTree, cap: int = MIS_NODE_CAP) -> list[frozenset[int]]:
    """Every maximum independent set, sorted by their sorted member tuples."""
    if tree.node_count > cap:
        raise ResourceLimit(f"enumerate_mis is capped at {cap} nodes, tree has {tree.node_count}")
    order, parent, take, skip = _mis_tables(tree)
    children: list[list[int]] = [[] for _ in range(tree.node_count)]
    for u in order:
        if parent[u] >= 0:
            children[parent[u]].append(u)
    with_u: list[list[frozenset[int]]] = [[] for _ in range(tree.node_count)]
    without_u: list[list[frozenset[int]]] = [[] for _ in range(tree.node_count)]
    for u in reversed(order):
        parts_in = [without_u[c] for c in children[u]]
        parts_out = []
        for c in children[u]:
            best = max(take[c], skip[c])
            opts = []
            if take[c] == best:
                opts += with_u[c]
            if skip[c] == best:
                opts += without_u[c]
            parts_out.append(opts)
        with_u[u] = [frozenset({u}).union(*combo) for combo in itertools.product(*parts_in)]
        without_u[u] = [frozenset().union(*combo) for combo in itertools.product(*parts_out)]
    root = order[0]
    best = max(take[root], skip[root])
    result = []
    if take[root] == best:
        result += with_u[root]
    if skip[root] == best:
        result += without_u[root]
    return sorted(result, key=lambda s: sorted(s))


# -- isomorphism and enumeration -------------------------------------------


def tree_centers(tree: SubcubicTree) -> list[int]:
    deg = tree.degrees
    remaining = tree.node_count
    layer = [u for u in range(tree.node_count) if deg[u] <= 1]
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for u in layer:
            for w in tree.adjacency[u]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def _ahu(tree: SubcubicTree, root: int) -> str:
    order, parent = tree._bfs_order(root)
    code: dict[int, str] = {}
    for u in reversed(order):
        kids = sorted(code[w] for w in tree.adjacency[u] if w != parent[u])
        code[u] = "(" + "".join(kids) + ")"
    return code[root]


def canonical_form(tree: SubcubicTree) -> str:
    """AHU encoding rooted at the tree's center(s); equal iff isomorphic."""
    return min(_ahu(tree, c) for c in tree_centers(tree))


def enumerate_subcubic_trees(n: int) -> list[SubcubicTree]:
    """All subcubic trees on ``n`` nodes up to isomorphism (leaf extension)."""
    if n < 1:
        raise InvalidArgument("n must be >= 1")
    level = {canonical_form(SubcubicTree(1, frozenset())): SubcubicTree(1, frozenset())}
    for size in range(2, n + 1):
        grown: dict[str, SubcubicTree] = {}
        for tree in level.values():
            for u, d in enumerate(tree.degrees):
                if d < 3:
                    t = SubcubicTree(size, tree.edges | {(u, size - 1)})
                    grown.setdefault(canonical_form(t), t)
        level = grown
    return [level[key] for key in sorted(level)]


def random_subcubic_tree(n: int, rng: random.Random) -> SubcubicTree:
    """Grow a random subcubic tree by attaching each new node to an open slot."""
    edges = []
    open_nodes = [0]
    degree = [0] * n
    for v in range(1, n):
        u = rng.choice(open_nodes)
        edges.append((u, v))
        degree[u] += 1
        degree[v] = 1
        if degree[u] == 3:
            open_nodes.remove(u)
        open_nodes.append(v)
    return SubcubicTree.from_edges(n, edges)


def iter_independent_sets(tree: SubcubicTree, size: int) -> Iterator[tuple[int, ...]]:
    """Independent sets of exactly ``size`` nodes in lexicographic order.

    Branches are pruned with the DP value of the sub-forest still available,
    so only prefixes that can be completed are ever extended.
    """
    n = tree.node_count
    if not 0 <= size <= n:
        return
    adj = tree.adjacency
    allowed = [True] * n
    chosen: list[int] = []
    undo: list[list[int]] = []

    def completable(start: int) -> bool:
        window = [allowed[v] and v >= start for v in range(n)]
        return forest_alpha(tree, window) >= size - len(chosen)

    def choose(v: int) -> None:
        blocked = [w for w in adj[v] if allowed[w]]
        allowed[v] = False
        for w in blocked:
            allowed[w] = False
        chosen.append(v)
        undo.append(blocked)

    def unchoose() -> None:
        v = chosen.pop()
        allowed[v] = True
        for w in undo.pop():
            allowed[w] = True

    if size == 0:
        yield ()
        return
    if not completable(0):
        return
    # explicit stack of next-candidate cursors, one per depth (no recursion limit)
    cursors = [0]
    while cursors:
        v = cursors[-1]
        while v < n and not allowed[v]:
            v += 1
        if v >= n:
            cursors.pop()
            if chosen:
                unchoose()
            continue
        cursors[-1] = v + 1
        choose(v)
        if len(chosen) == size:
            yield tuple(chosen)
            unchoose()
        elif completable(v + 1):
            cursors.append(v + 1)
        else:
            unchoose()
