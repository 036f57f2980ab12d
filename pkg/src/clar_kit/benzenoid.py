"""Catacondensed benzenoid graphs built from attachment-coded dualist trees.

Side convention: the sides of every hexagon are numbered 0..5
counterclockwise, side ``j`` joining corners ``j`` and ``j+1``.  A non-root
hexagon's side 0 is the side it shares with its parent; the root's numbering
is the reference frame.  Gluing a child on parent side ``s`` identifies
parent corner ``s`` with child corner 1 and parent corner ``s+1`` with child
corner 0 (two faces traverse a shared edge in opposite directions).

Sides used by one hexagon must be pairwise non-adjacent: two neighbouring
sides share a corner, which would then carry degree 4.
"""

from __future__ import annotations

import enum
import itertools
import random
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple

import numpy as np

from .errors import InvalidArgument, InvalidSpec, NotCatacondensed
from .trees import SubcubicTree

FORMAT = "clar-kit/1"

Edge = tuple[int, int]
# faces[h][side] = (neighbour hexagon, neighbour's side facing h)
Faces = dict[int, dict[int, tuple[int, int]]]

# axial lattice steps, counterclockwise starting east
AXIAL_DIRS = ((1, 0), (1, -1), (0, -1), (-1, 0), (-1, 1), (0, 1))


class Attachment(NamedTuple):
    parent: int
    child: int
    side: int


def _check_format(data: Mapping) -> None:
    fmt = data.get("format", FORMAT)
    if fmt != FORMAT:
        raise InvalidSpec(f"unsupported format {fmt!r}, expected {FORMAT!r}")


@dataclass(frozen=True)
class BenzenoidSpec:
    """Rooted dualist tree (root 0) with the parent side of every attachment."""

    hexagon_count: int
    attachments: tuple[Attachment, ...] = ()

    def __post_init__(self):
        n = self.hexagon_count
        if not isinstance(n, int) or n < 1:
            raise InvalidSpec(f"hexagon_count must be a positive integer, got {n!r}")
        atts = tuple(sorted(Attachment(*map(int, a)) for a in self.attachments))
        object.__setattr__(self, "attachments", atts)
        if len(atts) != n - 1:
            raise InvalidSpec(f"{n} hexagons need {n - 1} attachments, got {len(atts)}")
        children = [a.child for a in atts]
        if sorted(children) != list(range(1, n)):
            raise InvalidSpec("every hexagon except the root 0 must be a child exactly once")
        used: list[list[int]] = [[] for _ in range(n)]
        for h in range(1, n):
            used[h].append(0)
        for p, c, s in atts:
            if not 0 <= p < n:
                raise InvalidSpec(f"parent {p} is not a hexagon id")
            if not 0 <= s <= 5:
                raise InvalidSpec(f"side {s} outside 0..5")
            used[p].append(s)
        for h, sides in enumerate(used):
            if len(set(sides)) != len(sides):
                raise InvalidSpec(f"hexagon {h} uses a side twice: {sorted(sides)}")
            if len(sides) > 3:
                raise InvalidSpec(f"hexagon {h} uses {len(sides)} sides (max 3)")
            for a, b in itertools.combinations(sides, 2):
                if (a - b) % 6 in (1, 5):
                    raise InvalidSpec(
                        f"hexagon {h} uses adjacent sides {a} and {b}; their common corner would have degree 4"
                    )
        kids: list[list[int]] = [[] for _ in range(n)]
        for p, c, _ in atts:
            kids[p].append(c)
        seen = {0}
        stack = [0]
        while stack:
            for c in kids[stack.pop()]:
                if c not in seen:
                    seen.add(c)
                    stack.append(c)
        if len(seen) != n:
            raise InvalidSpec("attachments do not form a tree rooted at hexagon 0")

    @classmethod
    def single(cls) -> BenzenoidSpec:
        return cls(1)

    @classmethod
    def chain(cls, n: int, sides: Iterable[int] | None = None) -> BenzenoidSpec:
        """Unbranched chain; ``sides[i]`` is where hexagon i+2 sits on hexagon i+1.

        The default is the straight (all-linear) chain.
        """
        sides = [3] * max(n - 2, 0) if sides is None else list(sides)
        atts = [Attachment(0, 1, 0)] if n > 1 else []
        atts += [Attachment(i, i + 1, s) for i, s in enumerate(sides, start=1)]
        return cls(n, tuple(atts))

    @property
    def tree(self) -> SubcubicTree:
        return SubcubicTree.from_edges(self.hexagon_count, [(p, c) for p, c, _ in self.attachments])

    @property
    def faces(self) -> Faces:
        faces: Faces = {h: {} for h in range(self.hexagon_count)}
        for p, c, s in self.attachments:
            faces[p][s] = (c, 0)
            faces[c][0] = (p, s)
        return faces

    def to_json(self) -> dict:
        return {
            "format": FORMAT,
            "hexagons": self.hexagon_count,
            "attachments": [{"parent": p, "child": c, "side": s} for p, c, s in self.attachments],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> BenzenoidSpec:
        _check_format(data)
        try:
            atts = tuple(Attachment(int(a["parent"]), int(a["child"]), int(a["side"])) for a in data.get("attachments", []))
            return cls(int(data["hexagons"]), atts)
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, InvalidSpec):
                raise
            raise InvalidSpec(f"malformed spec JSON: {exc}") from None


def free_sides(faces: Faces, h: int) -> list[int]:
    """Sides of ``h`` where a new hexagon can be glued (unused, neighbours unused)."""
    used = faces[h]
    return [s for s in range(6) if s not in used and (s + 1) % 6 not in used and (s - 1) % 6 not in used]


def reframe(faces: Faces, root: int, relabel: bool = True) -> tuple[BenzenoidSpec, dict[int, int], dict[int, int]]:
    """Re-root a face map into a spec.

    With ``relabel`` hexagons are renumbered in BFS order from ``root``;
    otherwise ids are kept (ids must then be ``0..n-1`` with ``root == 0``).
    Returns the spec, the old-to-new id map, and for each old hexagon the old
    side index that became its side 0.
    """
    shift = {root: 0}
    new_id = {root: 0}
    order = deque([root])
    atts = []
    while order:
        h = order.popleft()
        for s in sorted(faces[h], key=lambda s: (s - shift[h]) % 6):
            nb, nb_side = faces[h][s]
            if nb in shift:
                continue
            shift[nb] = nb_side
            new_id[nb] = len(new_id) if relabel else nb
            atts.append((h, nb, (s - shift[h]) % 6))
            order.append(nb)
    if len(shift) != len(faces):
        raise InvalidSpec("face map is not connected")
    if not relabel and sorted(new_id.values()) != list(range(len(faces))):
        raise InvalidSpec("keeping ids needs hexagon ids 0..n-1 rooted at 0")
    spec = BenzenoidSpec(len(faces), tuple(Attachment(new_id[p], new_id[c], s) for p, c, s in atts))
    return spec, new_id, shift


def spec_from_faces(faces: Faces, root: int, relabel: bool = True) -> tuple[BenzenoidSpec, dict[int, int]]:
    spec, new_id, _ = reframe(faces, root, relabel)
    return spec, new_id


class HexagonKind(enum.Enum):
    TERMINAL = "terminal"
    LINEAR = "linear"
    ANGULAR = "angular"
    BRANCHING = "branching"


@dataclass(frozen=True)
class BenzenoidGraph:
    """Vertices ``0..vertex_count-1``, edges, and hexagons as ordered 6-cycles."""

    vertex_count: int
    edges: tuple[Edge, ...]
    hexagons: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = self.vertex_count
        edges = tuple(sorted({(min(u, v), max(u, v)) for u, v in self.edges}))
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "hexagons", tuple(tuple(int(v) for v in h) for h in self.hexagons))
        for u, v in edges:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise InvalidArgument(f"bad edge ({u}, {v})")
        edge_set = set(edges)
        for i, hexagon in enumerate(self.hexagons):
            if len(hexagon) != 6 or len(set(hexagon)) != 6:
                raise InvalidArgument(f"hexagon {i} is not six distinct vertices")
            for a, b in self._cycle_edges(hexagon):
                if (a, b) not in edge_set:
                    raise InvalidArgument(f"hexagon {i} uses non-edge ({a}, {b})")
        if any(d not in (2, 3) for d in self.degrees):
            raise InvalidArgument("vertex degrees must be 2 or 3")
        edge_count: dict[Edge, int] = {}
        for hexagon in self.hexagons:
            for e in self._cycle_edges(hexagon):
                edge_count[e] = edge_count.get(e, 0) + 1
        if any(c > 2 for c in edge_count.values()):
            raise InvalidArgument("an edge lies in three hexagons")
        vsets = [set(h) for h in self.hexagons]
        for i, j in itertools.combinations(range(len(vsets)), 2):
            common = vsets[i] & vsets[j]
            if common and not (len(common) == 2 and tuple(sorted(common)) in edge_set):
                raise InvalidArgument(f"hexagons {i} and {j} meet in something other than one edge")
        if self.bipartition is None:
            raise InvalidArgument("graph is not bipartite")

    @staticmethod
    def _cycle_edges(hexagon) -> list[Edge]:
        return [tuple(sorted((hexagon[i], hexagon[(i + 1) % 6]))) for i in range(6)]

    def hexagon_edges(self, h: int) -> list[Edge]:
        """Edges of hexagon ``h`` in corner order (corner i to corner i+1)."""
        return self._cycle_edges(self.hexagons[h])

    @property
    def hexagon_count(self) -> int:
        return len(self.hexagons)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @property
    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    @cached_property
    def bipartition(self) -> tuple[int, ...] | None:
        color = [-1] * self.vertex_count
        for s in range(self.vertex_count):
            if color[s] != -1:
                continue
            color[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adjacency[u]:
                    if color[w] == -1:
                        color[w] = 1 - color[u]
                        queue.append(w)
                    elif color[w] == color[u]:
                        return None
        return tuple(color)

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        indptr = np.zeros(self.vertex_count + 1, np.int64)
        indptr[1:] = np.cumsum([len(a) for a in self.adjacency])
        indices = np.fromiter(itertools.chain.from_iterable(self.adjacency), np.int64, count=int(indptr[-1]))
        return indptr, indices

    @cached_property
    def hexagon_adjacency(self) -> frozenset[tuple[int, int]]:
        owner: dict[Edge, list[int]] = {}
        for i in range(self.hexagon_count):
            for e in self.hexagon_edges(i):
                owner.setdefault(e, []).append(i)
        return frozenset(tuple(sorted(hs)) for hs in owner.values() if len(hs) == 2)

    def hexagon_neighbors(self, h: int) -> list[int]:
        return sorted(j if i == h else i for i, j in self.hexagon_adjacency if h in (i, j))

    def to_json(self) -> dict:
        return {
            "format": FORMAT,
            "vertices": list(range(self.vertex_count)),
            "edges": [list(e) for e in self.edges],
            "hexagons": [list(h) for h in self.hexagons],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> BenzenoidGraph:
        _check_format(data)
        try:
            vertices = list(data["vertices"])
            if sorted(vertices) != list(range(len(vertices))):
                raise InvalidArgument("vertex ids must be 0..V-1")
            return cls(len(vertices), tuple(tuple(e) for e in data["edges"]), tuple(tuple(h) for h in data["hexagons"]))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, InvalidArgument):
                raise
            raise InvalidArgument(f"malformed graph JSON: {exc}") from None


def build_benzenoid(spec: BenzenoidSpec) -> BenzenoidGraph:
    """Glue hexagons along the spec's tree; hexagon ``i`` of the graph is spec hexagon ``i``."""
    n = spec.hexagon_count
    parent = list(range(6 * n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for p, c, s in spec.attachments:
        union(6 * p + s, 6 * c + 1)
        union(6 * p + (s + 1) % 6, 6 * c)

    vertex_of: dict[int, int] = {}
    hexagons = []
    for h in range(n):
        cycle = []
        for corner in range(6):
            root = find(6 * h + corner)
            if root not in vertex_of:
                vertex_of[root] = len(vertex_of)
            cycle.append(vertex_of[root])
        hexagons.append(tuple(cycle))
    edges = {tuple(sorted((h[i], h[(i + 1) % 6]))) for h in hexagons for i in range(6)}
    return BenzenoidGraph(len(vertex_of), tuple(edges), tuple(hexagons))


def is_catacondensed(graph: BenzenoidGraph) -> bool:
    """No vertex lies in three hexagons."""
    count = [0] * graph.vertex_count
    for hexagon in graph.hexagons:
        for v in hexagon:
            count[v] += 1
    return max(count, default=0) < 3


def dualist_tree(graph: BenzenoidGraph) -> SubcubicTree:
    if not is_catacondensed(graph):
        raise NotCatacondensed("graph has an internal vertex")
    try:
        return SubcubicTree(graph.hexagon_count, graph.hexagon_adjacency)
    except InvalidArgument:
        raise NotCatacondensed("hexagon adjacency is not a tree") from None


def hexagon_kind(graph: BenzenoidGraph, h: int) -> HexagonKind:
    nbs = graph.hexagon_neighbors(h)
    if len(nbs) <= 1:
        return HexagonKind.TERMINAL
    if len(nbs) == 3:
        return HexagonKind.BRANCHING
    deg = graph.degrees
    cycle = graph.hexagons[h]
    free = [i for i, v in enumerate(cycle) if deg[v] == 2]
    if len(free) == 2 and (free[1] - free[0]) % 6 in (1, 5):
        return HexagonKind.ANGULAR
    return HexagonKind.LINEAR


def free_edges(graph: BenzenoidGraph, h: int) -> list[Edge]:
    """Edges of hexagon ``h`` whose two endpoints both have degree 2."""
    deg = graph.degrees
    return [e for e in graph.hexagon_edges(h) if deg[e[0]] == 2 and deg[e[1]] == 2]


def graph_faces(graph: BenzenoidGraph) -> Faces:
    """Face map of a catacondensed graph, orienting each hexagon consistently.

    The root hexagon 0 keeps its stored corner order; every other hexagon is
    read so that it traverses each shared edge opposite to its neighbour.
    Returned sides index into the re-oriented corner lists.
    """
    dualist_tree(graph)
    cycles: dict[int, list[int]] = {0: list(graph.hexagons[0])}
    faces: Faces = {h: {} for h in range(graph.hexagon_count)}
    queue = deque([0])
    while queue:
        h = queue.popleft()
        cyc = cycles[h]
        for nb in graph.hexagon_neighbors(h):
            for s in range(6):
                a, b = cyc[s], cyc[(s + 1) % 6]
                if a in graph.hexagons[nb] and b in graph.hexagons[nb]:
                    break
            if nb not in cycles:
                raw = list(graph.hexagons[nb])
                i = raw.index(b)
                fwd = raw[i:] + raw[:i]
                if fwd[1] != a:
                    fwd = [fwd[0]] + fwd[1:][::-1]
                cycles[nb] = fwd
                queue.append(nb)
            other = cycles[nb]
            nb_side = next(t for t in range(6) if {other[t], other[(t + 1) % 6]} == {a, b})
            faces[h][s] = (nb, nb_side)
    return faces


def spec_from_graph(graph: BenzenoidGraph) -> BenzenoidSpec:
    """Spec with the graph's hexagon ids, rooted at hexagon 0."""
    spec, _ = spec_from_faces(graph_faces(graph), 0, relabel=False)
    return spec


# -- canonical form ---------------------------------------------------------


def _code(faces: Faces, h: int, entry: int, direction: int, first: int) -> list[int]:
    out: list[int] = []
    for i in range(first, 6):
        side = (entry + direction * i) % 6
        if side in faces[h]:
            nb, nb_side = faces[h][side]
            out.append(i)
            out.extend(_code(faces, nb, nb_side, direction, 1))
            out.append(9)
    return out


def _best_frame(faces: Faces) -> tuple[tuple[int, ...], int, int, int]:
    best = None
    for root in faces:
        for ref in range(6):
            for direction in (1, -1):
                code = tuple(_code(faces, root, ref, direction, 0))
                if best is None or code < best[0]:
                    best = (code, root, ref, direction)
    return best


def canonical_code(spec_or_faces: BenzenoidSpec | Faces) -> tuple[int, ...]:
    """Minimal traversal code over all roots, root frames and both orientations.

    Mirror images and re-rootings of the same benzenoid get the same code.
    """
    faces = spec_or_faces.faces if isinstance(spec_or_faces, BenzenoidSpec) else spec_or_faces
    return _best_frame(faces)[0]


def canonical_spec(spec_or_faces: BenzenoidSpec | Faces) -> BenzenoidSpec:
    faces = spec_or_faces.faces if isinstance(spec_or_faces, BenzenoidSpec) else spec_or_faces
    _, root, ref, direction = _best_frame(faces)
    atts: list[Attachment] = []
    ids = {root: 0}

    def walk(h: int, entry: int, first: int) -> None:
        for i in range(first, 6):
            side = (entry + direction * i) % 6
            if side in faces[h]:
                nb, nb_side = faces[h][side]
                ids[nb] = len(ids)
                atts.append(Attachment(ids[h], ids[nb], i))
                walk(nb, nb_side, 1)

    walk(root, ref, 0)
    return BenzenoidSpec(len(faces), tuple(atts))


# -- generators -------------------------------------------------------------


def embeddings_of_tree(tree: SubcubicTree) -> list[BenzenoidSpec]:
    """Every catacondensed geometry with the given dualist tree, deduplicated."""
    order, parent = tree._bfs_order(0)
    relabel = {old: new for new, old in enumerate(order)}
    children = {u: [w for w in tree.adjacency[u] if w != parent[u]] for u in order}
    slots = []
    for u in order:
        pool = range(6) if u == 0 else (2, 3, 4)
        options = [
            combo
            for combo in itertools.permutations(pool, len(children[u]))
            if all((a - b) % 6 not in (1, 5) for a, b in itertools.combinations(combo, 2))
        ]
        slots.append(options)
    seen: dict[tuple[int, ...], BenzenoidSpec] = {}
    for choice in itertools.product(*slots):
        atts = [
            Attachment(relabel[u], relabel[c], s)
            for u, combo in zip(order, choice)
            for c, s in zip(children[u], combo)
        ]
        spec = BenzenoidSpec(tree.node_count, tuple(atts))
        seen.setdefault(canonical_code(spec), spec)
    return [seen[k] for k in sorted(seen)]


def random_spec(n: int, rng: random.Random) -> BenzenoidSpec:
    """Grow a spec by gluing each new hexagon at a uniformly chosen free side."""
    if n < 1:
        raise InvalidArgument("n must be >= 1")
    faces: Faces = {0: {}}
    atts = []
    for c in range(1, n):
        slots = [(h, s) for h in sorted(faces) for s in free_sides(faces, h)]
        p, s = rng.choice(slots)
        faces[p][s] = (c, 0)
        faces[c] = {0: (p, s)}
        atts.append(Attachment(p, c, s))
    return BenzenoidSpec(n, tuple(atts))


def lattice_centers(spec: BenzenoidSpec) -> tuple[dict[int, tuple[int, int]], bool]:
    """Advisory axial centres of each hexagon; the flag reports overlaps."""
    centers = {0: (0, 0)}
    turn = {0: 0}
    kids: dict[int, list[Attachment]] = {}
    for a in spec.attachments:
        kids.setdefault(a.parent, []).append(a)
    queue = deque([0])
    while queue:
        p = queue.popleft()
        for _, c, s in kids.get(p, []):
            d = (turn[p] + s) % 6
            dq, dr = AXIAL_DIRS[d]
            centers[c] = (centers[p][0] + dq, centers[p][1] + dr)
            turn[c] = (d + 3) % 6
            queue.append(c)
    overlaps = len(set(centers.values())) != len(centers)
    return centers, overlaps
