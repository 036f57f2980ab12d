"""Extremal catacondensed benzenoids: family B, the spectrum, exhaustive checks.

Family B is generated from three bases (one hexagon, two hexagons, and the
angular three-chain B1), the T_k-shaped graphs whose hexagons at spine
positions 2 and 2k are angular, and the gluing step that attaches a copy of
B1 by identifying the free edge of its middle hexagon with a free edge of a
smaller member.  Gluing creates a branching hexagon whose other two
neighbours are terminal, so membership is decided by peeling such triples.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Union

from .benzenoid import (
    Attachment,
    BenzenoidGraph,
    BenzenoidSpec,
    HexagonKind,
    build_benzenoid,
    canonical_code,
    canonical_spec,
    dualist_tree,
    embeddings_of_tree,
    free_sides,
    graph_faces,
    hexagon_kind,
    reframe,
    spec_from_graph,
)
from .clar import clar_number
from .config import FAMILY_B_CAP, caps
from .errors import InvalidArgument, ResourceLimit
from .trees import TkDescriptor, double_leaf_neighbors, independence_bound, is_tk, make_tk

B1_SPEC = BenzenoidSpec.chain(3, [2])


@dataclass(frozen=True)
class BaseSmall:
    """One hexagon, two hexagons, or B1."""

    hexagons: int

    def to_json(self) -> dict:
        return {"case": "base_small", "hexagons": self.hexagons}


@dataclass(frozen=True)
class BaseTk:
    descriptor: TkDescriptor
    angular: tuple[int, int]

    def to_json(self) -> dict:
        return {
            "case": "base_tk",
            "k": self.descriptor.k,
            "spine": list(self.descriptor.spine),
            "angular": list(self.angular),
        }


@dataclass(frozen=True)
class Glued:
    """B1 glued onto ``parent_spec`` along ``edge`` (vertex ids of the parent graph).

    ``added`` are the hexagon ids of the B1 copy in the glued graph: the
    branching hexagon first, then its two terminal neighbours.
    """

    parent_spec: BenzenoidSpec
    parent: FamilyBWitness
    edge: tuple[int, int]
    added: tuple[int, int, int]

    def to_json(self) -> dict:
        return {
            "case": "glued",
            "added": list(self.added),
            "edge": list(self.edge),
            "parent_spec": self.parent_spec.to_json(),
            "parent": self.parent.to_json(),
        }


FamilyBWitness = Union[BaseSmall, BaseTk, Glued]


def tk_extremal_check(graph: BenzenoidGraph) -> tuple[TkDescriptor, tuple[int, int]] | None:
    """T_k-shaped graph whose hexagons at spine positions 2 and 2k are angular."""
    desc = is_tk(dualist_tree(graph))
    if desc is None:
        return None
    pair = (desc.node_at(2), desc.node_at(2 * desc.k))
    if all(hexagon_kind(graph, h) is HexagonKind.ANGULAR for h in pair):
        return desc, pair
    return None


def _peel_options(graph: BenzenoidGraph, faces) -> list[tuple[int, int, int, int]]:
    """(h1, h2, h3, h4): branching h1 with terminal h2, h3 and third neighbour h4."""
    tree = dualist_tree(graph)
    deg = tree.degrees
    options = []
    for h1 in double_leaf_neighbors(tree):
        if deg[h1] != 3:
            continue
        side_of = {nb: s for s, (nb, _) in faces[h1].items()}
        nbs = tree.adjacency[h1]
        for h2, h3 in itertools.combinations([w for w in nbs if deg[w] == 1], 2):
            (h4,) = [w for w in nbs if w not in (h2, h3)]
            if all((side_of[x] - side_of[h4]) % 6 in (2, 4) for x in (h2, h3)):
                options.append((h1, h2, h3, h4))
    return options


def _derive(graph: BenzenoidGraph, failed: set) -> FamilyBWitness | None:
    n = graph.hexagon_count
    if n <= 2:
        return BaseSmall(n)
    faces = graph_faces(graph)
    key = canonical_code(faces)
    if key in failed:
        return None
    tree = dualist_tree(graph)
    witness: FamilyBWitness | None = None
    if not double_leaf_neighbors(tree):
        hit = tk_extremal_check(graph)
        if hit is not None:
            witness = BaseTk(*hit)
    elif n == 3:
        (mid,) = [h for h in range(3) if tree.degrees[h] == 2]
        if hexagon_kind(graph, mid) is HexagonKind.ANGULAR:
            witness = BaseSmall(3)
    else:
        for h1, h2, h3, h4 in _peel_options(graph, faces):
            side4 = next(s for s, (nb, _) in faces[h4].items() if nb == h1)
            reduced = {
                h: {s: nb for s, nb in sides.items() if nb[0] not in (h1, h2, h3)}
                for h, sides in faces.items()
                if h not in (h1, h2, h3)
            }
            sub_spec, new_id, shift = reframe(reduced, min(reduced))
            sub_graph = build_benzenoid(sub_spec)
            corner = (side4 - shift[h4]) % 6
            cycle = sub_graph.hexagons[new_id[h4]]
            edge = tuple(sorted((cycle[corner], cycle[(corner + 1) % 6])))
            parent = _derive(sub_graph, failed)
            if parent is not None:
                witness = Glued(sub_spec, parent, edge, (h1, h2, h3))
                break
    if witness is None:
        failed.add(key)
    return witness


def angular_tk_spec(k: int) -> BenzenoidSpec:
    """A T_k-shaped benzenoid whose hexagons at spine positions 2 and 2k are angular.

    Spine hexagons get ids 0..2k, the extra leaves 2k+1 onward (as in make_tk).
    Branching hexagons carry the spine on side 2 and the leaf on side 4; the
    other interior spine hexagons are linear.
    """
    if k < 2:
        raise InvalidArgument(f"k must be >= 2, got {k}")
    atts = [Attachment(0, 1, 0), Attachment(1, 2, 2)]
    leaf = 2 * k + 1
    for pos in range(3, 2 * k + 1):  # pos is the 1-based spine position of the parent
        parent = pos - 1
        if pos == 2 * k:
            atts.append(Attachment(parent, parent + 1, 2))
        elif pos % 2 == 0:
            atts.append(Attachment(parent, parent + 1, 2))
            atts.append(Attachment(parent, leaf, 4))
            leaf += 1
        else:
            atts.append(Attachment(parent, parent + 1, 3))
    return BenzenoidSpec(3 * k - 1, tuple(atts))


def is_in_family_b(graph: BenzenoidGraph) -> FamilyBWitness | None:
    """Derivation of ``graph`` inside family B, or None.

    Every peelable triple is tried (with memoised failures), so the answer is
    exact with respect to the inductive definition.
    """
    dualist_tree(graph)
    return _derive(graph, set())


def _glue_b1(spec: BenzenoidSpec, h: int, side: int) -> BenzenoidSpec:
    n = spec.hexagon_count
    atts = spec.attachments + (
        Attachment(h, n, side),
        Attachment(n, n + 1, 2),
        Attachment(n, n + 2, 4),
    )
    return BenzenoidSpec(n + 3, atts)


@lru_cache(maxsize=None)
def _family_b_level(n: int) -> tuple[BenzenoidSpec, ...]:
    found: dict[tuple[int, ...], BenzenoidSpec] = {}

    def add(spec: BenzenoidSpec) -> None:
        found.setdefault(canonical_code(spec), spec)

    if n == 1:
        add(BenzenoidSpec.single())
    elif n == 2:
        add(BenzenoidSpec.chain(2))
    elif n == 3:
        add(B1_SPEC)
    if n >= 5 and (n + 1) % 3 == 0:
        for spec in embeddings_of_tree(make_tk((n + 1) // 3)):
            if tk_extremal_check(build_benzenoid(spec)) is not None:
                add(spec)
    if n >= 4:
        for parent in _family_b_level(n - 3):
            faces = parent.faces
            for h in range(parent.hexagon_count):
                for side in free_sides(faces, h):
                    add(_glue_b1(parent, h, side))
    return tuple(canonical_spec(found[key]) for key in sorted(found))


def gen_family_b(n: int, cap: int = FAMILY_B_CAP) -> list[BenzenoidSpec]:
    """All members of family B with ``n`` hexagons, up to isomorphism."""
    if n < 1:
        raise InvalidArgument("n must be >= 1")
    if n > cap:
        raise ResourceLimit(f"gen_family_b is capped at {cap} hexagons")
    return list(_family_b_level(n))


def family_b_member(n: int) -> BenzenoidSpec:
    """One member of family B with ``n`` hexagons, built by repeated gluing."""
    if n < 1:
        raise InvalidArgument("n must be >= 1")
    spec = (BenzenoidSpec.single(), BenzenoidSpec.chain(2), B1_SPEC)[(n - 1) % 3]
    while spec.hexagon_count < n:
        faces = spec.faces
        h, side = next((h, s) for h in range(spec.hexagon_count) for s in free_sides(faces, h))
        spec = _glue_b1(spec, h, side)
    return spec


def append_linear_chain(graph: BenzenoidGraph, h0: int, k: int) -> BenzenoidGraph:
    """Add ``k`` hexagons in a straight line at ``h0``, opposite its neighbour.

    Existing hexagons keep their ids; the new ones get ids ``n..n+k-1``.
    """
    if k < 1:
        raise InvalidArgument(f"k must be >= 1, got {k}")
    if not 0 <= h0 < graph.hexagon_count:
        raise InvalidArgument(f"no hexagon {h0}")
    if len(graph.hexagon_neighbors(h0)) > 1:
        raise InvalidArgument(f"hexagon {h0} has more than one neighbouring hexagon")
    spec = spec_from_graph(graph)
    used = list(spec.faces[h0])
    side = (used[0] + 3) % 6 if used else 0
    n = spec.hexagon_count
    atts = list(spec.attachments) + [Attachment(h0, n, side)]
    atts += [Attachment(n + i, n + i + 1, 3) for i in range(k - 1)]
    return build_benzenoid(BenzenoidSpec(n + k, tuple(atts)))


def construct_with_clar(n: int, c: int) -> BenzenoidSpec:
    """A benzenoid with ``n`` hexagons and Clar number exactly ``c``.

    At the bound a family-B member is returned; below it, the smallest member
    whose bound is ``c`` is padded with a straight chain at a terminal hexagon.
    """
    if n < 1:
        raise InvalidArgument("n must be >= 1")
    bound = independence_bound(n)
    if not 1 <= c <= bound:
        raise InvalidArgument(f"c must lie in 1..{bound} for n={n}, got {c}")
    if c == bound:
        return family_b_member(n)
    base_n = (3 * c) // 2
    base = build_benzenoid(family_b_member(base_n))
    h0 = min(h for h in range(base_n) if len(base.hexagon_neighbors(h)) <= 1)
    return spec_from_graph(append_linear_chain(base, h0, n - base_n))


@lru_cache(maxsize=None)
def _catacondensed_level(n: int) -> tuple[BenzenoidSpec, ...]:
    if n == 1:
        return (BenzenoidSpec.single(),)
    found: dict[tuple[int, ...], BenzenoidSpec] = {}
    for spec in _catacondensed_level(n - 1):
        faces = spec.faces
        for h in range(spec.hexagon_count):
            for side in free_sides(faces, h):
                grown = BenzenoidSpec(n, spec.attachments + (Attachment(h, n - 1, side),))
                key = canonical_code(grown)
                if key not in found:
                    found[key] = canonical_spec(grown)
    return tuple(found[key] for key in sorted(found))


def enumerate_catacondensed(n: int, cap: int | None = None) -> list[BenzenoidSpec]:
    """Every catacondensed benzenoid with ``n`` hexagons, helicenes included."""
    cap = caps().hexagons if cap is None else cap
    if n < 1:
        raise InvalidArgument("n must be >= 1")
    if n > cap:
        raise ResourceLimit(f"enumerate_catacondensed is capped at {cap} hexagons")
    return list(_catacondensed_level(n))


@dataclass
class VerificationReport:
    n: int
    total: int = 0
    extremal: int = 0
    counterexamples: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "total": self.total,
            "extremal": self.extremal,
            "counterexamples": self.counterexamples,
        }


def verify_main_theorem(n: int, sample: int | None = None, seed: int = 0) -> VerificationReport:
    """Check the bound and the family-B characterisation on every ``n``-hexagon graph.

    ``sample`` restricts the run to a seeded random subset of the corpus.
    """
    specs = enumerate_catacondensed(n)
    if sample is not None and sample < len(specs):
        specs = random.Random(seed).sample(specs, sample)
    bound = independence_bound(n)
    report = VerificationReport(n)
    for spec in specs:
        graph = build_benzenoid(spec)
        value = clar_number(graph).value
        member = is_in_family_b(graph) is not None
        report.total += 1
        report.extremal += value == bound
        if value > bound or (value == bound) != member:
            report.counterexamples.append(
                {"spec": spec.to_json(), "clar": value, "bound": bound, "in_family_b": member}
            )
    return report
