import pytest

from clar_kit.benzenoid import (
    BenzenoidSpec,
    build_benzenoid,
    canonical_code,
    embeddings_of_tree,
    free_sides,
    spec_from_graph,
)
from clar_kit.clar import clar_number
from clar_kit.errors import InvalidArgument, ResourceLimit
from clar_kit.extremal import (
    angular_tk_spec,
    B1_SPEC,
    BaseSmall,
    BaseTk,
    Glued,
    _glue_b1,
    append_linear_chain,
    construct_with_clar,
    enumerate_catacondensed,
    family_b_member,
    gen_family_b,
    is_in_family_b,
    tk_extremal_check,
    verify_main_theorem,
)
from clar_kit.trees import independence_bound, make_tk

from conftest import check_certificate


def angular_tk(k):
    return angular_tk_spec(k)


def replay(witness, graph):
    """Rebuild ``graph`` from its derivation and compare canonical codes."""
    if isinstance(witness, BaseSmall):
        assert graph.hexagon_count == witness.hexagons
        if witness.hexagons == 3:
            assert canonical_code(graph_spec(graph)) == canonical_code(B1_SPEC)
        return
    if isinstance(witness, BaseTk):
        assert tk_extremal_check(graph) is not None
        return
    parent_graph = build_benzenoid(witness.parent_spec)
    replay(witness.parent, parent_graph)
    faces = witness.parent_spec.faces
    hits = []
    for h in range(parent_graph.hexagon_count):
        cyc = parent_graph.hexagons[h]
        for s in free_sides(faces, h):
            if tuple(sorted((cyc[s], cyc[(s + 1) % 6]))) == witness.edge:
                hits.append((h, s))
    assert len(hits) == 1
    rebuilt = _glue_b1(witness.parent_spec, *hits[0])
    assert canonical_code(rebuilt) == canonical_code(graph_spec(graph))


def graph_spec(graph):
    return spec_from_graph(graph)


# -- T_k base case ---------------------------------------------------------------


def test_angular_t3_instance():
    spec = angular_tk(3)
    g = build_benzenoid(spec)
    desc, pair = tk_extremal_check(g)
    assert desc.k == 3 and len(pair) == 2
    cert = clar_number(g)
    assert cert.value == 5
    assert check_certificate(g, cert.clar_set, cert.witness.edges) == []


def test_tk_check_negative_examples(naphthalene):
    assert tk_extremal_check(naphthalene) is None
    # T_2 is the 5-path; a straight chain has linear v2
    straight = build_benzenoid(BenzenoidSpec.chain(5))
    assert tk_extremal_check(straight) is None
    assert clar_number(straight).value < 3
    v2_linear = build_benzenoid(BenzenoidSpec.chain(5, [3, 3, 2]))
    assert tk_extremal_check(v2_linear) is None
    assert clar_number(v2_linear).value == 2


@pytest.mark.parametrize("k", [2, 3])
def test_tk_check_iff_extremal(k):
    specs = embeddings_of_tree(make_tk(k))
    assert specs
    for spec in specs:
        g = build_benzenoid(spec)
        hit = tk_extremal_check(g) is not None
        assert hit == (clar_number(g).value == 2 * k - 1)


@pytest.mark.parametrize("k", range(2, 9))
def test_angular_tk_spec(k):
    spec = angular_tk_spec(k)
    assert spec.tree == make_tk(k)
    g = build_benzenoid(spec)
    desc, pair = tk_extremal_check(g)
    assert pair == (1, 2 * k - 1)
    assert clar_number(g).value == 2 * k - 1


def test_angular_tk_spec_rejects_small_k():
    with pytest.raises(InvalidArgument):
        angular_tk_spec(1)


# -- membership ---------------------------------------------------------------------


def test_membership_examples(b1, straight3, naphthalene):
    assert is_in_family_b(b1) == BaseSmall(3)
    assert is_in_family_b(naphthalene) == BaseSmall(2)
    assert is_in_family_b(straight3) is None
    assert isinstance(is_in_family_b(build_benzenoid(angular_tk(2))), BaseTk)


def test_glued_over_b1():
    g = build_benzenoid(_glue_b1(B1_SPEC, 0, 2))
    w = is_in_family_b(g)
    assert isinstance(w, Glued)
    assert w.parent_spec.hexagon_count == 3
    replay(w, g)
    assert w.to_json()["case"] == "glued"


@pytest.mark.parametrize("n", range(1, 9))
def test_witness_replay(n):
    for spec in gen_family_b(n):
        g = build_benzenoid(spec)
        w = is_in_family_b(g)
        assert w is not None
        replay(w, g)


# -- generation ------------------------------------------------------------------


@pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 1), (4, 1), (5, 7), (6, 4), (7, 2)])
def test_gen_family_b_small(n, count):
    assert len(gen_family_b(n)) == count


def test_gen_family_b_three_is_b1():
    (spec,) = gen_family_b(3)
    assert canonical_code(spec) == canonical_code(B1_SPEC)


@pytest.mark.parametrize("n", range(1, 11))
def test_family_b_soundness(n):
    for spec in gen_family_b(n):
        assert spec.hexagon_count == n
        assert clar_number(build_benzenoid(spec)).value == independence_bound(n)


@pytest.mark.parametrize("n", range(1, 9))
def test_family_b_completeness(n):
    bound = independence_bound(n)
    members = {canonical_code(s) for s in gen_family_b(n)}
    extremal = set()
    for spec in enumerate_catacondensed(n):
        g = build_benzenoid(spec)
        code = canonical_code(spec)
        if clar_number(g).value == bound:
            extremal.add(code)
        assert (is_in_family_b(g) is not None) == (code in members)
    assert extremal == members


def test_gen_family_b_limits():
    with pytest.raises(ResourceLimit):
        gen_family_b(14)
    with pytest.raises(InvalidArgument):
        gen_family_b(0)


def test_family_b_member_grows():
    for n in range(1, 17):
        spec = family_b_member(n)
        assert spec.hexagon_count == n
        assert is_in_family_b(build_benzenoid(spec)) is not None


# -- chain extension and spectrum -------------------------------------------------------


def test_append_examples(b1):
    single = build_benzenoid(BenzenoidSpec.single())
    three = append_linear_chain(single, 0, 2)
    assert canonical_code(graph_spec(three)) == canonical_code(BenzenoidSpec.chain(3))
    longer = append_linear_chain(b1, 0, 3)
    assert longer.hexagon_count == 6
    assert clar_number(longer).value == clar_number(b1).value == 2
    tree = graph_spec(longer).tree
    # the new hexagons form a pendant path hanging from hexagon 0
    assert [len(tree.adjacency[h]) for h in (3, 4, 5)] == [2, 2, 1]
    assert 3 in tree.adjacency[0]


def test_append_keeps_ids(b1):
    out = append_linear_chain(b1, 2, 1)
    assert out.hexagons[:3] == b1.hexagons


def test_append_errors(b1):
    with pytest.raises(InvalidArgument):
        append_linear_chain(b1, 1, 1)
    with pytest.raises(InvalidArgument):
        append_linear_chain(b1, 0, 0)
    with pytest.raises(InvalidArgument):
        append_linear_chain(b1, 7, 1)


def test_append_preserves_clar_exhaustive(corpus_small):
    for spec in corpus_small:
        g = build_benzenoid(spec)
        before = clar_number(g).value
        for h0 in range(spec.hexagon_count):
            if len(g.hexagon_neighbors(h0)) > 1:
                continue
            for k in (1, 4):
                assert clar_number(append_linear_chain(g, h0, k)).value == before


@pytest.mark.parametrize(
    "n,c,expected",
    [(5, 3, None), (5, 1, BenzenoidSpec.chain(5)), (7, 4, None), (1, 1, BenzenoidSpec.single())],
)
def test_construct_examples(n, c, expected):
    spec = construct_with_clar(n, c)
    assert spec.hexagon_count == n
    assert clar_number(build_benzenoid(spec)).value == c
    if expected is not None:
        assert canonical_code(spec) == canonical_code(expected)
    if c == independence_bound(n):
        assert is_in_family_b(build_benzenoid(spec)) is not None


@pytest.mark.parametrize("n,c", [(5, 0), (5, 4), (0, 1)])
def test_construct_errors(n, c):
    with pytest.raises(InvalidArgument):
        construct_with_clar(n, c)


# -- enumeration and verification ------------------------------------------------------


@pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 2), (4, 5), (5, 12), (6, 37), (7, 123), (8, 446)])
def test_enumeration_counts(n, count):
    specs = enumerate_catacondensed(n)
    assert len(specs) == count
    assert len({canonical_code(s) for s in specs}) == count


def test_enumeration_caps(monkeypatch):
    with pytest.raises(ResourceLimit):
        enumerate_catacondensed(9)
    monkeypatch.setenv("CLAR_KIT_CAPS", "60:3")
    with pytest.raises(ResourceLimit):
        enumerate_catacondensed(4)
    assert len(enumerate_catacondensed(4, cap=4)) == 5
    with pytest.raises(InvalidArgument):
        enumerate_catacondensed(0)


@pytest.mark.parametrize("n,total,extremal", [(1, 1, 1), (2, 1, 1), (3, 2, 1), (4, 5, 1), (5, 12, 7)])
def test_verify_examples(n, total, extremal):
    report = verify_main_theorem(n)
    assert report.ok
    assert report.to_json() == {"n": n, "total": total, "extremal": extremal, "counterexamples": []}


def test_verify_sample_is_seeded():
    a = verify_main_theorem(6, sample=10, seed=3)
    b = verify_main_theorem(6, sample=10, seed=3)
    assert a.total == 10 and a.to_json() == b.to_json() and a.ok
