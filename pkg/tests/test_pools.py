import pytest
from hypothesis import given, strategies as st

from horotile import catalog
from horotile.errors import FiniteWordMode
from horotile.pools import (
    Wall,
    classify_symmetry,
    flood_pool_count,
    flood_pools,
    pool_analysis,
    pool_id,
    verification_window,
)
from horotile.seqcore import SequenceSpec, hyperoctahedral_group
from horotile.tiling import Box, TileAddress, build_window, induced_complex

P = SequenceSpec.periodic
PLUS = P([((), (1,))])
signs = st.sampled_from((1, -1))


@st.composite
def specs(draw, max_dim=2):
    d = draw(st.integers(1, max_dim))
    return P([(tuple(draw(st.lists(signs, max_size=2))),
               tuple(draw(st.lists(signs, min_size=1, max_size=3)))) for _ in range(d)])


def test_pool_analysis_examples():
    r = pool_analysis(PLUS)
    assert (r.k, r.pool_count) == (1, 2)
    assert r.walls == (Wall(0, -1, "lower", 0),)
    assert pool_analysis(P([((), (1, -1))])).pool_count == 1
    r = pool_analysis(P([((), (-1,)), ((), (1, -1))]))
    assert (r.k, r.pool_count) == (1, 2)
    assert r.walls == (Wall(0, 1, "upper", 0),)
    assert r.support_signature == (1, 1)


def test_pool_analysis_rejects_words():
    with pytest.raises(FiniteWordMode):
        pool_analysis(SequenceSpec.finite([(1,)]))


def test_pool_id_examples():
    assert pool_id(PLUS, TileAddress(0, (0,))) == (1,)
    assert pool_id(PLUS, TileAddress(0, (-1,))) == (-1,)
    late = P([((-1, -1), (1,))])
    wall = pool_analysis(late).walls[0]
    assert (wall.onset_layer, wall.position) == (2, -7)
    # anchor corners nest, so a wall never cuts a tile, even below its onset layer
    w = build_window(late, (-2, 4), Box((-40,), (40,)))
    assert {pool_id(late, t) for t in w.nodes} == {(1,), (-1,)}


def test_flood_examples():
    J = 6
    half = 2 ** (J + 1)
    w = build_window(PLUS, (0, J), Box((-half,), (half,)))
    comps = flood_pools(w)
    central = [c for c in comps if any(t.layer == 0 and -3 <= t.cell[0] <= 1 for t in c)]
    assert len(central) == 2
    assert len(flood_pools(induced_complex(PLUS, [TileAddress(0, (0,))]))) == 1


def test_flood_matches_analysis_on_catalog():
    for name, spec in catalog.POOL_CATALOG.items():
        if spec.dim < 3:
            assert flood_pool_count(spec) == pool_analysis(spec).pool_count, name


def test_verification_window_shape():
    vw = verification_window(catalog.D1_CATALOG["glide4"])
    assert vw.horizon == 4 and vw.layers == (0, 6)
    assert vw.box == Box((-128,), (128,))


@given(specs(), st.data())
def test_pool_count_invariances(spec, data):
    k = pool_analysis(spec).k
    h = data.draw(st.sampled_from(hyperoctahedral_group(spec.dim)))
    assert pool_analysis(spec.transformed(h)).k == k
    assert pool_analysis(spec.shifted(data.draw(st.integers(0, 5)))).k == k
    if verification_window(spec).horizon <= 4:
        assert flood_pool_count(spec) == 2 ** k


@given(specs())
def test_pools_are_unbounded(spec):
    report = pool_analysis(spec)
    fixed = report.wall_intersection()
    centre = [fixed.get(i, 0) for i in range(spec.dim)]
    sizes = []
    for h in (8, 16, 32):
        w = build_window(spec, (0, 0), Box(tuple(c - h for c in centre), tuple(c + h for c in centre)))
        tally = {}
        for t in w.nodes:
            pid = pool_id(spec, t, report)
            tally[pid] = tally.get(pid, 0) + 1
        sizes.append(tally)
    assert len(sizes[0]) == report.pool_count
    for pid, n in sizes[0].items():
        assert sizes[1][pid] > n and sizes[2][pid] > sizes[1][pid]


def test_walls_meet_in_flat():
    for name, spec in catalog.POOL_CATALOG.items():
        r = pool_analysis(spec)
        assert len({w.axis for w in r.walls}) == r.k, name
        assert len(r.wall_intersection()) == r.k
        assert r.support_signature == (spec.dim - r.k, r.k)
        for w in r.walls:
            assert w.bound in ("lower", "upper")


@pytest.mark.parametrize("name,spec,aperiodic,bounded,group,pretty", catalog.SYMMETRY_TABLE,
                         ids=[row[0] for row in catalog.SYMMETRY_TABLE])
def test_symmetry_table(name, spec, aperiodic, bounded, group, pretty):
    r = classify_symmetry(spec, aperiodic, bounded)
    assert (r.group, r.group_pretty) == (group, pretty)


def test_fundamental_domains():
    assert classify_symmetry(PLUS).fundamental_domain == "half ring"
    assert classify_symmetry(P([((), (1, -1))])).fundamental_domain == "1 ring"
    assert classify_symmetry(P([((), (1, 1, -1))])).fundamental_domain == "3 rings"
    assert classify_symmetry(P([((), (1, 1, -1, -1))])).fundamental_domain == "2 rings"


def test_symmetry_of_words_needs_flag():
    word = SequenceSpec.finite([(1,), (-1,), (-1,), (1,)])
    with pytest.raises(FiniteWordMode):
        classify_symmetry(word)
    assert classify_symmetry(word, assume_aperiodic=True).group_pretty == "trivial"
    with pytest.raises(ValueError):
        classify_symmetry(word, assume_aperiodic=True, bounded_axes=(0,))
