import itertools

import pytest
from hypothesis import given, settings, strategies as st

from horotile import catalog
from horotile.corona import (
    CensusReport,
    CensusWindow,
    CoronaClass,
    CoronaCode,
    burnside_orbits,
    canonical_word,
    census,
    corona_code,
    corona_complex,
    geometric_congruent,
    geometric_signature,
    local_theorem_check,
    prefix_word,
    stabilizer,
)
from horotile.errors import InsufficientData, WindowTooSmall
from horotile.geometry import geometric_adjacency
from horotile.seqcore import SequenceSpec, hyperoctahedral_group
from horotile.tiling import Box, TileAddress, build_window

P = SequenceSpec.periodic
PLUS = P([((), (1,))])
signs = st.sampled_from((1, -1))


def orbit_count(d, k):
    """Orbits of letter words under diagonal B_d, by explicit enumeration."""
    letters = list(itertools.product((-1, 1), repeat=d))
    seen, orbits = set(), 0
    for word in itertools.product(letters, repeat=k):
        if word in seen:
            continue
        orbits += 1
        for g in hyperoctahedral_group(d):
            seen.add(tuple(g.act(s) for s in word))
    return orbits


def test_corona_sizes():
    t = TileAddress(0, (0,))
    assert corona_complex(PLUS, t, 0).members == (t,)
    assert len(corona_complex(PLUS, t, 1).members) == 6


def test_corona_neighbours_match_geometry():
    # every radius-1 member other than the centre shares a facet with it
    spec = catalog.D1_CATALOG["mixed-pre"]
    t = TileAddress(1, (3,))
    members = corona_complex(spec, t, 1).members
    w = build_window(spec, (0, 2), Box((-40,), (40,)))
    geo = {next(iter(p - {t})) for p in geometric_adjacency(spec, w) if t in p}
    assert set(members) - {t} == geo


def test_code_examples():
    assert canonical_word(((1,), (-1,)), 1) == canonical_word(((-1,), (1,)), 1)
    assert canonical_word(((1,), (1,)), 1) != canonical_word(((1,), (-1,)), 1)
    assert canonical_word(((1, 1),), 2) == canonical_word(((-1, -1),), 2)
    assert str(CoronaCode(((-1,), (1,)))) == "- +"


def test_stabilizer_examples():
    assert stabilizer((), 1).order == 2
    assert stabilizer(((1,),)).order == 1
    assert stabilizer(((-1,),)).order == 1
    s = stabilizer(((1, 1),))
    assert s.order == 2 and [str(g) for g in s.elements][1] != "identity"
    assert s.elements[1].perm == (1, 0)


def test_stabilizer_generators_generate():
    from horotile.corona import _closure
    for word in [(), ((1, -1, 1),), ((1, 1, 1),), ((1, 1, -1), (1, 1, 1))]:
        s = stabilizer(word, 3)
        assert _closure(s.generators, 3) == set(s.elements)


@pytest.mark.parametrize("d,k", [(d, k) for d in (1, 2, 3) for k in range(4)])
def test_burnside_matches_enumeration(d, k):
    assert burnside_orbits(d, k) == orbit_count(d, k)


def test_burnside_examples():
    assert [burnside_orbits(1, k) for k in range(1, 7)] == [1, 2, 4, 8, 16, 32]
    assert burnside_orbits(2, 1) == 1 and burnside_orbits(2, 2) == 3


def test_census_examples():
    assert census(PLUS, 3, CensusWindow(0, 16)).n_classes == 4
    assert census(PLUS, 1, CensusWindow(0, 8)).n_classes == 1
    spec = P([((), (1, -1)), ((1,), (-1, 1, 1))])
    assert census(spec, 2, CensusWindow(0, 8)).n_classes == 3


def test_census_window_too_small():
    with pytest.raises(WindowTooSmall):
        census(PLUS, 5, CensusWindow(0, 4))


def test_census_multiplicities():
    r = census(PLUS, 4, CensusWindow(0, 16, (3,)))
    assert sum(c.multiplicity for c in r.classes) == 33
    assert all(c.stabilizer_order == 1 for c in r.classes)


def test_local_theorem_d1():
    for name, spec in catalog.D1_CATALOG.items():
        reports = [census(spec, k, CensusWindow(0, 2 ** (k + 2))) for k in range(5)]
        v = local_theorem_check(reports)
        assert not v.crystallographic
        assert (v.first_violation.k, v.first_violation.condition) == (0, 2), name
        assert [(x.k, x.condition) for x in v.violations[1:]] == [(k, 1) for k in range(1, 4)]


def _synthetic(k, n, order):
    w = CensusWindow(0, 1)
    classes = tuple(CoronaClass(CoronaCode(((1,),) * k), TileAddress(0, (i,)), 1, order) for i in range(n))
    return CensusReport(1, k, w, classes)


def test_local_theorem_synthetic():
    v = local_theorem_check([_synthetic(0, 1, 2), _synthetic(1, 1, 2)])
    assert v.crystallographic and v.k == 0 and str(v) == "Crystallographic(0)"
    v = local_theorem_check([_synthetic(0, 1, 2), _synthetic(1, 1, 1), _synthetic(2, 1, 1)])
    assert v.crystallographic and v.k == 1


def test_local_theorem_insufficient():
    with pytest.raises(InsufficientData):
        local_theorem_check([_synthetic(0, 1, 2)])
    with pytest.raises(InsufficientData):
        local_theorem_check([_synthetic(0, 1, 2), _synthetic(2, 1, 2)])


@given(st.sampled_from(list(catalog.POOL_CATALOG.values())), st.data())
def test_code_invariant_under_spec_symmetry(spec, data):
    h = data.draw(st.sampled_from(hyperoctahedral_group(spec.dim)))
    k = data.draw(st.integers(0, 5))
    cell = tuple(data.draw(st.integers(-50, 50)) for _ in range(spec.dim))
    t = TileAddress(data.draw(st.integers(0, 3)), cell)
    moved = spec.transformed(h)
    # twisting a tail word by h leaves its code unchanged
    word = prefix_word(spec, t, k)
    assert canonical_word(tuple(h.act(s) for s in word), spec.dim) == corona_code(spec, t, k).word
    assert census(moved, min(k, 3), CensusWindow(0, 4)).n_classes == \
        census(spec, min(k, 3), CensusWindow(0, 4)).n_classes


@pytest.mark.parametrize("name", ["plus", "glide4", "mixed-pre"])
def test_codes_match_geometric_congruence_d1(name):
    spec = catalog.D1_CATALOG[name]
    cells = [TileAddress(0, (m,)) for m in range(-32, 32)]
    for k in range(0, 5):
        codes = {t: corona_code(spec, t, k) for t in cells}
        sigs = {t: geometric_signature(spec, t, k) for t in cells}
        for a, b in itertools.product(cells, repeat=2):
            assert (codes[a] == codes[b]) == (sigs[a] == sigs[b]), (k, a, b)


@settings(max_examples=20)
@given(st.integers(-6, 6), st.integers(-6, 6), st.integers(-6, 6), st.integers(-6, 6), st.integers(0, 2))
def test_codes_match_geometric_congruence_d2(x1, y1, x2, y2, k):
    spec = catalog.POOL_CATALOG["d2-late-walls"]
    a, b = TileAddress(0, (x1, y1)), TileAddress(0, (x2, y2))
    assert (corona_code(spec, a, k) == corona_code(spec, b, k)) == geometric_congruent(spec, a, b, k)
