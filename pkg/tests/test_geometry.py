import cmath
import math
import re

import pytest
from hypothesis import given, strategies as st

from horotile import catalog
from horotile.errors import UnsupportedDimension
from horotile.geometry import (
    BASE_POINT,
    LN2,
    cross_ratio,
    disc_angle,
    embed_region,
    from_disc,
    geometric_adjacency,
    hyperbolic_distance,
    layer_distance,
    metric_report,
    to_disc,
)
from horotile.render import DISC, HALF_PLANE, render_footprints, render_svg, tile_outline
from horotile.seqcore import SequenceSpec
from horotile.tiling import Box, TileAddress, build_window, induced_complex, parent

P = SequenceSpec.periodic
PLUS = P([((), (1,))])
signs = st.sampled_from((1, -1))
upper = st.builds(complex, st.floats(-50, 50), st.floats(0.01, 50))


@st.composite
def specs(draw, max_dim=2):
    d = draw(st.integers(1, max_dim))
    return P([(tuple(draw(st.lists(signs, max_size=2))),
               tuple(draw(st.lists(signs, min_size=1, max_size=3)))) for _ in range(d)])


def test_embed_anchor():
    r = embed_region(PLUS, TileAddress(0, (0,)))
    assert r.box == Box((-1,), (1,)) and (r.bottom, r.top) == (1, 2)


def test_bands_stack():
    spec = catalog.D1_CATALOG["long"]
    for j in range(-5, 10):
        t = TileAddress(j, (7,))
        assert embed_region(spec, parent(spec, t).address).bottom == embed_region(spec, t).top


@pytest.mark.parametrize("j", [-6, -1, 0, 1, 9, 40])
def test_metric_facts(j):
    m = metric_report(catalog.D1_CATALOG["glide4"], TileAddress(j, (5,)))
    assert abs(m.layer_distance - LN2) < 1e-12
    assert abs(float(m.b_size / m.a_size) - 2) < 1e-12
    assert abs(layer_distance(j, j + 5) - 5 * LN2) < 1e-12
    # the vertical geodesic agrees with the half-plane distance formula
    assert abs(hyperbolic_distance(1j * 2.0 ** j, 1j * 2.0 ** (j + 1)) - LN2) < 1e-9


def test_disc_normalisation():
    assert abs(to_disc(BASE_POINT)) < 1e-15
    for x in (-1e3, -2.5, 0.0, 1.0, 77.0):
        assert abs(abs(to_disc(complex(x, 0))) - 1) < 1e-12
    with pytest.raises(ValueError):
        to_disc(complex(0, -1))


@given(upper)
def test_disc_roundtrip(z):
    assert abs(from_disc(to_disc(z)) - z) < 1e-9 * max(1.0, abs(z))
    assert abs(to_disc(z)) < 1


@given(st.builds(complex, st.floats(-10, 10), st.floats(0.1, 10)), st.floats(0, 2 * math.pi),
       st.floats(0.1, 3.0))
def test_conformal(z, theta, turn):
    u, v = cmath.exp(1j * theta), cmath.exp(1j * (theta + turn))
    assert abs(disc_angle(z, u, v, h=1e-5 * z.imag) - turn) < 1e-6


@given(upper, upper, upper, upper)
def test_cross_ratio_preserved(a, b, c, d):
    pts = [a, b, c, d]
    if min(abs(p - q) for i, p in enumerate(pts) for q in pts[i + 1:]) < 1e-3:
        return
    before = cross_ratio(a, b, c, d)
    after = cross_ratio(*(to_disc(p) for p in pts))
    assert abs(before - after) <= 1e-6 * max(1.0, abs(before))


@given(specs(), st.integers(-2, 1), st.integers(-12, 4), st.integers(1, 10))
def test_adjacency_matches_geometry(spec, layer, lo, size):
    w = build_window(spec, (layer, layer + 2), Box((lo,) * spec.dim, (lo + size,) * spec.dim))
    assert {frozenset((e.u, e.v)) for e in w.edges} == geometric_adjacency(spec, w)


# --- rendering ----------------------------------------------------------------

NUM = r"-?\d+(?:\.\d+)?"


def _vertices(path_d):
    return [(float(x), float(y)) for x, y in re.findall(rf"[ML] ({NUM}) ({NUM})", path_d)]


def _paths(svg):
    return re.findall(r'<path id="t(-?\d+)_(-?\d+)" d="([^"]*)"', svg)


def _ticks(svg):
    return [tuple(map(float, m)) for m in
            re.findall(rf'<line class="tick" x1="({NUM})" y1="({NUM})" x2="({NUM})" y2="({NUM})"', svg)]


def test_single_tile_svg():
    w = induced_complex(PLUS, [TileAddress(0, (0,))])
    svg = render_svg(w, HALF_PLANE)
    paths = _paths(svg)
    assert len(paths) == 1
    d = paths[0][2]
    assert d.startswith("M ") and d.endswith("Z") and len(re.findall(r"[LA] ", d)) == 4
    assert len(_ticks(svg)) == 1


def test_shared_edges_coincide():
    w = build_window(PLUS, (0, 1), Box((-1,), (7,)))
    svg = render_svg(w, HALF_PLANE)
    paths = {TileAddress(int(j), (int(m),)): _vertices(d) for j, m, d in _paths(svg)}
    assert len(paths) == 6
    ticks = _ticks(svg)
    close = lambda p, q: abs(p[0] - q[0]) < 1e-9 and abs(p[1] - q[1]) < 1e-9
    for e in w.edges:
        a, b = paths[e.u], paths[e.v]  # vertices: bottom-left, top-left, top-right, bottom-right, bottom-left
        if e.horospheric:
            feet = [b[0], b[3]] + [(x1, y1) for x1, y1, _, _ in ticks]
            assert any(close(a[1], f) for f in feet) and any(close(a[2], f) for f in feet)
        else:
            assert close(a[2], b[1]) and close(a[3], b[0])


def test_disc_points_inside():
    w = build_window(PLUS, (0, 1), Box((-1,), (7,)))
    svg = render_svg(w, DISC)
    cx, cy, r = map(float, re.search(rf'<circle cx="({NUM})" cy="({NUM})" r="({NUM})"', svg).groups())
    pts = [(float(x), float(y)) for x, y in re.findall(rf"(?:[ML]|A {NUM} {NUM} 0 [01] [01]) ({NUM}) ({NUM})", svg)]
    assert len(pts) >= 6 * 5
    assert all(math.hypot(x - cx, y - cy) < r for x, y in pts)
    assert " A " in svg


def test_outline_segments():
    w = build_window(PLUS, (0, 0), Box((-1,), (1,)))
    o = tile_outline(w, TileAddress(0, (0,)))
    assert (o.c_left.start, o.a.start, o.c_right.start, o.b.start) == (-1 + 1j, -1 + 2j, 1 + 2j, 1 + 1j)
    assert o.b1.end == o.b2.start == 1j


def test_render_restrictions():
    w2 = build_window(P([((), (1,)), ((), (-1,))]), (0, 1), Box((-3, -3), (3, 3)))
    with pytest.raises(UnsupportedDimension):
        render_svg(w2, DISC)
    assert render_footprints(w2).count("<rect") == len(w2)
    with pytest.raises(UnsupportedDimension):
        render_footprints(build_window(PLUS, (0, 0), Box((-1,), (1,))))
    with pytest.raises(ValueError):
        render_svg(build_window(PLUS, (0, 0), Box((-1,), (1,))), style={"colour": "red"})


def test_render_styles_and_determinism():
    w = build_window(PLUS, (0, 2), Box((-9,), (9,)))
    style = {"pools": "true", "highlight_tail": "0:1", "highlight_tower": "2:0"}
    a, b = render_svg(w, HALF_PLANE, style), render_svg(w, HALF_PLANE, style)
    assert a == b
    assert "#d9822b" in a and "#9ecae1" in a and "#fdae6b" in a
