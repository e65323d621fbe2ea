"""Upper half-space embedding of tiles, metric facts, and the disc map.

Chart: the ideal point of the horosphere family sits at infinite height and
layer ``j`` occupies heights ``[2^j, 2^(j+1)]`` above its E0 footprint. The
reference horosphere E0 is at height 1, so footprint coordinates are E0
arc length. A tile's A facet is its top face (nearest the ideal point),
its B facets tile its bottom face.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .seqcore import SequenceSpec
from .tiling import Box, Number, TileAddress, TileComplex, footprint

LN2 = math.log(2.0)


def power_of_two(j: int) -> Number:
    return 1 << j if j >= 0 else Fraction(1, 1 << -j)


@dataclass(frozen=True)
class HalfSpaceRegion:
    layer: int
    box: Box
    bottom: Number  # height of the B facets
    top: Number  # height of the A facet

    @property
    def width(self) -> Number:
        return self.box.high[0] - self.box.low[0]

    def a_size(self) -> Number:
        """Edge length of the A facet in its horosphere's own metric."""
        return Fraction(self.width) / self.top

    def b_size(self) -> Number:
        """Edge length of the whole B face (all B facets) in its horosphere's metric."""
        return Fraction(self.width) / self.bottom


def embed_region(spec: SequenceSpec, t: TileAddress) -> HalfSpaceRegion:
    return HalfSpaceRegion(t.layer, footprint(spec, t), power_of_two(t.layer), power_of_two(t.layer + 1))


def layer_distance(j1: int, j2: int) -> float:
    """Hyperbolic distance between the bottoms of two layers along a vertical geodesic."""
    lo, hi = power_of_two(min(j1, j2)), power_of_two(max(j1, j2))
    return math.log(hi) - math.log(lo)


@dataclass(frozen=True)
class MetricReport:
    layer_distance: float
    a_size: Number
    b_size: Number

    def to_json(self) -> dict:
        return {"layer_distance": self.layer_distance, "a_size": str(self.a_size),
                "b_size": str(self.b_size)}


def metric_report(spec: SequenceSpec, t: TileAddress) -> MetricReport:
    r = embed_region(spec, t)
    # integral of dy / y across the band
    return MetricReport(math.log(r.top / r.bottom), r.a_size(), r.b_size())


def regions_share_facet(r1: HalfSpaceRegion, r2: HalfSpaceRegion) -> bool:
    """Do the two regions share a boundary piece of full facet dimension?

    Either the bands coincide and the boxes touch along a face of positive
    (d-1)-volume, or one band sits directly on the other and the boxes
    overlap with positive d-volume.
    """
    b1, b2 = r1.box, r2.box
    if r1.bottom == r2.bottom and r1.top == r2.top:
        touching = 0
        for lo1, hi1, lo2, hi2 in zip(b1.low, b1.high, b2.low, b2.high):
            if hi1 == lo2 or hi2 == lo1:
                touching += 1
            elif not (lo1 < hi2 and lo2 < hi1):
                return False
        return touching == 1
    if r1.top == r2.bottom or r2.top == r1.bottom:
        return all(lo1 < hi2 and lo2 < hi1 for lo1, hi1, lo2, hi2 in zip(b1.low, b1.high, b2.low, b2.high))
    return False


def geometric_adjacency(spec: SequenceSpec, window: TileComplex) -> set[frozenset]:
    """All facet-sharing pairs of the window, by brute force over the embedding."""
    regions = [(t, embed_region(spec, t)) for t in window.nodes]
    out = set()
    for i, (t1, r1) in enumerate(regions):
        for t2, r2 in regions[i + 1:]:
            if regions_share_facet(r1, r2):
                out.add(frozenset((t1, t2)))
    return out


# --- Poincare disc ---------------------------------------------------------------

BASE_POINT = 1j  # maps to the disc centre


def to_disc(z: complex) -> complex:
    """Cayley map of the upper half-plane onto the unit disc.

    ``i`` goes to 0 and the ideal point at infinite height goes to 1, so
    horizontal lines become horocycles tangent at 1 and vertical lines become
    geodesic arcs ending at 1.
    """
    if z.imag < 0:
        raise ValueError(f"point {z} is below the boundary")
    return (z - 1j) / (z + 1j)


def from_disc(w: complex) -> complex:
    return 1j * (1 + w) / (1 - w)


def cross_ratio(a: complex, b: complex, c: complex, d: complex) -> complex:
    return ((a - c) * (b - d)) / ((a - d) * (b - c))


def hyperbolic_distance(z1: complex, z2: complex) -> float:
    """Distance in the upper half-plane (curvature -1)."""
    return 2 * math.asinh(abs(z1 - z2) / (2 * math.sqrt(z1.imag * z2.imag)))


def disc_angle(z: complex, u: complex, v: complex, h: float = 1e-6) -> float:
    """Angle between the images of directions u and v at z (finite differences)."""
    du = to_disc(z + h * u) - to_disc(z - h * u)
    dv = to_disc(z + h * v) - to_disc(z - h * v)
    return abs(cmath.phase(dv / du))
