"""Exact combinatorial model of a B-tiling.

Tiles are addressed relative to the anchor tail: the tile ``(j, m)`` sits in
layer ``j`` (layers grow along the tail) and its projection to the reference
horosphere E0 is the box

    a^(j) + m * 2^(j+1)  <=  x  <=  a^(j) + (m + 1) * 2^(j+1)

where ``a^(j)`` is the low corner of the anchor cell. Layers below 0 refine
the layer-0 grid and keep ``a^(0)`` as their corner, so their boxes can have
dyadic rational corners; those are returned as :class:`fractions.Fraction`.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor
from typing import Iterable, Iterator, Sequence

from .errors import EmptyWindow
from .seqcore import SequenceSpec, Symbol, seq_letter

Number = int | Fraction


@dataclass(frozen=True, order=True)
class TileAddress:
    layer: int
    cell: tuple[int, ...]

    def __str__(self):
        return f"({self.layer}, {list(self.cell)})"

    def to_json(self) -> list[int]:
        return [self.layer, *self.cell]


def anchor(d: int, layer: int = 0) -> TileAddress:
    return TileAddress(layer, (0,) * d)


@dataclass(frozen=True)
class Facet:
    """Facet label: ``A`` (lower), ``B`` with half-bits ``delta`` (upper),
    or ``C`` on ``axis`` with ``sign`` (sides)."""

    kind: str
    delta: tuple[int, ...] = ()
    axis: int = -1
    sign: int = 0

    def __str__(self):
        if self.kind == "A":
            return "A"
        if self.kind == "B":
            return "B" + "".join(map(str, self.delta))
        return f"C{self.axis}{'+' if self.sign > 0 else '-'}"


FACET_A = Facet("A")


def facet_labels(d: int) -> list[Facet]:
    """All 2^d + 2d + 1 facet labels of a tile in H^(d+1)."""
    out = [FACET_A]
    out += [Facet("B", delta=delta) for delta in itertools.product((0, 1), repeat=d)]
    out += [Facet("C", axis=i, sign=s) for i in range(d) for s in (-1, 1)]
    return out


def edge_length(layer: int) -> Number:
    """Side length 2^(layer+1) of a layer's cells on E0."""
    if layer >= -1:
        return 1 << (layer + 1)
    return Fraction(1, 1 << (-layer - 1))


def step_letter(spec: SequenceSpec, layer: int) -> Symbol:
    """Letter governing the step from ``layer`` to ``layer + 1``.

    Steps that stay below the anchor layer use the all-plus letter, which is
    what keeps ``a^(j) = a^(0)`` for negative ``j``.
    """
    if layer + 1 >= 1:
        return seq_letter(spec, layer + 1)
    return (1,) * spec.dim


_ANCHOR_LOWS: dict[SequenceSpec, list[tuple[int, ...]]] = {}


def anchor_low(spec: SequenceSpec, j: int) -> tuple[int, ...]:
    """Low corner a^(j) of the anchor cell, by the footprint recurrence."""
    if j <= 0:
        return (-1,) * spec.dim
    lows = _ANCHOR_LOWS.setdefault(spec, [(-1,) * spec.dim])
    while len(lows) <= j:
        i = len(lows)  # computing a^(i) from a^(i-1) and letter i
        sigma = seq_letter(spec, i)
        width = 1 << i  # b - a at layer i - 1
        lows.append(tuple(a + (s - 1) // 2 * width for a, s in zip(lows[-1], sigma)))
    return lows[j]


@dataclass(frozen=True)
class AnchorCell:
    layer: int
    low: tuple[Number, ...]
    high: tuple[Number, ...]


def anchor_cell(spec: SequenceSpec, j: int) -> AnchorCell:
    low = anchor_low(spec, j)
    w = edge_length(j)
    return AnchorCell(j, low, tuple(a + w for a in low))


@dataclass(frozen=True)
class ParentStep:
    address: TileAddress
    symbol: Symbol
    delta: tuple[int, ...]


def parent(spec: SequenceSpec, t: TileAddress) -> ParentStep:
    sigma = step_letter(spec, t.layer)
    cell, delta = [], []
    for m, s in zip(t.cell, sigma):
        v = m + (1 - s) // 2
        cell.append(v // 2)
        delta.append(v % 2)
    symbol = tuple(1 - 2 * x for x in delta)
    return ParentStep(TileAddress(t.layer + 1, tuple(cell)), symbol, tuple(delta))


def children(spec: SequenceSpec, t: TileAddress, delta: Sequence[int]) -> TileAddress:
    sigma = step_letter(spec, t.layer - 1)
    cell = tuple(2 * n - (1 - s) // 2 + x for n, s, x in zip(t.cell, sigma, delta))
    return TileAddress(t.layer - 1, cell)


def all_children(spec: SequenceSpec, t: TileAddress) -> list[TileAddress]:
    return [children(spec, t, delta) for delta in itertools.product((0, 1), repeat=len(t.cell))]


def side_neighbor(t: TileAddress, i: int, sign: int) -> TileAddress:
    cell = list(t.cell)
    cell[i] += 1 if sign > 0 else -1
    return TileAddress(t.layer, tuple(cell))


@dataclass(frozen=True)
class Box:
    low: tuple[Number, ...]
    high: tuple[Number, ...]

    @property
    def dim(self) -> int:
        return len(self.low)

    def contains(self, other: "Box") -> bool:
        return all(a <= c and d <= b for a, b, c, d in zip(self.low, self.high, other.low, other.high))

    def volume(self) -> Number:
        v = 1
        for a, b in zip(self.low, self.high):
            v *= b - a
        return v

    def to_json(self) -> dict:
        return {"low": [str(x) for x in self.low], "high": [str(x) for x in self.high]}


def footprint(spec: SequenceSpec, t: TileAddress) -> Box:
    """Projection of the tile to E0 (a cube of side 2^(layer+1))."""
    low = anchor_low(spec, t.layer)
    w = edge_length(t.layer)
    return Box(tuple(a + m * w for a, m in zip(low, t.cell)),
               tuple(a + (m + 1) * w for a, m in zip(low, t.cell)))


def tail_word(spec: SequenceSpec, t: TileAddress, depth: int) -> tuple[list[TileAddress], list[Symbol]]:
    path, word = [t], []
    for _ in range(depth):
        step = parent(spec, path[-1])
        path.append(step.address)
        word.append(step.symbol)
    return path, word


def neighbors(spec: SequenceSpec, t: TileAddress) -> Iterator[tuple[TileAddress, Facet, Facet]]:
    """Every facet-adjacent tile with the facet labels on (t, other)."""
    up = parent(spec, t)
    yield up.address, FACET_A, Facet("B", delta=up.delta)
    for delta in itertools.product((0, 1), repeat=spec.dim):
        yield children(spec, t, delta), Facet("B", delta=delta), FACET_A
    for i in range(spec.dim):
        for s in (-1, 1):
            yield side_neighbor(t, i, s), Facet("C", axis=i, sign=s), Facet("C", axis=i, sign=-s)


# --- windows --------------------------------------------------------------

@dataclass(frozen=True)
class Edge:
    u: TileAddress
    v: TileAddress
    u_facet: Facet
    v_facet: Facet

    @property
    def horospheric(self) -> bool:
        return self.u_facet.kind != "C"


@dataclass(frozen=True)
class TileComplex:
    spec: SequenceSpec
    nodes: tuple[TileAddress, ...]
    edges: tuple[Edge, ...]
    layers: tuple[int, int]
    box: Box | None = None
    _index: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {t: i for i, t in enumerate(self.nodes)})

    def __contains__(self, t: TileAddress) -> bool:
        return t in self._index

    def __len__(self):
        return len(self.nodes)

    def layer_nodes(self, j: int) -> list[TileAddress]:
        return [t for t in self.nodes if t.layer == j]

    def adjacency(self, horospheric_only: bool = False) -> dict[TileAddress, list[TileAddress]]:
        adj = {t: [] for t in self.nodes}
        for e in self.edges:
            if horospheric_only and not e.horospheric:
                continue
            adj[e.u].append(e.v)
            adj[e.v].append(e.u)
        return adj


def _tile_key(t: TileAddress):
    return t.layer, t.cell


def induced_complex(spec: SequenceSpec, tiles: Iterable[TileAddress], box: Box | None = None) -> TileComplex:
    """The complex on ``tiles`` with every A/B/C adjacency among them."""
    nodes = tuple(sorted(set(tiles), key=_tile_key))
    if not nodes:
        raise EmptyWindow("no tiles")
    present = set(nodes)
    top = nodes[-1].layer
    c_facets = [(Facet("C", axis=i, sign=1), Facet("C", axis=i, sign=-1)) for i in range(spec.dim)]
    b_facets: dict[tuple[int, ...], Facet] = {}
    edges = []
    for t in nodes:
        if t.layer < top:
            up = parent(spec, t)
            if up.address in present:
                b = b_facets.get(up.delta)
                if b is None:
                    b = b_facets[up.delta] = Facet("B", delta=up.delta)
                edges.append(Edge(t, up.address, FACET_A, b))
        cell = t.cell
        for i in range(spec.dim):
            n = TileAddress(t.layer, cell[:i] + (cell[i] + 1,) + cell[i + 1:])
            if n in present:
                edges.append(Edge(t, n, *c_facets[i]))
    edges.sort(key=lambda e: (e.u.layer, e.u.cell, e.v.layer, e.v.cell))
    return TileComplex(spec, nodes, tuple(edges), (nodes[0].layer, nodes[-1].layer), box)


def _cell_range(low_corner: Number, w: Number, lo: Number, hi: Number) -> range:
    # cells whose open interval meets (lo, hi)
    first = floor(Fraction(lo - low_corner) / w)
    last = ceil(Fraction(hi - low_corner) / w) - 1
    return range(first, last + 1)


def window_tiles(spec: SequenceSpec, j_min: int, j_max: int, box: Box) -> list[TileAddress]:
    tiles = []
    for j in range(j_min, j_max + 1):
        low = anchor_low(spec, j)
        w = edge_length(j)
        ranges = [_cell_range(a, w, lo, hi) for a, lo, hi in zip(low, box.low, box.high)]
        tiles.extend(TileAddress(j, cell) for cell in itertools.product(*ranges))
    return tiles


def build_window(spec: SequenceSpec, layers: tuple[int, int], box: Box) -> TileComplex:
    """All tiles in ``layers`` whose footprint meets the interior of ``box``."""
    j_min, j_max = layers
    if j_max < j_min:
        raise EmptyWindow(f"empty layer range {layers}")
    if len(box.low) != spec.dim or any(b <= a for a, b in zip(box.low, box.high)):
        raise EmptyWindow("window box must have positive volume in every coordinate")
    # letters up to j_max must exist (raises IndexBeyondWord otherwise)
    anchor_low(spec, j_max)
    return induced_complex(spec, window_tiles(spec, j_min, j_max, box), box)


def cell_box(spec: SequenceSpec, layer: int, half_width: int) -> Box:
    """Union of the footprints of cells -half_width..half_width at ``layer``."""
    low = anchor_low(spec, layer)
    w = edge_length(layer)
    return Box(tuple(a - half_width * w for a in low), tuple(a + (half_width + 1) * w for a in low))


def horospheric_walk(spec: SequenceSpec, start: TileAddress, moves: Sequence) -> list[TileAddress]:
    """Follow ``moves``: ``"down"`` crosses the A facet, a delta tuple crosses that B facet."""
    path = [start]
    for mv in moves:
        t = path[-1]
        path.append(parent(spec, t).address if mv == "down" else children(spec, t, mv))
    return path


def reduce_path(path: Sequence[TileAddress]) -> list[TileAddress]:
    """Remove immediate backtracking (x, y, x -> x) until none is left."""
    out: list[TileAddress] = []
    for t in path:
        if len(out) >= 2 and out[-2] == t:
            out.pop()
        elif not out or out[-1] != t:
            out.append(t)
    return out


def bfs_ball(spec: SequenceSpec, t: TileAddress, radius: int) -> list[TileAddress]:
    seen = {t: 0}
    queue = deque([t])
    while queue:
        u = queue.popleft()
        if seen[u] == radius:
            continue
        for v, _, _ in neighbors(spec, u):
            if v not in seen:
                seen[v] = seen[u] + 1
                queue.append(v)
    return sorted(seen)
