"""Pools, walls and the symmetry-group classifier."""
from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .errors import FiniteWordMode, WallDissectsTile
from .seqcore import (
    EventuallyConstant,
    SequenceSpec,
    SignedPermutation,
    coordinate_tail_behavior,
    essential_period,
    minimal_period,
)
from .tiling import (
    Box,
    TileAddress,
    TileComplex,
    anchor_cell,
    build_window,
    footprint,
)


@dataclass(frozen=True)
class Wall:
    """Hyperplane ``x[axis] == position`` on E0 separating two pools.

    ``bound`` says which bound the anchor pool sees: ``"lower"`` means the
    anchor pool lies in ``x[axis] >= position``.
    """

    axis: int
    position: int
    bound: str
    onset_layer: int

    def to_json(self) -> dict:
        return {"axis": self.axis, "position": self.position, "bound": self.bound,
                "onset_layer": self.onset_layer}


@dataclass(frozen=True)
class PoolReport:
    dim: int
    k: int
    walls: tuple[Wall, ...]

    @property
    def pool_count(self) -> int:
        return 2 ** self.k

    @property
    def support_signature(self) -> tuple[int, int]:
        """(m, d - m): each pool meets E0 in E^m plus a (d-m)-octant."""
        return self.dim - self.k, self.k

    def wall_intersection(self) -> dict[int, int]:
        """Fixed coordinates of the common intersection of all walls."""
        return {w.axis: w.position for w in self.walls}

    def support(self, signs: tuple[int, ...]) -> list[tuple[int, int, int]]:
        """Half-space constraints ``sign * (x[axis] - position) >= 0`` of one pool."""
        if len(signs) != self.k:
            raise ValueError(f"pool sign vector must have length {self.k}")
        return [(w.axis, w.position, s) for w, s in zip(self.walls, signs)]

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "pool_count": self.pool_count,
            "walls": [w.to_json() for w in self.walls],
            "support_signature": list(self.support_signature),
        }


def pool_analysis(spec: SequenceSpec) -> PoolReport:
    if not spec.is_periodic:
        raise FiniteWordMode("pool structure is undecidable from a finite word")
    walls = []
    for i in range(spec.dim):
        tb = coordinate_tail_behavior(spec, i)
        if not isinstance(tb, EventuallyConstant):
            continue
        # letter `onset` is the first constant one; it drives layer onset-1 -> onset,
        # so the corner is frozen from layer onset-1 on
        layer = tb.onset - 1
        cell = anchor_cell(spec, layer)
        if tb.value == 1:
            walls.append(Wall(i, cell.low[i], "lower", layer))
        else:
            walls.append(Wall(i, cell.high[i], "upper", layer))
    return PoolReport(spec.dim, len(walls), tuple(walls))


def pool_id(spec: SequenceSpec, t: TileAddress, report: PoolReport | None = None) -> tuple[int, ...]:
    """Side of every wall the tile lies on: +1 above, -1 below."""
    report = report or pool_analysis(spec)
    box = footprint(spec, t)
    out = []
    for w in report.walls:
        if box.low[w.axis] >= w.position:
            out.append(1)
        elif box.high[w.axis] <= w.position:
            out.append(-1)
        else:
            raise WallDissectsTile(f"wall x{w.axis}={w.position} cuts {t}")
    return tuple(out)


def flood_pools(window: TileComplex) -> list[list[TileAddress]]:
    """Connected components of the window under A/B adjacency only."""
    adj = window.adjacency(horospheric_only=True)
    seen: set[TileAddress] = set()
    comps = []
    for t in window.nodes:  # nodes are sorted, so components come out ordered
        if t in seen:
            continue
        comp, stack = [], [t]
        seen.add(t)
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        comps.append(sorted(comp))
    return comps


@dataclass(frozen=True)
class VerificationWindow:
    layers: tuple[int, int]
    box: Box
    central: Box
    horizon: int


def verification_window(spec: SequenceSpec) -> VerificationWindow:
    """The standard window on which flood fill must reproduce the pool count.

    With ``h`` the joint preperiod plus one full period, it spans layers
    ``[0, h + 2]`` and E0 half-width ``2^(h + 3)``. The central region is a
    2-cell neighbourhood of the wall intersection (of the anchor cell centre
    in free coordinates) at layer 0.
    """
    pre, period = minimal_period(spec)
    horizon = pre + period
    report = pool_analysis(spec)
    half = 1 << (horizon + 3)
    fixed = report.wall_intersection()
    centre = [fixed.get(i, 0) for i in range(spec.dim)]
    return VerificationWindow(
        layers=(0, horizon + 2),
        box=Box((-half,) * spec.dim, (half,) * spec.dim),
        central=Box(tuple(c - 2 for c in centre), tuple(c + 2 for c in centre)),
        horizon=horizon,
    )


def _meets_interior(a: Box, b: Box) -> bool:
    return all(lo1 < hi2 and lo2 < hi1 for lo1, hi1, lo2, hi2 in zip(a.low, a.high, b.low, b.high))


def flood_pool_count(spec: SequenceSpec, vw: VerificationWindow | None = None) -> int:
    """Number of flood-fill components reaching the central region at layer 0."""
    vw = vw or verification_window(spec)
    window = build_window(spec, vw.layers, vw.box)
    count = 0
    for comp in flood_pools(window):
        if any(t.layer == 0 and _meets_interior(footprint(spec, t), vw.central) for t in comp):
            count += 1
    return count


# --- symmetry ---------------------------------------------------------------

@dataclass(frozen=True)
class SymmetryReport:
    dim: int
    k: int
    periodic: bool
    period: tuple[int, int] | None
    essential: tuple[int, SignedPermutation] | None
    fundamental_domain: str | None

    @property
    def group(self) -> str:
        return f"Z x B{self.k}" if self.periodic else f"B{self.k}"

    @property
    def finite_part_order(self) -> int:
        return 2 ** self.k * factorial(self.k)

    @property
    def group_pretty(self) -> str:
        finite = {0: None, 1: "C2"}.get(self.k, f"B{self.k}")
        if self.periodic:
            return "Z" if finite is None else f"Z x {finite}"
        return "trivial" if finite is None else finite

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "group_pretty": self.group_pretty,
            "k": self.k,
            "period": None if self.period is None else
            {"preperiod": self.period[0], "period": self.period[1]},
            "essential_period": None if self.essential is None else
            {"q": self.essential[0], "witness": self.essential[1].to_json(),
             "witness_name": str(self.essential[1])},
            "fundamental_domain": self.fundamental_domain,
        }


def classify_symmetry(spec: SequenceSpec, assume_aperiodic: bool = False,
                      bounded_axes: tuple[int, ...] = ()) -> SymmetryReport:
    """Symmetry group descriptor of the tiling encoded by ``spec``.

    Eventually periodic specs always carry the infinite cyclic factor. A
    finite word is only accepted with ``assume_aperiodic``; its pool count
    then comes from ``bounded_axes``, the coordinates the caller asserts to
    be eventually constant (none by default).
    """
    if spec.is_periodic:
        k = pool_analysis(spec).k
        period = minimal_period(spec)
        ess = essential_period(spec)
        domain = None
        if spec.dim == 1:
            if k == 1:
                domain = "half ring"
            else:
                domain = "1 ring" if ess[0] == 1 else f"{ess[0]} rings"
        return SymmetryReport(spec.dim, k, True, period, ess, domain)
    if not assume_aperiodic:
        raise FiniteWordMode("a finite word needs an explicit aperiodicity assertion")
    if any(not 0 <= i < spec.dim for i in bounded_axes) or len(set(bounded_axes)) != len(bounded_axes):
        raise ValueError(f"bad bounded axes {bounded_axes}")
    k = len(bounded_axes)
    if k == spec.dim:
        raise ValueError("all coordinates eventually constant means eventually periodic")
    return SymmetryReport(spec.dim, k, False, None, None, "whole space" if spec.dim == 1 else None)
