"""Invariant suite run by ``horotile verify``.

Each check returns ``None`` when the property holds, or a short witness
string describing the first counterexample. Sizes are chosen so the whole
suite finishes in about half a minute.
"""
from __future__ import annotations

import itertools
import random
from typing import Callable, Iterator

from . import catalog
from .corona import (
    CensusWindow,
    burnside_orbits,
    census,
    corona_code,
    geometric_signature,
    local_theorem_check,
    stabilizer,
)
from .geometry import LN2, embed_region, geometric_adjacency, layer_distance, metric_report
from .pools import flood_pool_count, pool_analysis, pool_id
from .seqcore import (
    BothSignsInfinitely,
    EventuallyConstant,
    SequenceSpec,
    coordinate_tail_behavior,
    essential_period,
    hyperoctahedral_group,
    minimal_period,
    seq_letter,
)
from .tiling import (
    Box,
    TileAddress,
    all_children,
    anchor_cell,
    build_window,
    children,
    footprint,
    horospheric_walk,
    parent,
    reduce_path,
)

Check = Callable[[], "str | None"]
SEED = 20240601


def naive_letters(spec: SequenceSpec, n: int) -> list[tuple[int, ...]]:
    cols = []
    for pre, period in spec.coords:
        col = list(pre)
        while len(col) < n:
            col.extend(period)
        cols.append(col[:n])
    return [tuple(c[j] for c in cols) for j in range(n)]


def brute_is_cofinal_period(spec: SequenceSpec, p: int) -> bool:
    pre, q = minimal_period(spec)
    n = pre + 4 * q + p + 8
    s = naive_letters(spec, n)
    return all(s[j] == s[j + p] for j in range(pre + q, n - p))


def check_letters() -> str | None:
    for name, spec in catalog.POOL_CATALOG.items():
        n = 10 * sum(len(p) + len(q) for p, q in spec.coords)
        if naive_letters(spec, n) != [seq_letter(spec, j) for j in range(1, n + 1)]:
            return f"{name}: seq_letter disagrees with list expansion"
    return None


def check_minimal_period() -> str | None:
    for name, spec in catalog.POOL_CATALOG.items():
        _, q = minimal_period(spec)
        if q > 12:
            continue
        periods = [p for p in range(1, 25) if brute_is_cofinal_period(spec, p)]
        if not periods or periods[0] != q or any(p % q for p in periods):
            return f"{name}: minimal period {q}, brute-force cofinal periods {periods}"
    return None


def check_essential_period() -> str | None:
    rng = random.Random(SEED)
    group_cache = {}
    for name, spec in catalog.POOL_CATALOG.items():
        pre, q = minimal_period(spec)
        qe, g = essential_period(spec)
        if q % qe or (g.is_identity and qe != q):
            return f"{name}: essential {qe} (witness {g}) vs period {q}"
        s = naive_letters(spec, pre + 3 * q + 2)
        group = group_cache.setdefault(spec.dim, hyperoctahedral_group(spec.dim))
        best = None
        for cand in range(1, q + 1):
            for h in group:
                if all(h.act(s[j]) == s[j + cand] for j in range(pre, pre + 2 * q)):
                    best = cand
                    break
            if best:
                break
        if best != qe:
            return f"{name}: essential period {qe}, brute force {best}"
        h = rng.choice(group)
        qe2, g2 = essential_period(spec.transformed(h))
        t = naive_letters(spec.transformed(h), pre + 3 * q)
        conj = h * g * h.inverse()
        if qe2 != qe or any(conj.act(t[j]) != t[j + qe] for j in range(pre, pre + 2 * q)):
            return f"{name}: essential period not invariant under {h}"
    return None


def check_tail_behavior() -> str | None:
    for name, spec in catalog.POOL_CATALOG.items():
        n = 4 * sum(len(p) + len(q) for p, q in spec.coords)
        s = naive_letters(spec, n)
        for i in range(spec.dim):
            col = [x[i] for x in s]
            pre = len(spec.coords[i][0])
            tail = col[pre:]
            constant = len(set(tail)) == 1
            tb = coordinate_tail_behavior(spec, i)
            if constant != isinstance(tb, EventuallyConstant):
                return f"{name} axis {i}: {tb}"
            if isinstance(tb, EventuallyConstant):
                last_change = max((j + 1 for j in range(n) if col[j] != tb.value), default=0)
                if tb.onset != last_change + 1:
                    return f"{name} axis {i}: onset {tb.onset}, unrolled {last_change + 1}"
            elif not isinstance(tb, BothSignsInfinitely):
                return f"{name} axis {i}: unexpected {tb}"
    return None


def check_parent_children() -> str | None:
    rng = random.Random(SEED)
    specs = list(catalog.POOL_CATALOG.values())
    for _ in range(10_000):
        spec = rng.choice(specs)
        t = TileAddress(rng.randint(-5, 30), tuple(rng.randint(-(1 << 20), 1 << 20) for _ in range(spec.dim)))
        up = parent(spec, t)
        if children(spec, up.address, up.delta) != t:
            return f"children(parent({t})) != {t}"
        delta = tuple(rng.randint(0, 1) for _ in range(spec.dim))
        c = children(spec, t, delta)
        back = parent(spec, c)
        if back.address != t or back.delta != delta:
            return f"parent(children({t}, {delta})) != {t}"
    return None


def check_anchor_cells() -> str | None:
    for name, spec in catalog.POOL_CATALOG.items():
        prev = None
        for j in range(0, 65):
            cell = anchor_cell(spec, j)
            if any(b - a != 1 << (j + 1) for a, b in zip(cell.low, cell.high)):
                return f"{name}: anchor edge at layer {j}"
            if prev and not (all(a <= pa for a, pa in zip(cell.low, prev.low))
                             and all(b >= pb for b, pb in zip(cell.high, prev.high))):
                return f"{name}: anchor cells not nested at layer {j}"
            prev = cell
    return None


def check_towers(max_depth: int = 6) -> str | None:
    for name, spec in catalog.POOL_CATALOG.items():
        if spec.dim > 2:
            continue
        for j in (0, 3, max_depth):
            top = TileAddress(j, (0,) * spec.dim)
            box = footprint(spec, top)
            level = [top]
            for r in range(1, max_depth + 1):
                level = [c for t in level for c in all_children(spec, t)]
                boxes = [footprint(spec, t) for t in level]
                if len(set(level)) != 2 ** (spec.dim * r):
                    return f"{name}: descendants of {top} at depth {r} not distinct"
                if not all(box.contains(b) for b in boxes) or sum(b.volume() for b in boxes) != box.volume():
                    return f"{name}: descendants of {top} at depth {r} do not tile its footprint"
    return None


def check_path_normal_form() -> str | None:
    rng = random.Random(SEED)
    for name, spec in catalog.POOL_CATALOG.items():
        for _ in range(50):
            moves = []
            for _ in range(rng.randint(1, 12)):
                if rng.random() < 0.5:
                    moves.append("down")
                else:
                    moves.append(tuple(rng.randint(0, 1) for _ in range(spec.dim)))
            start = TileAddress(rng.randint(0, 4), tuple(rng.randint(-20, 20) for _ in range(spec.dim)))
            path = reduce_path(horospheric_walk(spec, start, moves))
            steps = ["down" if b.layer > a.layer else "up" for a, b in zip(path, path[1:])]
            if "up" in steps and "down" in steps[steps.index("up"):]:
                return f"{name}: reduced path {steps} has a down after an up"
            if len(set(path)) != len(path):
                return f"{name}: reduced path revisits a tile"
    return None


def check_window_partition() -> str | None:
    for name, spec in catalog.POOL_CATALOG.items():
        if spec.dim > 2:
            continue
        box = Box((-7,) * spec.dim, (9,) * spec.dim)
        w = build_window(spec, (-1, 2), box)
        for j in range(-1, 3):
            boxes = [footprint(spec, t) for t in w.layer_nodes(j)]
            clipped = 0
            for b in boxes:
                v = 1
                for lo, hi, wl, wh in zip(b.low, b.high, box.low, box.high):
                    v *= min(hi, wh) - max(lo, wl)
                clipped += v
            if clipped != box.volume():
                return f"{name}: layer {j} footprints do not partition the window"
    return None


def check_pool_counts() -> str | None:
    for name, spec in catalog.POOL_CATALOG.items():
        report = pool_analysis(spec)
        flood = flood_pool_count(spec)
        if flood != report.pool_count:
            return f"{name}: pool_analysis {report.pool_count}, flood fill {flood}"
    return None


def check_pool_geometry() -> str | None:
    for name, spec in catalog.POOL_CATALOG.items():
        report = pool_analysis(spec)
        axes = [w.axis for w in report.walls]
        if len(set(axes)) != len(axes) or report.support_signature != (spec.dim - report.k, report.k):
            return f"{name}: walls {report.walls}"
        # pool_id sides must be constant on each octant of a layer-0 grid
        fixed = report.wall_intersection()
        for cell in itertools.product(range(-6, 6), repeat=min(spec.dim, 2)):
            cell = cell + (0,) * (spec.dim - len(cell))
            t = TileAddress(0, cell)
            b = footprint(spec, t)
            pid = pool_id(spec, t, report)
            for s, w in zip(pid, report.walls):
                if s > 0 and b.low[w.axis] < fixed[w.axis] or s < 0 and b.high[w.axis] > fixed[w.axis]:
                    return f"{name}: {t} on wrong side of wall {w}"
        shifted = spec.shifted(1)
        if pool_analysis(shifted).k != report.k:
            return f"{name}: dropping a letter changed k"
        for h in hyperoctahedral_group(spec.dim)[:8]:
            moved = pool_analysis(spec.transformed(h))
            if moved.k != report.k:
                return f"{name}: k changed under {h}"
    return None


def check_pool_growth() -> str | None:
    for name, spec in catalog.POOL_CATALOG.items():
        if spec.dim > 2:
            continue
        report = pool_analysis(spec)
        fixed = report.wall_intersection()
        centre = [fixed.get(i, 0) for i in range(spec.dim)]
        counts = []
        for h in (8, 16, 32):
            box = Box(tuple(c - h for c in centre), tuple(c + h for c in centre))
            w = build_window(spec, (0, 0), box)
            tally: dict = {}
            for t in w.nodes:
                pid = pool_id(spec, t, report)
                tally[pid] = tally.get(pid, 0) + 1
            counts.append(tally)
        for pid in counts[0]:
            a, b, c = (cnt.get(pid, 0) for cnt in counts)
            if not (0 < a and b >= 2 * a - 2 and c >= 2 * b - 2):
                return f"{name}: pool {pid} counts {a}, {b}, {c} do not grow"
        if len(counts[0]) != report.pool_count:
            return f"{name}: {len(counts[0])} pools visible, expected {report.pool_count}"
    return None


def check_census_d1(max_k: int = 8) -> str | None:
    for name, spec in catalog.D1_CATALOG.items():
        for k in range(1, max_k + 1):
            n = census(spec, k, CensusWindow(0, 1 << (k + 2))).n_classes
            if n != 2 ** (k - 1):
                return f"{name}: N_{k} = {n}"
    return None


def check_census_burnside() -> str | None:
    for name, spec in catalog.POOL_CATALOG.items():
        if spec.dim > 2:
            continue
        for k in range(0, 4):
            n = census(spec, k, CensusWindow(0, 1 << k)).n_classes
            if n != burnside_orbits(spec.dim, k):
                return f"{name}: N_{k} = {n}, Burnside {burnside_orbits(spec.dim, k)}"
    return None


def check_stabilizers() -> str | None:
    from math import factorial
    for d in (1, 2, 3):
        if stabilizer((), d).order != 2 ** d * factorial(d):
            return f"stabilizer of the empty word in B_{d}"
    return None


def check_corona_geometry(max_k: int = 3, tiles: int = 32) -> str | None:
    for name, spec in list(catalog.D1_CATALOG.items())[:4]:
        cells = [TileAddress(0, (m,)) for m in range(-tiles // 2, tiles // 2)]
        for k in range(0, max_k + 1):
            codes = {t: corona_code(spec, t, k) for t in cells}
            sigs = {t: geometric_signature(spec, t, k) for t in cells}
            for a, b in itertools.product(cells, repeat=2):
                if (codes[a] == codes[b]) != (sigs[a] == sigs[b]):
                    return f"{name}: k={k} {a} vs {b}"
    return None


def check_local_theorem() -> str | None:
    for name, spec in catalog.D1_CATALOG.items():
        reports = [census(spec, k, CensusWindow(0, 1 << (k + 2))) for k in range(0, 5)]
        verdict = local_theorem_check(reports)
        v = verdict.first_violation
        if verdict.crystallographic or v is None or (v.k, v.condition) != (0, 2):
            return f"{name}: {verdict}"
        if any((x.k, x.condition) != (k, 1) for k, x in enumerate(verdict.violations[1:], start=1)):
            return f"{name}: condition 1 should fail for every k >= 1"
    return None


def check_adjacency_oracle() -> str | None:
    cases = [
        (catalog.D1_CATALOG["glide4"], (-3, 3), Box((-130,), (130,))),
        (catalog.POOL_CATALOG["d2-late-walls"], (-1, 1), Box((-15, -15), (17, 17))),
    ]
    for spec, layers, box in cases:
        w = build_window(spec, layers, box)
        comb = {frozenset((e.u, e.v)) for e in w.edges}
        geo = geometric_adjacency(spec, w)
        if comb != geo:
            diff = next(iter(comb ^ geo))
            return f"d={spec.dim}: adjacency mismatch at {sorted(diff)}"
    return None


def check_metric() -> str | None:
    spec = catalog.D1_CATALOG["mixed-pre"]
    for j in range(-4, 8):
        m = metric_report(spec, TileAddress(j, (3,)))
        if abs(m.layer_distance - LN2) > 1e-12 or m.a_size != 1 or m.b_size != 2:
            return f"layer {j}: {m}"
        r = embed_region(spec, TileAddress(j, (0,)))
        up = embed_region(spec, parent(spec, TileAddress(j, (0,))).address)
        if up.bottom != r.top:
            return f"layer {j}: bands do not stack"
        if abs(layer_distance(j, j + 5) - 5 * LN2) > 1e-12:
            return f"layer {j}: distance to layer {j + 5}"
    return None


SUITE: list[tuple[str, Check]] = [
    ("seqcore.letters", check_letters),
    ("seqcore.minimal_period", check_minimal_period),
    ("seqcore.essential_period", check_essential_period),
    ("seqcore.tail_behavior", check_tail_behavior),
    ("tiling.parent_children", check_parent_children),
    ("tiling.anchor_cells", check_anchor_cells),
    ("tiling.towers", check_towers),
    ("tiling.path_normal_form", check_path_normal_form),
    ("tiling.window_partition", check_window_partition),
    ("pools.counts", check_pool_counts),
    ("pools.geometry", check_pool_geometry),
    ("pools.growth", check_pool_growth),
    ("corona.census_d1", check_census_d1),
    ("corona.census_burnside", check_census_burnside),
    ("corona.stabilizers", check_stabilizers),
    ("corona.geometric_congruence", check_corona_geometry),
    ("corona.local_theorem", check_local_theorem),
    ("geometry.adjacency_oracle", check_adjacency_oracle),
    ("geometry.metric", check_metric),
]


def run_suite(suite=None) -> Iterator[tuple[str, str | None]]:
    for name, check in suite or SUITE:
        yield name, check()
