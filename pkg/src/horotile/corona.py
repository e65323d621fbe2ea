"""Coronae, their canonical codes and the corona census.

A k-corona class is represented by the first k letters of the centre's
tail word, taken up to the diagonal action of B_d (one signed permutation
applied to every letter). :func:`geometric_congruent` checks that model
directly against the footprint geometry.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import InsufficientData, WindowTooSmall
from .seqcore import SequenceSpec, SignedPermutation, Symbol, hyperoctahedral_group
from .tiling import (
    TileAddress,
    TileComplex,
    bfs_ball,
    footprint,
    induced_complex,
    parent,
)


@dataclass(frozen=True)
class Corona:
    center: TileAddress
    radius: int
    complex: TileComplex

    @property
    def members(self) -> tuple[TileAddress, ...]:
        return self.complex.nodes


def corona_complex(spec: SequenceSpec, t: TileAddress, k: int) -> Corona:
    """All tiles within ``k`` facet-adjacency steps of ``t``."""
    if k < 0:
        raise ValueError("corona radius must be >= 0")
    return Corona(t, k, induced_complex(spec, bfs_ball(spec, t, k)))


@dataclass(frozen=True, order=True)
class CoronaCode:
    word: tuple[Symbol, ...]

    @property
    def k(self) -> int:
        return len(self.word)

    def __str__(self):
        if not self.word:
            return "()"
        return " ".join("".join("+" if x > 0 else "-" for x in s) for s in self.word)

    def to_json(self) -> list[list[int]]:
        return [list(s) for s in self.word]


def act_on_word(g: SignedPermutation, word: Sequence[Symbol]) -> tuple[Symbol, ...]:
    return tuple(g.act(s) for s in word)


@lru_cache(maxsize=1 << 16)
def canonical_word(word: tuple[Symbol, ...], d: int) -> tuple[Symbol, ...]:
    return min(act_on_word(g, word) for g in hyperoctahedral_group(d))


def prefix_word(spec: SequenceSpec, t: TileAddress, k: int) -> tuple[Symbol, ...]:
    word = []
    for _ in range(k):
        step = parent(spec, t)
        word.append(step.symbol)
        t = step.address
    return tuple(word)


def corona_code(spec: SequenceSpec, t: TileAddress, k: int) -> CoronaCode:
    return CoronaCode(canonical_word(prefix_word(spec, t, k), spec.dim))


@dataclass(frozen=True)
class Stabilizer:
    elements: tuple[SignedPermutation, ...]
    generators: tuple[SignedPermutation, ...]

    @property
    def order(self) -> int:
        return len(self.elements)


def _closure(gens: Sequence[SignedPermutation], d: int) -> set[SignedPermutation]:
    group = {SignedPermutation.identity(d)}
    frontier = list(group)
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                gh = g * h
                if gh not in group:
                    group.add(gh)
                    nxt.append(gh)
        frontier = nxt
    return group


def stabilizer(code: CoronaCode | Sequence[Symbol], d: int | None = None) -> Stabilizer:
    """Elements of B_d fixing every letter of the word."""
    word = code.word if isinstance(code, CoronaCode) else tuple(code)
    if d is None:
        if not word:
            raise ValueError("dimension needed for the empty word")
        d = len(word[0])
    elems = tuple(g for g in hyperoctahedral_group(d) if all(g.act(s) == s for s in word))
    gens: list[SignedPermutation] = []
    span = {SignedPermutation.identity(d)}
    for g in elems:
        if g not in span:
            gens.append(g)
            span = _closure(gens, d)
    return Stabilizer(elems, tuple(gens))


def burnside_orbits(d: int, k: int) -> int:
    """Orbits of ({-1,+1}^d)^k under diagonal B_d, by Burnside's lemma."""
    letters = list(itertools.product((-1, 1), repeat=d))
    group = hyperoctahedral_group(d)
    total = 0
    for g in group:
        fixed = sum(1 for s in letters if g.act(s) == s)
        total += fixed ** k
    q, r = divmod(total, len(group))
    assert r == 0, "Burnside sum must divide evenly"
    return q


# --- census -----------------------------------------------------------------

@dataclass(frozen=True)
class CensusWindow:
    """Cells ``center - half_width .. center + half_width`` (per coordinate) of one layer."""

    layer: int
    half_width: int
    center: tuple[int, ...] | None = None

    def tiles(self, d: int) -> list[TileAddress]:
        center = self.center or (0,) * d
        ranges = [range(c - self.half_width, c + self.half_width + 1) for c in center]
        return [TileAddress(self.layer, cell) for cell in itertools.product(*ranges)]

    def to_json(self, d: int) -> dict:
        return {"layer": self.layer, "half_width": self.half_width,
                "center": list(self.center or (0,) * d)}


@dataclass(frozen=True)
class CoronaClass:
    code: CoronaCode
    witness: TileAddress
    multiplicity: int
    stabilizer_order: int

    def to_json(self) -> dict:
        return {"code": self.code.to_json(), "code_str": str(self.code),
                "witness": self.witness.to_json(), "multiplicity": self.multiplicity,
                "stabilizer_order": self.stabilizer_order}


@dataclass(frozen=True)
class CensusReport:
    dim: int
    k: int
    window: CensusWindow
    classes: tuple[CoronaClass, ...]

    @property
    def n_classes(self) -> int:
        return len(self.classes)

    def to_json(self) -> dict:
        return {"k": self.k, "window": self.window.to_json(self.dim), "N_k": self.n_classes,
                "classes": [c.to_json() for c in self.classes]}


def min_census_width(k: int) -> int:
    """Consecutive cells per coordinate needed to see every length-k prefix."""
    return 1 << k


def census(spec: SequenceSpec, k: int, window: CensusWindow) -> CensusReport:
    if 2 * window.half_width + 1 < min_census_width(k):
        raise WindowTooSmall(
            f"k={k} needs {min_census_width(k)} cells per coordinate, window has "
            f"{2 * window.half_width + 1}")
    counts: Counter[CoronaCode] = Counter()
    witness: dict[CoronaCode, TileAddress] = {}
    for t in window.tiles(spec.dim):
        code = corona_code(spec, t, k)
        counts[code] += 1
        witness.setdefault(code, t)
    classes = tuple(
        CoronaClass(code, witness[code], counts[code], stabilizer(code, spec.dim).order)
        for code in sorted(counts)
    )
    return CensusReport(spec.dim, k, window, classes)


# --- local theorem ----------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    k: int
    condition: int
    detail: str

    def __str__(self):
        return f"condition {self.condition} at k={self.k}: {self.detail}"


@dataclass(frozen=True)
class LocalVerdict:
    crystallographic: bool
    k: int | None
    violations: tuple[Violation, ...]

    @property
    def first_violation(self) -> Violation | None:
        return self.violations[0] if self.violations else None

    def __str__(self):
        if self.crystallographic:
            return f"Crystallographic({self.k})"
        return f"NonCrystallographic({self.first_violation})"

    def to_json(self) -> dict:
        return {
            "verdict": "Crystallographic" if self.crystallographic else "NonCrystallographic",
            "k": self.k,
            "first_violation": None if not self.violations else
            {"k": self.violations[0].k, "condition": self.violations[0].condition,
             "detail": self.violations[0].detail},
            "violations": [{"k": v.k, "condition": v.condition, "detail": v.detail}
                           for v in self.violations],
        }


def _pair_classes(lo: CensusReport, hi: CensusReport):
    """Match each (k+1)-class to the k-class of its truncated code, if codes allow it."""
    by_code = {c.code: c for c in lo.classes}
    pairs = []
    for c in hi.classes:
        word = c.code.word[: lo.k]
        if word and lo.dim:
            word = canonical_word(word, lo.dim)
        match = by_code.get(CoronaCode(word))
        if match is None:
            return None
        pairs.append((match, c))
    if len({id(m) for m, _ in pairs}) != len(pairs):
        return None
    return pairs


def local_theorem_check(reports: Sequence[CensusReport]) -> LocalVerdict:
    """Apply the two stabilisation conditions to censuses for k = 0..K."""
    reports = sorted(reports, key=lambda r: r.k)
    if len(reports) < 2:
        raise InsufficientData("need censuses for at least k = 0 and k = 1")
    ks = [r.k for r in reports]
    if ks != list(range(ks[0], ks[0] + len(ks))):
        raise InsufficientData(f"census radii must be consecutive, got {ks}")
    violations = []
    for lo, hi in zip(reports, reports[1:]):
        if hi.n_classes != lo.n_classes:
            violations.append(Violation(lo.k, 1, f"N_{hi.k}={hi.n_classes} != N_{lo.k}={lo.n_classes}"))
            continue
        pairs = _pair_classes(lo, hi)
        if pairs is None:
            # codes do not restrict onto each other; compare the multisets of orders
            same = sorted(c.stabilizer_order for c in lo.classes) == \
                sorted(c.stabilizer_order for c in hi.classes)
            detail = "stabilizer orders differ"
        else:
            bad = [(a, b) for a, b in pairs if a.stabilizer_order != b.stabilizer_order]
            same = not bad
            detail = "" if same else (
                f"class {bad[0][0].code}: |S_{lo.k}|={bad[0][0].stabilizer_order}, "
                f"|S_{hi.k}|={bad[0][1].stabilizer_order}")
        if same:
            return LocalVerdict(True, lo.k, tuple(violations))
        violations.append(Violation(lo.k, 2, detail))
    return LocalVerdict(False, None, tuple(violations))


# --- geometric oracle ---------------------------------------------------------

def _relative_regions(spec: SequenceSpec, corona: Corona):
    """Corona tiles as (layer offset, footprint) relative to the centre's low corner."""
    base = footprint(spec, corona.center).low
    out = []
    for t in corona.members:
        box = footprint(spec, t)
        out.append((t.layer - corona.center.layer,
                    tuple(Fraction(x - b) for x, b in zip(box.low, base)),
                    tuple(Fraction(x - b) for x, b in zip(box.high, base))))
    return out


def geometric_signature(spec: SequenceSpec, t: TileAddress, k: int) -> tuple:
    """Congruence invariant of the k-corona of ``t`` among same-layer centres.

    The maps that fix the ideal point, every horosphere and the centre's
    footprint act on E0 as the symmetries ``x -> g x + v`` of that cube, one
    for each g in B_d. They form a group, so the least image of the corona's
    relative regions is a complete invariant: two same-layer centres are
    congruent exactly when their signatures agree.
    """
    w = footprint(spec, t).high[0] - footprint(spec, t).low[0]
    regions = _relative_regions(spec, corona_complex(spec, t, k))
    best = None
    for g in hyperoctahedral_group(spec.dim):
        shift = tuple(w if s < 0 else 0 for s in g.signs)
        image = []
        for dl, lo, hi in regions:
            a, b = g.act(lo), g.act(hi)
            image.append((dl, tuple(min(x, y) + c for x, y, c in zip(a, b, shift)),
                          tuple(max(x, y) + c for x, y, c in zip(a, b, shift))))
        image.sort()
        if best is None or image < best:
            best = image
    return tuple(best)


def geometric_congruent(spec: SequenceSpec, t1: TileAddress, t2: TileAddress, k: int) -> bool:
    """Is there an isometry taking t1 to t2 and C_k(t1) onto C_k(t2)? (same layer only)"""
    if t1.layer != t2.layer:
        raise ValueError("centres must lie in the same layer")
    return geometric_signature(spec, t1, k) == geometric_signature(spec, t2, k)
