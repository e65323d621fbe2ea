"""Sign sequences over the alphabet {-1,+1}^d and their periodicity data.

A tiling is encoded by the word of its anchor tail. Infinite words are
stored as eventually periodic per-coordinate words; finite words are
accepted for window-local work only.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import lcm
from typing import Iterable, Sequence

from .errors import FiniteWordMode, IndexBeyondWord, ValidationError

Symbol = tuple[int, ...]

EVENTUALLY_PERIODIC = "eventually-periodic"
FINITE_WORD = "finite-word"


def _check_letters(letters: Iterable[int], what: str) -> tuple[int, ...]:
    out = tuple(letters)
    for x in out:
        # bool is an int subclass; True would sneak through as +1
        if isinstance(x, bool) or x not in (-1, 1):
            raise ValidationError(f"{what}: letter {x!r} is not -1 or +1")
    return out


def primitive_root(word: Sequence[int]) -> tuple[int, ...]:
    """Shortest word whose repetition gives ``word``."""
    n = len(word)
    for p in range(1, n + 1):
        if n % p == 0 and all(word[i] == word[i % p] for i in range(n)):
            return tuple(word[:p])
    return tuple(word)


def _reduce_coordinate(pre: tuple[int, ...], period: tuple[int, ...]):
    period = primitive_root(period)
    # pull the last preperiod letter into the period while it matches
    while pre and pre[-1] == period[-1]:
        pre = pre[:-1]
        period = period[-1:] + period[:-1]
    return pre, period


@dataclass(frozen=True)
class SequenceSpec:
    """A d-coordinate word over {-1,+1}.

    Build with :meth:`periodic` or :meth:`finite`. Periodic coordinates are
    stored in reduced form (primitive period, shortest preperiod), so two
    specs describing the same sequence compare equal.
    """

    dim: int
    coords: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...] | None = None
    word: tuple[Symbol, ...] | None = None

    def __post_init__(self):
        if not isinstance(self.dim, int) or isinstance(self.dim, bool) or self.dim < 1:
            raise ValidationError(f"dim must be a positive integer, got {self.dim!r}")
        if (self.coords is None) == (self.word is None):
            raise ValidationError("exactly one of coords / word must be given")
        if self.coords is not None:
            if len(self.coords) != self.dim:
                raise ValidationError(f"expected {self.dim} coordinates, got {len(self.coords)}")
            reduced = []
            for i, (pre, period) in enumerate(self.coords):
                pre = _check_letters(pre, f"coordinate {i} preperiod")
                period = _check_letters(period, f"coordinate {i} period")
                if not period:
                    raise ValidationError(f"coordinate {i}: empty period")
                reduced.append(_reduce_coordinate(pre, period))
            object.__setattr__(self, "coords", tuple(reduced))
        else:
            if len(self.word) == 0:
                raise ValidationError("finite word must have at least one letter")
            word = []
            for j, letter in enumerate(self.word, start=1):
                letter = _check_letters(letter, f"letter {j}")
                if len(letter) != self.dim:
                    raise ValidationError(f"letter {j} has length {len(letter)}, expected {self.dim}")
                word.append(letter)
            object.__setattr__(self, "word", tuple(word))

    @classmethod
    def periodic(cls, coords: Sequence[tuple[Sequence[int], Sequence[int]]]) -> "SequenceSpec":
        return cls(dim=len(coords), coords=tuple((tuple(p), tuple(q)) for p, q in coords))

    @classmethod
    def finite(cls, word: Sequence[Sequence[int]]) -> "SequenceSpec":
        if not word:
            raise ValidationError("finite word must have at least one letter")
        return cls(dim=len(word[0]), word=tuple(tuple(s) for s in word))

    @classmethod
    def constant(cls, letter: Sequence[int]) -> "SequenceSpec":
        return cls.periodic([((), (x,)) for x in letter])

    @property
    def mode(self) -> str:
        return EVENTUALLY_PERIODIC if self.coords is not None else FINITE_WORD

    @property
    def is_periodic(self) -> bool:
        return self.coords is not None

    def letter(self, j: int) -> Symbol:
        return seq_letter(self, j)

    def letters(self, n: int) -> list[Symbol]:
        return [seq_letter(self, j) for j in range(1, n + 1)]

    def transformed(self, g: "SignedPermutation") -> "SequenceSpec":
        """Apply ``g`` to every letter."""
        if g.dim != self.dim:
            raise ValueError("dimension mismatch")
        if self.word is not None:
            return SequenceSpec(dim=self.dim, word=tuple(g.act(s) for s in self.word))
        coords = []
        for i in range(self.dim):
            pre, period = self.coords[g.perm[i]]
            s = g.signs[i]
            coords.append((tuple(s * x for x in pre), tuple(s * x for x in period)))
        return SequenceSpec(dim=self.dim, coords=tuple(coords))

    def shifted(self, n: int = 1) -> "SequenceSpec":
        """Drop the first ``n`` letters."""
        if self.word is not None:
            if n >= len(self.word):
                raise IndexBeyondWord("cannot drop the whole word")
            return SequenceSpec(dim=self.dim, word=self.word[n:])
        coords = []
        for pre, period in self.coords:
            pre, period = list(pre), list(period)
            for _ in range(n):
                if pre:
                    pre.pop(0)
                else:
                    period = period[1:] + period[:1]
            coords.append((tuple(pre), tuple(period)))
        return SequenceSpec(dim=self.dim, coords=tuple(coords))


def seq_letter(spec: SequenceSpec, j: int) -> Symbol:
    """The j-th letter (1-based) of the word."""
    if j < 1:
        raise IndexBeyondWord(f"letters are indexed from 1, got {j}")
    if spec.word is not None:
        if j > len(spec.word):
            raise IndexBeyondWord(f"letter {j} requested from a word of length {len(spec.word)}")
        return spec.word[j - 1]
    out = []
    for pre, period in spec.coords:
        if j <= len(pre):
            out.append(pre[j - 1])
        else:
            out.append(period[(j - len(pre) - 1) % len(period)])
    return tuple(out)


@dataclass(frozen=True)
class EventuallyConstant:
    value: int
    onset: int  # first letter index of the constant tail


@dataclass(frozen=True)
class BothSignsInfinitely:
    pass


def _require_periodic(spec: SequenceSpec):
    if spec.coords is None:
        raise FiniteWordMode("undecidable from a finite word")


def coordinate_tail_behavior(spec: SequenceSpec, i: int):
    _require_periodic(spec)
    pre, period = spec.coords[i]
    if len(period) == 1:
        return EventuallyConstant(period[0], len(pre) + 1)
    return BothSignsInfinitely()


def minimal_period(spec: SequenceSpec) -> tuple[int, int]:
    """(preperiod length, period length) of the joint sequence."""
    _require_periodic(spec)
    pre = max(len(p) for p, _ in spec.coords)
    return pre, lcm(*(len(q) for _, q in spec.coords))


# --- hyperoctahedral group -------------------------------------------------

@dataclass(frozen=True, order=True)
class SignedPermutation:
    """Element of B_d acting on vectors by ``(g.v)[i] = signs[i] * v[perm[i]]``."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError(f"{self.perm} is not a permutation")
        if len(self.signs) != len(self.perm) or any(s not in (-1, 1) for s in self.signs):
            raise ValueError(f"bad sign vector {self.signs}")

    @classmethod
    def identity(cls, d: int) -> "SignedPermutation":
        return cls(tuple(range(d)), (1,) * d)

    @classmethod
    def flip(cls, d: int) -> "SignedPermutation":
        """Negate every coordinate."""
        return cls(tuple(range(d)), (-1,) * d)

    @property
    def dim(self) -> int:
        return len(self.perm)

    @property
    def is_identity(self) -> bool:
        return self.perm == tuple(range(self.dim)) and all(s == 1 for s in self.signs)

    def act(self, v: Sequence) -> tuple:
        return tuple(s * v[p] for s, p in zip(self.signs, self.perm))

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        # (self * other).act(v) == self.act(other.act(v))
        perm = tuple(other.perm[self.perm[i]] for i in range(self.dim))
        signs = tuple(self.signs[i] * other.signs[self.perm[i]] for i in range(self.dim))
        return SignedPermutation(perm, signs)

    def inverse(self) -> "SignedPermutation":
        d = self.dim
        inv = [0] * d
        for i, p in enumerate(self.perm):
            inv[p] = i
        return SignedPermutation(tuple(inv), tuple(self.signs[inv[j]] for j in range(d)))

    def order(self) -> int:
        g, n = self, 1
        while not g.is_identity:
            g, n = g * self, n + 1
        return n

    def to_json(self) -> dict:
        return {"perm": list(self.perm), "signs": list(self.signs)}

    def __str__(self):
        if self.is_identity:
            return "identity"
        if self.perm == tuple(range(self.dim)) and all(s == -1 for s in self.signs):
            return "sign-flip"
        body = ",".join(("-" if s < 0 else "") + f"x{p}" for s, p in zip(self.signs, self.perm))
        return f"({body})"


@lru_cache(maxsize=None)
def hyperoctahedral_group(d: int) -> tuple[SignedPermutation, ...]:
    """All 2^d * d! elements of B_d, identity first."""
    out = []
    for perm in itertools.permutations(range(d)):
        for signs in itertools.product((1, -1), repeat=d):
            out.append(SignedPermutation(perm, signs))
    return tuple(out)


def essential_period(spec: SequenceSpec) -> tuple[int, SignedPermutation]:
    """Least shift q with a twist g in B_d such that g.s[j] == s[j+q] cofinally.

    Returns ``(q, g)``. Among witnesses for the least q the first one in the
    enumeration order (permutations lexicographically, identity first) wins.
    """
    _require_periodic(spec)
    pre, q_min = minimal_period(spec)
    d = spec.dim
    # one full period past the preperiod decides cofinal behaviour
    window = [seq_letter(spec, j) for j in range(pre + 1, pre + 2 * q_min + 1)]
    columns = [[w[i] for w in window] for i in range(d)]
    for q in range(1, q_min + 1):
        if q_min % q:
            continue
        for perm in itertools.permutations(range(d)):
            signs = []
            for i in range(d):
                src, dst = columns[perm[i]], columns[i]
                s = dst[q] * src[0]
                if any(dst[j + q] != s * src[j] for j in range(q_min)):
                    break
                signs.append(s)
            else:
                return q, SignedPermutation(tuple(perm), tuple(signs))
    raise AssertionError("the minimal period always qualifies")
