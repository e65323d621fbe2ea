import itertools

import pytest
from hypothesis import given, strategies as st

from horotile.errors import FiniteWordMode, IndexBeyondWord
from horotile.seqcore import (
    BothSignsInfinitely,
    EventuallyConstant,
    SequenceSpec,
    SignedPermutation,
    coordinate_tail_behavior,
    essential_period,
    hyperoctahedral_group,
    minimal_period,
    primitive_root,
    seq_letter,
)
from horotile.verify import brute_is_cofinal_period, naive_letters

P = SequenceSpec.periodic
signs = st.sampled_from((1, -1))


@st.composite
def specs(draw, max_dim=3, max_len=4):
    d = draw(st.integers(1, max_dim))
    coords = [(tuple(draw(st.lists(signs, max_size=max_len))),
               tuple(draw(st.lists(signs, min_size=1, max_size=max_len)))) for _ in range(d)]
    return P(coords)


def test_letter_examples():
    s = P([((1,), (-1, 1))])
    assert seq_letter(s, 1) == (1,)
    assert seq_letter(s, 4) == (-1,)
    assert seq_letter(P([((), (1,)), ((), (1, -1))]), 2) == (1, -1)


def test_letter_errors():
    with pytest.raises(IndexBeyondWord):
        seq_letter(SequenceSpec.finite([(1,), (-1,)]), 3)
    with pytest.raises(IndexBeyondWord):
        seq_letter(P([((), (1,))]), 0)


def test_validation():
    with pytest.raises(ValueError):
        P([((), ())])
    with pytest.raises(ValueError):
        P([((), (0,))])
    with pytest.raises(ValueError):
        SequenceSpec(dim=2, coords=(((), (1,)),))


def test_canonical_form():
    # (+1,+1) repeats (+1); the last preperiod letter rotates into the period
    assert P([((), (1, 1))]) == P([((), (1,))])
    assert P([((-1, 1), (-1, 1))]) == P([((), (-1, 1))])
    assert primitive_root((1, -1, 1, -1)) == (1, -1)


def test_tail_behavior_examples():
    assert coordinate_tail_behavior(P([((-1,), (1,))]), 0) == EventuallyConstant(1, 2)
    assert isinstance(coordinate_tail_behavior(P([((), (1, -1))]), 0), BothSignsInfinitely)
    s = P([((), (-1,)), ((), (1, 1, -1))])
    assert coordinate_tail_behavior(s, 0) == EventuallyConstant(-1, 1)
    with pytest.raises(FiniteWordMode):
        coordinate_tail_behavior(SequenceSpec.finite([(1,)]), 0)


def test_minimal_period_examples():
    assert minimal_period(P([((), (1, 1))])) == (0, 1)
    assert minimal_period(P([((), (1, 1, -1, -1))])) == (0, 4)
    s = P([((), (1, -1)), ((), (1, -1, 1))])
    assert minimal_period(s) == (0, 6)
    # brute force: first cofinal shift within 64 letters
    letters = naive_letters(s, 64)
    first = next(p for p in range(1, 32) if all(letters[j] == letters[j + p] for j in range(64 - p)))
    assert first == 6


def test_essential_period_examples():
    q, g = essential_period(P([((), (1, 1, -1, -1))]))
    assert q == 2 and g == SignedPermutation.flip(1)
    assert essential_period(P([((), (1,))])) == (1, SignedPermutation.identity(1))
    assert essential_period(P([((), (1, 1, -1))]))[0] == 3


def test_group_structure():
    for d in (1, 2, 3):
        group = hyperoctahedral_group(d)
        assert len(group) == 2 ** d * [1, 1, 2, 6][d]
        assert group[0].is_identity
        for g, h in itertools.product(group[:10], repeat=2):
            v = tuple(range(1, d + 1))
            assert (g * h).act(v) == g.act(h.act(v))
            assert (g * g.inverse()).is_identity


@given(specs())
def test_minimal_period_matches_brute_force(spec):
    pre, q = minimal_period(spec)
    assert brute_is_cofinal_period(spec, q)
    assert not any(brute_is_cofinal_period(spec, p) for p in range(1, q))
    # the preperiod cannot be shortened
    if pre:
        s = naive_letters(spec, pre + 3 * q)
        assert s[pre - 1] != s[pre - 1 + q]


@given(specs(max_dim=2), st.data())
def test_essential_period_brute_force_and_invariance(spec, data):
    pre, q = minimal_period(spec)
    qe, g = essential_period(spec)
    s = naive_letters(spec, pre + 3 * q + 1)
    ok = lambda c, h: all(h.act(s[j]) == s[j + c] for j in range(pre, pre + 2 * q))
    brute = min(c for c in range(1, q + 1) if any(ok(c, h) for h in hyperoctahedral_group(spec.dim)))
    assert qe == brute and ok(qe, g)
    h = data.draw(st.sampled_from(hyperoctahedral_group(spec.dim)))
    assert essential_period(spec.transformed(h))[0] == qe


@given(specs())
def test_dropping_first_letter_keeps_tail(spec):
    pre, q = minimal_period(spec)
    shifted = spec.shifted(1)
    assert minimal_period(shifted)[1] == q
    assert essential_period(shifted)[0] == essential_period(spec)[0]
    for i in range(spec.dim):
        a, b = coordinate_tail_behavior(spec, i), coordinate_tail_behavior(shifted, i)
        assert type(a) is type(b)
