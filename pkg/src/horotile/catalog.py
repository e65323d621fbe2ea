"""Named specs used by the verification suite, the tests, and the CLI."""
from __future__ import annotations

from .seqcore import SequenceSpec

P = SequenceSpec.periodic

# d = 1, mixing one- and two-pool tilings, glide and non-glide periods
D1_CATALOG: dict[str, SequenceSpec] = {
    "plus": P([((), (1,))]),
    "minus": P([((), (-1,))]),
    "alternating": P([((), (1, -1))]),
    "glide4": P([((), (1, 1, -1, -1))]),
    "late-plus": P([((-1,), (1,))]),
    "late-minus": P([((1, 1, -1), (-1,))]),
    "two-one": P([((), (1, 1, -1))]),
    "one-two": P([((1,), (1, -1, -1))]),
    "mixed-pre": P([((1, -1, 1), (-1, 1, 1))]),
    "long": P([((-1, -1), (1, -1, 1, 1, -1))]),
}


def pool_spec(d: int, k: int) -> SequenceSpec:
    """A spec with exactly ``k`` eventually constant coordinates (the first k)."""
    if not 0 <= k <= d:
        raise ValueError("need 0 <= k <= d")
    coords = []
    for i in range(d):
        if i < k:
            # odd axes get a late wall (onset at layer 1)
            coords.append(((), (1,)) if i % 2 == 0 else ((1,), (-1,)))
        else:
            coords.append(((), (1, -1) if i % 2 == 0 else (-1, 1)))
    return P(coords)


POOL_CATALOG: dict[str, SequenceSpec] = {
    **{f"d1-{name}": spec for name, spec in D1_CATALOG.items()},
    **{f"pool-d{d}-k{k}": pool_spec(d, k) for d in (2, 3) for k in range(d + 1)},
    "d2-late-walls": P([((1, 1), (-1,)), ((-1,), (1,))]),
    "d2-glide": P([((), (1, 1, -1, -1)), ((), (1, -1))]),
    "d2-swap": P([((), (1, -1)), ((), (-1, 1))]),
    "d2-one-late": P([((-1, 1), (1,)), ((1,), (1, -1, -1))]),
    "d3-mixed": P([((), (1,)), ((1,), (-1, 1)), ((-1,), (-1,))]),
}

# (name, spec, assume_aperiodic, bounded_axes, expected group, expected pretty name)
SYMMETRY_TABLE = [
    ("d1 [+1]", P([((), (1,))]), False, (), "Z x B1", "Z x C2"),
    ("d1 [-1]", P([((), (-1,))]), False, (), "Z x B1", "Z x C2"),
    ("d1 [+1,-1]", P([((), (1, -1))]), False, (), "Z x B0", "Z"),
    ("d1 [1,1,-1,-1]", P([((), (1, 1, -1, -1))]), False, (), "Z x B0", "Z"),
    ("d1 pre[-1] [+1]", P([((-1,), (1,))]), False, (), "Z x B1", "Z x C2"),
    ("d1 aperiodic one pool", SequenceSpec.finite([(1,), (-1,), (-1,), (1,), (-1,), (1,), (1,), (-1,)]),
     True, (), "B0", "trivial"),
    ("d2 k=0", P([((), (1, -1)), ((), (1, 1, -1))]), False, (), "Z x B0", "Z"),
    ("d2 k=1", P([((), (-1,)), ((), (1, -1))]), False, (), "Z x B1", "Z x C2"),
    ("d2 k=2 periodic", P([((), (1,)), ((1,), (-1,))]), False, (), "Z x B2", "Z x B2"),
    ("d2 aperiodic k=1", SequenceSpec.finite([(1, 1), (1, -1), (1, -1), (1, 1), (1, -1)]),
     True, (0,), "B1", "C2"),
    ("d3 k=3 periodic", P([((), (1,)), ((), (-1,)), ((1,), (1,))]), False, (), "Z x B3", "Z x B3"),
    ("d3 aperiodic k=2", SequenceSpec.finite([(1, -1, 1), (1, -1, -1), (1, -1, -1)]),
     True, (0, 1), "B2", "B2"),
]
