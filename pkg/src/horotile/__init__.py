"""Horoball-layer tilings of hyperbolic space built from sign sequences."""
from .seqcore import SequenceSpec, SignedPermutation, essential_period, minimal_period
from .tiling import TileAddress, build_window, children, footprint, parent
from .pools import classify_symmetry, flood_pools, pool_analysis
from .corona import CensusWindow, census, corona_code, local_theorem_check

__version__ = "0.1.0"

__all__ = [
    "SequenceSpec", "SignedPermutation", "essential_period", "minimal_period",
    "TileAddress", "build_window", "children", "footprint", "parent",
    "classify_symmetry", "flood_pools", "pool_analysis",
    "CensusWindow", "census", "corona_code", "local_theorem_check",
]
