"""Exact dynamics of finite self-maps in their primal topology."""

from ._backend import BACKEND
from .fgraph import (
    FunctionalMap,
    RhoDecomposition,
    gen_mod_mul,
    gen_random,
    gen_tower,
    iterate,
    load_map,
    product_map,
    rho_decompose,
)
from .natset import EventuallyPeriodicNatSet
from .pointset import PointSet

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "EventuallyPeriodicNatSet",
    "FunctionalMap",
    "PointSet",
    "RhoDecomposition",
    "gen_mod_mul",
    "gen_random",
    "gen_tower",
    "iterate",
    "load_map",
    "product_map",
    "rho_decompose",
]
