"""Exact q-expansions, elliptic-point expansions and LG/CY correspondence checks
for the elliptic orbifold curves P^1_{3,3,3} and P^1_{2,2,2,2}."""
from .cayley import cayley_expansions, holomorphic_limit
from .cyclotomic import CycScalar
from .fjrw import fjrw_prepotential, solve_wdvv
from .gw import gw_building_blocks, gw_prepotential
from .qforms import generators, hauptmodul
from .series import FracSeries, PowerSeries

__version__ = "0.1.0"

__all__ = [
    "CycScalar",
    "FracSeries",
    "PowerSeries",
    "cayley_expansions",
    "fjrw_prepotential",
    "generators",
    "gw_building_blocks",
    "gw_prepotential",
    "hauptmodul",
    "holomorphic_limit",
    "solve_wdvv",
]
