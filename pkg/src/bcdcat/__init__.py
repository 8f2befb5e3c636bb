"""Exact data for the B/C/D-series ribbon categories at roots of unity.

Quantum dimensions, twists, transparent objects, modularizations,
S-matrices, fusion rules, Verlinde dimensions and refinement identities,
all in exact cyclotomic arithmetic.
"""

from .catdata import (modularizability, qdim_general, qdim_specialized, transparent_objects,
                      twist)
from .cyclotomic import CycNum, cyc_rational, cyc_root
from .modularize import modular_table
from .partitions import Partition, enumerate_box
from .series import (ConsistencyError, InvalidParametersError, SeriesSpec, level_rank_dual,
                     make_spec)
from .smatrix import build_smatrix, fusion_from_S
from .verlinde import verlinde_closed, verlinde_from_table

__version__ = "0.1.0"

__all__ = [
    "CycNum",
    "cyc_rational",
    "cyc_root",
    "Partition",
    "enumerate_box",
    "SeriesSpec",
    "make_spec",
    "level_rank_dual",
    "InvalidParametersError",
    "ConsistencyError",
    "qdim_general",
    "qdim_specialized",
    "twist",
    "transparent_objects",
    "modularizability",
    "modular_table",
    "build_smatrix",
    "fusion_from_S",
    "verlinde_closed",
    "verlinde_from_table",
]
