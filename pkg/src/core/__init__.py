"""
scarfdz Core
"""

from .monomial import MonomialIdeal, minimalize, is_artinian, is_generic
from .staircase import outer_corners, colength, partition_bruteforce, partition_cuboid
from .scarf import build_scarf
from .cellular import LabeledComplex, scarf_to_complex, differentials
from .derivative import d_sigma_phi, verify_theorem_main, pairing_multiplicity

__all__ = [
    "MonomialIdeal",
    "minimalize",
    "is_artinian",
    "is_generic",
    "outer_corners",
    "colength",
    "partition_bruteforce",
    "partition_cuboid",
    "build_scarf",
    "LabeledComplex",
    "scarf_to_complex",
    "differentials",
    "d_sigma_phi",
    "verify_theorem_main",
    "pairing_multiplicity",
]
