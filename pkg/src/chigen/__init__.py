"""Generating chromatic numbers of finite groups.

chi_gen(G) is the least k such that some k-coloring of G has no color class
generating G; it equals sigma(G) - 1, where sigma(G) is the least number of
proper subgroups whose union is G (infinite for cyclic G).
"""

from .cover import INFINITE, ChiGenResult, CoverCertificate, coloring_oracle, min_cover, sigma_search
from .groups import GroupTable, build, closure, quotient
from .lattice import all_subgroups, frattini, maximal_subgroups
from .specs import parse_spec
from .theorems import chigen, chigen_dihedral, chigen_nilpotent, chigen_semidirect
from .vecspace import FiniteField, VecSpace, sigma_vec

__all__ = [
    "INFINITE",
    "ChiGenResult",
    "CoverCertificate",
    "FiniteField",
    "GroupTable",
    "VecSpace",
    "all_subgroups",
    "build",
    "chigen",
    "chigen_dihedral",
    "chigen_nilpotent",
    "chigen_semidirect",
    "closure",
    "coloring_oracle",
    "frattini",
    "maximal_subgroups",
    "min_cover",
    "parse_spec",
    "quotient",
    "sigma_search",
    "sigma_vec",
]
