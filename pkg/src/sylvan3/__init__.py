"""Sylvan resolutions of monomial ideals in k[x, y, z].

The minimal free resolution of a monomial ideal in three variables has
differentials with rational entries determined by combinatorics of Koszul
simplicial complexes along lattice paths.  Two independent evaluations are
provided: a literal sum over hedgerows and chain-link fences
(:mod:`sylvan3.fence_oracle`) and explicit per-path formulas
(:mod:`sylvan3.closed_form`).
"""

from .closed_form import entry_F0F1, entry_F1F2, grid_count, sylvan_matrix_closed
from .fence_oracle import SylvanMatrix, sylvan_matrix_oracle
from .ideal_staircase import MonomialIdeal, parse_degree, parse_ideal
from .koszul import classify_shape, koszul_complex, sign
from .resolution import build_resolution, verify_complex, verify_exact_and_minimal

__version__ = "0.1.0"

__all__ = [
    "MonomialIdeal",
    "SylvanMatrix",
    "build_resolution",
    "classify_shape",
    "entry_F0F1",
    "entry_F1F2",
    "grid_count",
    "koszul_complex",
    "parse_degree",
    "parse_ideal",
    "sign",
    "sylvan_matrix_closed",
    "sylvan_matrix_oracle",
    "verify_complex",
    "verify_exact_and_minimal",
]
