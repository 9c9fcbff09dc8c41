"""Clebsch-Gordan coefficients of osp(1|2) as dual -1 Hahn polynomials, and the
spinorial oscillator model that realizes them."""
from .dualhahn import DualHahnParams, orthogonality_defect
from .errors import OspHahnError
from .osprep import RepLabel, TruncatedOperator, build_generators, q12
from .overlaps import OverlapMatrix, overlap_closed_form, overlap_matrix
from .spinor import CartesianState, PolarState, QEigenvector, q_eigenvector

__all__ = [
    "CartesianState", "DualHahnParams", "OspHahnError", "OverlapMatrix", "PolarState", "QEigenvector",
    "RepLabel", "TruncatedOperator", "build_generators", "orthogonality_defect", "overlap_closed_form",
    "overlap_matrix", "q12", "q_eigenvector",
]
__version__ = "0.1.0"
