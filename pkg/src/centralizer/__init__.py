"""Exact structure theory for centralizers of Jordan-block matrices.

The main entry points are :class:`~centralizer.jordan.JordanType` for
describing an instance, :func:`~centralizer.core.structured_basis` and
friends for the algebra itself, :mod:`centralizer.cellular` and
:mod:`centralizer.frobenius` for the two structural verifications, and
:mod:`centralizer.oracle` for brute-force cross-checks.
"""

__version__ = "0.1.0"

from .arith import GF, QQ, ZZ, RingSpec
from .core import (AlgebraElement, BasisElement, basis_matrix, multiply_basis,
                   rank_formula, structured_basis)
from .jordan import JordanType, assemble_matrix, block_index

__all__ = [
    "GF", "QQ", "ZZ", "RingSpec",
    "AlgebraElement", "BasisElement", "basis_matrix", "multiply_basis",
    "rank_formula", "structured_basis",
    "JordanType", "assemble_matrix", "block_index",
]
