"""
Rational commutant {Z ∈ M_n(ℚ) : ZS = SZ, ZT = TZ}.

Unknowns are the n² entries of Z in row-major order (variable i·n + j is
Z_ij). Each entry of a commutator ZA − AZ is a linear form in the unknowns
with coefficients in ℚ(ζ_N); writing those coefficients over the power
basis of ℚ(ζ_N) turns one cyclotomic equation into φ(N) rational ones.
The T equations go in first: T is diagonal, so they only say Z_ij = 0
whenever T_ii ≠ T_jj, and they shrink the system before the denser S
equations are reduced.

The returned basis is the reduced echelon basis of the solution space, so
it is canonical (it depends only on the space and the variable order).
"""

import logging
from fractions import Fraction
from typing import Dict, Iterator, List, Tuple

from src.exact_arith import cyc_matrix
from src.exact_arith.cyc_matrix import CycMatrix
from src.exact_arith.cyclotomic import CyclotomicNumber
from src.exact_arith.linalg import EchelonBuilder, nullspace_from_echelon
from src.modular.modular_data import ModularData
from src.util.errors import DegenerateBraidingError

logger = logging.getLogger(__name__)

RationalMatrix = Tuple[Tuple[Fraction, ...], ...]


def _commutator_forms(a: CycMatrix) -> Iterator[Dict[int, CyclotomicNumber]]:
    """For each (i, j): the coefficients of (ZA − AZ)_ij = Σ_k Z_ik A_kj − A_ik Z_kj."""
    n = len(a)
    for i in range(n):
        for j in range(n):
            form: Dict[int, CyclotomicNumber] = {}
            for k in range(n):
                if not a[k][j].is_zero():
                    var = i * n + k
                    form[var] = form[var] + a[k][j] if var in form else a[k][j]
                if not a[i][k].is_zero():
                    var = k * n + j
                    form[var] = form[var] - a[i][k] if var in form else -a[i][k]
            yield {var: c for var, c in form.items() if not c.is_zero()}


def _rational_rows(form: Dict[int, CyclotomicNumber]) -> Iterator[Dict[int, Fraction]]:
    """Split one cyclotomic equation into its power-basis coordinates."""
    if not form:
        return
    width = len(next(iter(form.values())).coeffs)
    for t in range(width):
        row = {var: c.coeffs[t] for var, c in form.items() if c.coeffs[t]}
        if row:
            yield row


def commutant_echelon(md: ModularData) -> EchelonBuilder:
    n = md.rank
    builder = EchelonBuilder(n * n)
    for matrix in (md.t, md.s):
        for form in _commutator_forms(matrix):
            for row in _rational_rows(form):
                builder.add_row(row)
                if builder.rank == n * n:
                    return builder
    return builder


def commutant_basis(md: ModularData) -> List[RationalMatrix]:
    """
    Basis over ℚ of the matrices commuting with S and T.

    Returns:
        List of n×n Fraction matrices: the reduced echelon basis, flattened
        row-major, reshaped back into matrices
    """
    n = md.rank
    builder = commutant_echelon(md)
    vectors = nullspace_from_echelon(builder)
    logger.debug("commutant of %s: %d equations of rank %d, dimension %d", md.name, n * n, builder.rank, len(vectors))
    return [tuple(tuple(v[i * n: (i + 1) * n]) for i in range(n)) for v in vectors]


def require_nondegenerate(md: ModularData) -> None:
    """
    Raises:
        DegenerateBraidingError: S is singular
    """
    rank = cyc_matrix.rank(md.s)
    if rank != md.rank:
        raise DegenerateBraidingError(f"S of {md.name} has rank {rank} < {md.rank}; the braiding is degenerate")
