"""
Fusion rules and quantum dimensions recovered from the S matrix.

Verlinde formula:

    N_ij^k = Σ_l S_il S_jl conj(S_kl) / S_0l

For unitary S this says V_i = S·D_i·S⁻¹ with (V_i)_jk = N_ij^k and
D_i = diag(S_il / S_0l). The tensor is therefore computed in two stages:
a numpy evaluation of the sum proposes the nearest nonnegative integers,
then V_i·S = S·D_i is checked exactly in ℚ(ζ_N) for every i. Because S is
invertible the exact identity pins V_i down uniquely, so a passing check
means the proposed integers ARE the Verlinde values. A proposal that is
not close to a nonnegative integer, or that fails the exact identity,
means the data is not modular.
"""

import logging
from typing import List, Optional

import numpy as np

from src.exact_arith import cyc_matrix
from src.exact_arith.cyclotomic import CyclotomicNumber
from src.fusion_core.fusion_ring import FusionRing, fusion_matrix, verify_fusion_ring
from src.modular.modular_data import ModularData
from src.util.errors import InvalidModularDataError
from src.util.report import VerificationReport

logger = logging.getLogger(__name__)

INTEGRALITY_SLACK = 1e-6

CHECK_EIGEN_RELATION = "dimension_eigen_relation"


def _approximate_s(md: ModularData) -> np.ndarray:
    return np.array([[x.approx() for x in row] for row in md.s], dtype=complex)


def _verlinde_numeric(md: ModularData) -> np.ndarray:
    s = _approximate_s(md)
    if np.any(np.abs(s[0]) < INTEGRALITY_SLACK):
        raise InvalidModularDataError(f"S_0l vanishes for {md.name}; Verlinde formula undefined")
    # tensor[i, j, k] = Σ_l S_il S_jl conj(S_kl) / S_0l
    return np.einsum("il,jl,kl->ijk", s / s[0], s, np.conj(s))


def verlinde_fusion(md: ModularData, labels: Optional[List[str]] = None) -> FusionRing:
    """
    Fusion ring whose structure constants are given by the Verlinde formula.

    Args:
        md: Verified modular data
        labels: Sector labels for the result (default "0", "1", ...)

    Raises:
        InvalidModularDataError: Output is not a nonnegative integer tensor,
                                 or is not a verified fusion ring
    """
    n = md.rank
    numeric = _verlinde_numeric(md)
    if np.max(np.abs(numeric.imag)) > INTEGRALITY_SLACK:
        raise InvalidModularDataError(f"Verlinde output of {md.name} is not real")
    rounded = np.rint(numeric.real)
    if np.max(np.abs(numeric.real - rounded)) > INTEGRALITY_SLACK:
        i, j, k = (int(x) for x in np.unravel_index(np.argmax(np.abs(numeric.real - rounded)), rounded.shape))
        raise InvalidModularDataError(
            f"Verlinde output of {md.name} is not an integer at (i={i}, j={j}, k={k}): ≈{numeric.real[i, j, k]:.6g}"
        )
    if np.any(rounded < 0):
        raise InvalidModularDataError(f"Verlinde output of {md.name} has a negative entry")
    tensor = [[[int(rounded[i, j, k]) for k in range(n)] for j in range(n)] for i in range(n)]

    inverse_s0 = [md.s[0][l].inverse() for l in range(n)]
    for i in range(n):
        d_i = [md.s[i][l] * inverse_s0[l] for l in range(n)]
        v_i = [[tensor[i][j][k] for k in range(n)] for j in range(n)]
        lhs = cyc_matrix.int_mat_mul(v_i, md.s)
        rhs = cyc_matrix.scale_columns(md.s, d_i)
        witness = cyc_matrix.first_difference(lhs, rhs)
        if witness:
            raise InvalidModularDataError(
                f"Verlinde output of {md.name} is not exact: V_{i}·S != S·D_{i} at {witness}"
            )

    ring = FusionRing(f"verlinde({md.name})", tuple(labels or (str(i) for i in range(n))), tensor)
    report = verify_fusion_ring(ring)
    if not report.passed:
        raise InvalidModularDataError(f"Verlinde output is not a fusion ring: {report.summary()}")
    logger.debug("Verlinde tensor of %s verified exactly", md.name)
    return ring


def quantum_dimensions_exact(md: ModularData) -> List[CyclotomicNumber]:
    """d_i = S_i0 / S_00 in ℚ(ζ_N)."""
    inverse = md.s[0][0].inverse()
    return [md.s[i][0] * inverse for i in range(md.rank)]


def dimension_eigen_relation(ring: FusionRing, md: ModularData) -> VerificationReport:
    """Check M_i·d = d_i·d exactly for every sector i, d the vector of S_j0/S_00."""
    report = VerificationReport(f"{ring.name}: dimensions", [CHECK_EIGEN_RELATION])
    if ring.rank != md.rank:
        report.fail(CHECK_EIGEN_RELATION, "rank of ring and modular data differ", ring=ring.rank, modular=md.rank)
        return report
    dims = quantum_dimensions_exact(md)
    column = tuple((d,) for d in dims)
    for i in range(ring.rank):
        image = cyc_matrix.int_mat_mul(fusion_matrix(ring, i).matrix, column)
        for k in range(ring.rank):
            if image[k][0] != dims[i] * dims[k]:
                report.fail(CHECK_EIGEN_RELATION, "(M_i·d)_k != d_i·d_k", i=i, k=k)
                return report
    return report
