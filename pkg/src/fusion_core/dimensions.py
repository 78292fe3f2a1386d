"""
Perron–Frobenius (quantum) dimensions of a fusion ring as certified intervals.

The fusion matrices commute and their sum A = Σ_i M_i is entrywise
positive, so A has a unique positive Perron vector v and every M_i has v as
its Perron eigenvector. numpy power iteration supplies an approximation of
v; the Collatz–Wielandt inequality

    min_k (M v)_k / v_k  ≤  ρ(M)  ≤  max_k (M v)_k / v_k     (v > 0)

then gives true bounds evaluated in exact rational arithmetic, whatever the
quality of the floating point vector.
"""

import logging
from fractions import Fraction
from typing import List

import numpy as np

from src.exact_arith.interval import Interval
from src.fusion_core.fusion_ring import FusionRing

logger = logging.getLogger(__name__)

MAX_ITERATIONS = 2000
TOLERANCE = 1e-15


def perron_vector(ring: FusionRing) -> np.ndarray:
    """Normalized positive eigenvector of Σ_i M_i (power iteration on Σ M_i + I)."""
    n = ring.rank
    # Σ_i M_i[k][j] = Σ_i N_ij^k
    total = ring.array.sum(axis=0).T.astype(float) + np.eye(n)
    vector = np.ones(n) / np.sqrt(n)
    for iteration in range(MAX_ITERATIONS):
        nxt = total @ vector
        nxt /= np.linalg.norm(nxt)
        if np.max(np.abs(nxt - vector)) < TOLERANCE:
            vector = nxt
            break
        vector = nxt
    logger.debug("perron vector of %s after %d iterations", ring.name, iteration + 1)
    return vector


def quantum_dimensions(ring: FusionRing) -> List[Interval]:
    """
    Certified enclosures of d_i = ρ(M_i).

    Returns:
        List[Interval]: One interval per sector; the vacuum is exactly [1, 1]
                        and every lower bound is at least 1
    """
    n = ring.rank
    vector = [Fraction(float(x)) for x in perron_vector(ring)]
    if any(x <= 0 for x in vector):
        # all-ones is positive, so the bounds stay valid (only looser)
        vector = [Fraction(1)] * n

    dims = []
    for i in range(n):
        ratios = []
        for k in range(n):
            image = sum(ring.fusion[i][j][k] * vector[j] for j in range(n))
            ratios.append(image / vector[k])
        lo, hi = max(min(ratios), Fraction(1)), max(ratios)
        dims.append(Interval(min(lo, hi), hi))
    dims[ring.vacuum_index] = Interval.point(1)
    return dims
