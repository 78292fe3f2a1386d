"""
Smith normal form diagonal of an integer matrix.

A KK class is an endomorphism of K₀ ≅ ℤⁿ; its elementary divisors
describe the cokernel ℤⁿ / a·ℤⁿ up to isomorphism, so they are the natural
integer invariants to print next to a class (rank and |det| follow from
them). The invariant factors come from sympy's DomainMatrix normal forms
over ZZ; only the diagonal is kept.
"""

from typing import List, Sequence, Union

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

from src.kk_model.kk_class import KKClass


def elementary_divisors(a: Union[KKClass, Sequence[Sequence[int]]]) -> List[int]:
    """
    Nonzero invariant factors d_1 | d_2 | … of an integer matrix.

    Args:
        a: KK class or plain integer matrix (rectangular allowed)

    Returns:
        List[int]: Positive divisors; their count is the rank

    Example:
        elementary_divisors([[2, 4], [6, 8]]) -> [2, 4]
    """
    rows = a.matrix if isinstance(a, KKClass) else a
    m = [[ZZ(int(x)) for x in row] for row in rows]
    if not m or not m[0]:
        return []
    factors = invariant_factors(DomainMatrix(m, (len(m), len(m[0])), ZZ))
    # zeros belong to the kernel; the nonzero factors form the divisibility chain
    return sorted(abs(int(d)) for d in factors if d)
