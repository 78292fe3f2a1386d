"""
Exact modular data (S, T) and the SL(2,ℤ) checks.

All entries live in one ambient field ℚ(ζ_N). T is stored with the global
phase e^{−2πic/24}, so T_ii = ζ_N^{N(h_i − c/24)} and N must make every
such exponent an integer. Checks are exact: unitarity is S·S̄ᵀ = I as
cyclotomic numbers, not up to a tolerance.

Checks run by verify_modular_data (report names):
    symmetry            S = Sᵀ
    unitarity           S·S̄ᵀ = I
    nondegeneracy       rank S = n
    t_diagonal          T is diagonal
    t_phases            T_ii = e^{2πi(h_i − c/24)}
    charge_conjugation  S² = C a permutation matrix with C² = I
    modular_relation    (ST)³ = S²
    positivity          S_00 > 0, S_i0 real and d_i = S_i0/S_00 ≥ 1

See also:
    - verlinde.py: fusion rules and dimensions recovered from S
    - commutant.py / invariants.py: modular invariant classification
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from src.exact_arith import cyc_matrix
from src.exact_arith.cyc_matrix import CycMatrix
from src.exact_arith.cyclotomic import CyclotomicNumber, zeta
from src.exact_arith.rational import parse_rational
from src.util.errors import DimensionMismatchError, InvalidModularDataError
from src.util.report import VerificationReport

logger = logging.getLogger(__name__)

CHECK_SYMMETRY = "symmetry"
CHECK_UNITARITY = "unitarity"
CHECK_NONDEGENERACY = "nondegeneracy"
CHECK_T_DIAGONAL = "t_diagonal"
CHECK_T_PHASES = "t_phases"
CHECK_CHARGE_CONJUGATION = "charge_conjugation"
CHECK_MODULAR_RELATION = "modular_relation"
CHECK_POSITIVITY = "positivity"


def t_phase(weight: Fraction, central_charge: Fraction, order: int) -> CyclotomicNumber:
    """ζ_N^{N(h − c/24)}; raises if the exponent is not an integer."""
    exponent = order * (Fraction(weight) - Fraction(central_charge) / 24)
    if exponent.denominator != 1:
        raise InvalidModularDataError(
            f"order {order} cannot hold e^(2πi({weight} − {central_charge}/24)); "
            f"exponent {exponent} is not an integer"
        )
    return zeta(order, int(exponent))


@dataclass(frozen=True)
class ModularData:
    """
    Modular data of a rank-n model, vacuum at index 0.

    Attributes:
        name: Model name used in reports
        s: n×n S matrix over ℚ(ζ_N)
        t: n×n diagonal T matrix over ℚ(ζ_N), global phase included
        central_charge: c
        weights: Conformal weights h_i
        ambient_order: N
    """

    name: str
    s: CycMatrix
    t: CycMatrix
    central_charge: Fraction
    weights: Tuple[Fraction, ...]
    ambient_order: int

    def __post_init__(self) -> None:
        n = len(self.weights)
        for label, matrix in (("S", self.s), ("T", self.t)):
            if len(matrix) != n or any(len(row) != n for row in matrix):
                raise DimensionMismatchError(f"{label} must be {n}×{n} to match {n} weights")
        order = self.ambient_order
        object.__setattr__(self, "s", tuple(tuple(x.embed(order) for x in row) for row in self.s))
        object.__setattr__(self, "t", tuple(tuple(x.embed(order) for x in row) for row in self.t))
        object.__setattr__(self, "central_charge", parse_rational(self.central_charge))
        object.__setattr__(self, "weights", tuple(parse_rational(h) for h in self.weights))

    @classmethod
    def from_weights(
        cls,
        name: str,
        s: Sequence[Sequence[CyclotomicNumber]],
        central_charge: Fraction,
        weights: Sequence[Fraction],
        ambient_order: int,
    ) -> "ModularData":
        """Build T from c and the h_i: T = diag(ζ_N^{N(h_i − c/24)})."""
        phases = [t_phase(parse_rational(h), parse_rational(central_charge), ambient_order) for h in weights]
        return cls(
            name=name,
            s=cyc_matrix.as_matrix(s),
            t=cyc_matrix.diagonal(phases),
            central_charge=parse_rational(central_charge),
            weights=tuple(parse_rational(h) for h in weights),
            ambient_order=ambient_order,
        )

    @property
    def rank(self) -> int:
        return len(self.weights)

    @property
    def t_diagonal(self) -> Tuple[CyclotomicNumber, ...]:
        return tuple(self.t[i][i] for i in range(self.rank))

    def with_t(self, t: CycMatrix) -> "ModularData":
        return ModularData(self.name, self.s, t, self.central_charge, self.weights, self.ambient_order)

    def to_data(self) -> dict:
        return {
            "name": self.name,
            "ambientOrder": self.ambient_order,
            "centralCharge": self.central_charge,
            "weights": list(self.weights),
            "S": [[x.to_data() for x in row] for row in self.s],
        }


def _is_permutation(matrix: CycMatrix) -> Optional[List[int]]:
    n = len(matrix)
    perm = []
    for row in matrix:
        ones = [j for j, x in enumerate(row) if x == 1]
        if len(ones) != 1 or any(not x.is_zero() for j, x in enumerate(row) if j != ones[0]):
            return None
        perm.append(ones[0])
    return perm if sorted(perm) == list(range(n)) else None


def verify_modular_data(md: ModularData) -> VerificationReport:
    """Check every relation listed in the module docstring, exactly."""
    report = VerificationReport(md.name)
    n, order = md.rank, md.ambient_order
    s = md.s

    report.add_check(CHECK_SYMMETRY)
    witness = cyc_matrix.first_difference(s, cyc_matrix.transpose(s))
    if witness:
        report.fail(CHECK_SYMMETRY, "S_ij != S_ji", i=witness[0], j=witness[1])

    report.add_check(CHECK_UNITARITY)
    gram = cyc_matrix.mat_mul(s, cyc_matrix.conj_transpose(s))
    witness = cyc_matrix.first_difference(gram, cyc_matrix.identity(n, order))
    if witness:
        report.fail(CHECK_UNITARITY, "(S·S̄ᵀ)_ij != δ_ij", i=witness[0], j=witness[1])

    report.add_check(CHECK_NONDEGENERACY)
    rank = cyc_matrix.rank(s)
    if rank != n:
        report.fail(CHECK_NONDEGENERACY, "S is singular", rank=rank, n=n)

    report.add_check(CHECK_T_DIAGONAL)
    for i in range(n):
        j = next((j for j in range(n) if j != i and not md.t[i][j].is_zero()), None)
        if j is not None:
            report.fail(CHECK_T_DIAGONAL, "T has an off-diagonal entry", i=i, j=j)
            break

    report.add_check(CHECK_T_PHASES)
    for i, h in enumerate(md.weights):
        try:
            expected = t_phase(h, md.central_charge, order)
        except InvalidModularDataError as error:
            report.fail(CHECK_T_PHASES, str(error), i=i)
            break
        if md.t[i][i] != expected:
            report.fail(CHECK_T_PHASES, "T_ii != e^{2πi(h_i − c/24)}", i=i, weight=h)
            break

    report.add_check(CHECK_CHARGE_CONJUGATION)
    s_squared = cyc_matrix.mat_mul(s, s)
    perm = _is_permutation(s_squared)
    if perm is None:
        report.fail(CHECK_CHARGE_CONJUGATION, "S² is not a permutation matrix")
    else:
        k = next((k for k in range(n) if perm[perm[k]] != k), None)
        if k is not None:
            report.fail(CHECK_CHARGE_CONJUGATION, "C² != I", i=k, image=perm[k])

    report.add_check(CHECK_MODULAR_RELATION)
    st = cyc_matrix.scale_columns(s, md.t_diagonal)
    st_cubed = cyc_matrix.mat_mul(cyc_matrix.mat_mul(st, st), st)
    witness = cyc_matrix.first_difference(st_cubed, s_squared)
    if witness:
        report.fail(CHECK_MODULAR_RELATION, "(ST)³ != S²", i=witness[0], j=witness[1])

    report.add_check(CHECK_POSITIVITY)
    _check_positivity(md, report)

    logger.debug("verified modular data %s: %s", md.name, report.summary())
    return report


def _check_positivity(md: ModularData, report: VerificationReport) -> None:
    s00 = md.s[0][0]
    if not s00.is_real() or s00.sign() <= 0:
        report.fail(CHECK_POSITIVITY, "S_00 must be real and positive", i=0)
        return
    for i in range(md.rank):
        entry = md.s[i][0]
        if not entry.is_real():
            report.fail(CHECK_POSITIVITY, "S_i0 must be real", i=i)
            return
        if (entry / s00 - 1).sign() < 0:
            report.fail(CHECK_POSITIVITY, "d_i = S_i0/S_00 must be ≥ 1", i=i)
            return


def charge_conjugation(md: ModularData) -> List[int]:
    """
    The permutation C with S² = C, as a list: C[i] is the conjugate sector.

    Raises:
        InvalidModularDataError: S² is not a permutation matrix
    """
    perm = _is_permutation(cyc_matrix.mat_mul(md.s, md.s))
    if perm is None:
        raise InvalidModularDataError(f"S² of {md.name} is not a permutation matrix")
    return perm
