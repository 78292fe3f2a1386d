"""
Fusion rings and their matrix realization η: ℛ → End(K₀) = End(ℤⁿ).

A FusionRing stores the structure constants N_{ij}^k as an n×n×n tensor of
nonnegative integers, vacuum at index 0. Sector classes [i] are the basis
vectors of K₀ ≅ ℤⁿ; formal differences (the Grothendieck ring) are just
KRingElements with negative coordinates.

Matrix convention (column vectors, η acts on the left):
    (M_i)_{kj} = N_{ij}^k,   so M_i·e_j = Σ_k N_{ij}^k e_k = [i][j]

row_fusion_matrix gives the transposed (row vector) convention; the two
agree after transposition and both are tested.

Axiom checks never raise; verify_fusion_ring returns a VerificationReport
with the first witness of every violated axiom. Tensor-wide checks are
evaluated with numpy einsum and the witness is the first offending index
in lexicographic order.

See also:
    - k_ring.py: KRingElement, the vectors these matrices act on
    - dimensions.py: Perron–Frobenius dimensions of the M_i
    - kk_model/kk_ring.py: the same matrices read as KK classes
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import ClassVar, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from src.fusion_core.k_ring import KRingElement
from src.kk_model.kk_class import KKClass
from src.util.errors import DimensionMismatchError, SectorIndexError, VerificationFailedError
from src.util.report import VerificationReport

logger = logging.getLogger(__name__)

FusionTensor = Tuple[Tuple[Tuple[int, ...], ...], ...]

CHECK_SHAPE = "shape"
CHECK_UNIT = "unit"
CHECK_COMMUTATIVITY = "commutativity"
CHECK_ASSOCIATIVITY = "associativity"
CHECK_DUALITY = "duality"
CHECK_NONNEGATIVITY = "nonnegativity"
CHECK_FROBENIUS = "frobenius_symmetry"


def _check_shape(labels: Sequence[str], fusion: FusionTensor) -> None:
    n = len(labels)
    if n < 1:
        raise DimensionMismatchError("a fusion ring needs at least the vacuum sector")
    if len(fusion) != n:
        raise DimensionMismatchError(f"fusion tensor has {len(fusion)} slices for {n} labels")
    for i, plane in enumerate(fusion):
        if len(plane) != n or any(len(row) != n for row in plane):
            raise DimensionMismatchError(f"fusion tensor slice {i} is not {n}×{n}")
    if len(set(labels)) != n:
        raise DimensionMismatchError("sector labels must be distinct")


@dataclass(frozen=True)
class FusionRing:
    """
    Fusion ring of rank n.

    Attributes:
        name: Model name used in reports
        labels: n distinct sector names, labels[0] is the vacuum
        fusion: fusion[i][j][k] = N_{ij}^k
    """

    name: str
    labels: Tuple[str, ...]
    fusion: FusionTensor

    vacuum_index: ClassVar[int] = 0

    def __post_init__(self) -> None:
        labels = tuple(str(label) for label in self.labels)
        fusion = tuple(tuple(tuple(int(x) for x in row) for row in plane) for plane in self.fusion)
        _check_shape(labels, fusion)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "fusion", fusion)

    @classmethod
    def from_quadruples(
        cls, name: str, labels: Sequence[str], quadruples: Iterable[Sequence[int]]
    ) -> "FusionRing":
        """
        Build a ring from a sparse list of [i, j, k, N_ij^k]; absent entries are 0.

        Raises:
            SectorIndexError: An index is outside 0..n−1
            ValueError: A quadruple is malformed or listed twice
        """
        n = len(labels)
        tensor = [[[0] * n for _ in range(n)] for _ in range(n)]
        seen = set()
        for quad in quadruples:
            if len(quad) != 4:
                raise ValueError(f"fusion entry {list(quad)} is not [i, j, k, N]")
            i, j, k, value = (int(x) for x in quad)
            for index in (i, j, k):
                if not 0 <= index < n:
                    raise SectorIndexError(f"fusion entry {list(quad)} refers to sector {index} of {n}")
            if (i, j, k) in seen:
                raise ValueError(f"fusion entry ({i}, {j}, {k}) listed twice")
            seen.add((i, j, k))
            tensor[i][j][k] = value
        return cls(name, tuple(labels), tuple(tuple(tuple(row) for row in plane) for plane in tensor))

    @property
    def rank(self) -> int:
        return len(self.labels)

    @cached_property
    def array(self) -> np.ndarray:
        return np.array(self.fusion, dtype=np.int64).reshape(self.rank, self.rank, self.rank)

    def coefficient(self, i: int, j: int, k: int) -> int:
        return self.fusion[i][j][k]

    def to_quadruples(self) -> List[List[int]]:
        n = self.rank
        return [
            [i, j, k, self.fusion[i][j][k]]
            for i in range(n)
            for j in range(n)
            for k in range(n)
            if self.fusion[i][j][k]
        ]


def _first_index(mask: np.ndarray) -> Optional[Tuple[int, ...]]:
    hits = np.argwhere(mask)
    if len(hits) == 0:
        return None
    return tuple(int(x) for x in hits[0])


def verify_fusion_ring(ring: FusionRing) -> VerificationReport:
    """
    Check the fusion ring axioms.

    Checks, in order: unit law, commutativity, associativity, duality and
    nonnegativity. Every violated axiom is listed once, with its first
    witness.

    Raises:
        DimensionMismatchError: The tensor is not n×n×n
    """
    _check_shape(ring.labels, ring.fusion)
    report = VerificationReport(ring.name)
    n = ring.rank
    tensor = ring.array

    report.add_check(CHECK_UNIT)
    unit_ok = True
    for j in range(n):
        for k in range(n):
            if tensor[0, j, k] != (1 if j == k else 0):
                report.fail(CHECK_UNIT, "N_0j^k must equal δ_jk", j=j, k=k, value=int(tensor[0, j, k]))
                unit_ok = False
                break
        if not unit_ok:
            break

    report.add_check(CHECK_COMMUTATIVITY)
    witness = _first_index(tensor != tensor.transpose(1, 0, 2))
    if witness:
        i, j, k = witness
        report.fail(CHECK_COMMUTATIVITY, "N_ij^k must equal N_ji^k", i=i, j=j, k=k)

    report.add_check(CHECK_ASSOCIATIVITY)
    left = np.einsum("ijm,mkl->ijkl", tensor, tensor)
    right = np.einsum("jkm,iml->ijkl", tensor, tensor)
    witness = _first_index(left != right)
    if witness:
        i, j, k, l = witness
        report.fail(
            CHECK_ASSOCIATIVITY,
            "Σ_m N_ij^m N_mk^l must equal Σ_m N_jk^m N_im^l",
            i=i, j=j, k=k, l=l, left=int(left[witness]), right=int(right[witness]),
        )

    report.add_check(CHECK_DUALITY)
    duals = _dual_table(tensor)
    for i, candidates in enumerate(duals):
        if len(candidates) != 1:
            report.fail(CHECK_DUALITY, "sector needs exactly one dual", i=i, duals=candidates)
            break
        i_star = candidates[0]
        if duals[i_star] != [i]:
            report.fail(CHECK_DUALITY, "(i*)* must equal i", i=i, dual=i_star)
            break

    report.add_check(CHECK_NONNEGATIVITY)
    witness = _first_index(tensor < 0)
    if witness:
        i, j, k = witness
        report.fail(CHECK_NONNEGATIVITY, "N_ij^k must be ≥ 0", i=i, j=j, k=k, value=int(tensor[witness]))

    logger.debug("verified fusion ring %s: %s", ring.name, report.summary())
    return report


def _dual_table(tensor: np.ndarray) -> List[List[int]]:
    """For each i, the j with N_ij^0 = 1; anything else makes the list not a singleton."""
    n = tensor.shape[0]
    table = []
    for i in range(n):
        column = tensor[i, :, 0]
        ones = [int(j) for j in np.flatnonzero(column == 1)]
        others = [int(j) for j in np.flatnonzero((column != 0) & (column != 1))]
        table.append(ones + others)
    return table


def sector_index(ring: FusionRing, sector: Union[int, str]) -> int:
    """
    Resolve a sector given by label or by index.

    Raises:
        SectorIndexError: No such sector
    """
    if isinstance(sector, str):
        if sector in ring.labels:
            return ring.labels.index(sector)
        if sector.strip().lstrip("-").isdigit():
            sector = int(sector)
        else:
            raise SectorIndexError(f"{ring.name} has no sector {sector!r}; labels are {list(ring.labels)}")
    if not 0 <= sector < ring.rank:
        raise SectorIndexError(f"sector index {sector} out of range for rank {ring.rank}")
    return sector


def fusion_matrix(ring: FusionRing, i: Union[int, str]) -> KKClass:
    """M_i with (M_i)_{kj} = N_{ij}^k, the matrix of η_[i] on column vectors."""
    i = sector_index(ring, i)
    n = ring.rank
    return KKClass(tuple(tuple(ring.fusion[i][j][k] for j in range(n)) for k in range(n)))


def row_fusion_matrix(ring: FusionRing, i: Union[int, str]) -> KKClass:
    """Row-vector realization: entry (j, k) is N_{ij}^k, so x ↦ x·R_i."""
    i = sector_index(ring, i)
    return KKClass(ring.fusion[i])


def fusion_matrices(ring: FusionRing) -> List[KKClass]:
    return [fusion_matrix(ring, i) for i in range(ring.rank)]


def ring_multiply(ring: FusionRing, x: KRingElement, y: KRingElement) -> KRingElement:
    """Bilinear fusion product: (x·y)_k = Σ_{i,j} x_i y_j N_{ij}^k."""
    if x.rank != ring.rank or y.rank != ring.rank:
        raise DimensionMismatchError(
            f"elements of rank {x.rank} and {y.rank} in a ring of rank {ring.rank}"
        )
    n = ring.rank
    out = [0] * n
    for i, xi in enumerate(x.coords):
        if not xi:
            continue
        for j, yj in enumerate(y.coords):
            if not yj:
                continue
            row = ring.fusion[i][j]
            for k in range(n):
                if row[k]:
                    out[k] += xi * yj * row[k]
    return KRingElement(tuple(out))


def dual(ring: FusionRing, i: Union[int, str]) -> int:
    """The unique i* with N_{i i*}^0 = 1."""
    i = sector_index(ring, i)
    candidates = _dual_table(ring.array)[i]
    if len(candidates) != 1:
        raise VerificationFailedError(f"sector {ring.labels[i]} of {ring.name} has no unique dual")
    return candidates[0]


def frobenius_symmetry(ring: FusionRing) -> VerificationReport:
    """Check N_{ij}^k = N_{i* k}^j for all i, j, k."""
    report = VerificationReport(ring.name, [CHECK_FROBENIUS])
    n = ring.rank
    duals = _dual_table(ring.array)
    for i in range(n):
        if len(duals[i]) != 1:
            report.fail(CHECK_FROBENIUS, "sector has no unique dual", i=i)
            return report
        i_star = duals[i][0]
        for j in range(n):
            for k in range(n):
                if ring.fusion[i][j][k] != ring.fusion[i_star][k][j]:
                    report.fail(CHECK_FROBENIUS, "N_ij^k must equal N_i*k^j", i=i, j=j, k=k)
                    return report
    return report
