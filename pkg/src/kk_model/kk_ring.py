"""
The homomorphism j: ℛ → KK(𝔎,𝔎) and the checks around it.

j sends a sector class [ρ] to the KK class whose matrix is the fusion
matrix M_ρ (the matrix of η_[ρ] on K₀). It extends additively to
nonnegative combinations of sectors (kk_from_sector) and, as a ring
homomorphism, to the whole Grothendieck ring (kk_from_element).

verify_theorem2 checks exhaustively over the sector basis that j is a
unital, additive, multiplicative and injective map and that the Kasparov
pairing x × j([ρ]) reproduces the fusion action η_[ρ](x). It never raises
on failure; every failed check comes back in the report with a witness.

See also:
    - kk_class.py: KKClass, kasparov_product, act
    - fusion_core/fusion_ring.py: fusion_matrix, ring_multiply
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Union

import numpy as np

from src.fusion_core.fusion_ring import FusionRing, fusion_matrices, fusion_matrix, ring_multiply, sector_index
from src.fusion_core.k_ring import KRingElement
from src.kk_model.kk_class import KKClass, act, kasparov_product, kk_add, kk_unit, matrix_unit
from src.util.errors import DimensionMismatchError
from src.util.report import VerificationReport

logger = logging.getLogger(__name__)

CHECK_MULTIPLICATIVITY = "multiplicativity"
CHECK_ADDITIVITY = "additivity"
CHECK_UNITALITY = "unitality"
CHECK_INJECTIVITY = "injectivity"
CHECK_PAIRING = "pairing_equals_fusion_action"
CHECK_IMAGE_COMMUTES = "image_commutes"

CHECK_ASSOCIATIVITY = "associativity"
CHECK_BILINEARITY = "bilinearity"
CHECK_UNIT = "unit"
CHECK_COMPATIBILITY = "act_compatibility"

DEFAULT_SPOT_CHECKS = 64
DEFAULT_SEED = 20240601


def kk_from_element(ring: FusionRing, x: KRingElement) -> KKClass:
    """j extended to the Grothendieck ring: Σ_i x_i M_i."""
    if x.rank != ring.rank:
        raise DimensionMismatchError(f"element of rank {x.rank} in a ring of rank {ring.rank}")
    n = ring.rank
    rows = [[0] * n for _ in range(n)]
    for i, xi in enumerate(x.coords):
        if not xi:
            continue
        plane = ring.fusion[i]
        for j in range(n):
            for k in range(n):
                if plane[j][k]:
                    rows[k][j] += xi * plane[j][k]
    return KKClass.from_rows(rows)


def kk_from_sector(ring: FusionRing, sector: Union[int, str, KRingElement]) -> KKClass:
    """
    j([ρ]) for a sector, or for a direct sum of sectors.

    Args:
        ring: Verified fusion ring
        sector: Sector index or label, or a KRingElement with nonnegative
                coordinates (multiplicities of a direct sum)

    Raises:
        SectorIndexError: Unknown sector
        ValueError: A KRingElement with a negative coordinate (use kk_from_element)
    """
    if isinstance(sector, KRingElement):
        if not sector.is_nonnegative():
            raise ValueError("a direct sum of sectors has nonnegative multiplicities; use kk_from_element")
        return kk_from_element(ring, sector)
    return fusion_matrix(ring, sector)


def kk_preimage(ring: FusionRing, a: KKClass) -> Optional[KRingElement]:
    """
    The x with j(x) = a, or None if a is not in the image of j.

    M_i·e_0 = e_i, so j(x)·e_0 = x and the only candidate is column 0.
    """
    if a.dim != ring.rank:
        raise DimensionMismatchError(f"class of dimension {a.dim} in a ring of rank {ring.rank}")
    candidate = KRingElement(a.column(ring.vacuum_index))
    return candidate if kk_from_element(ring, candidate) == a else None


def verify_theorem2(
    ring: FusionRing, spot_checks: int = DEFAULT_SPOT_CHECKS, seed: int = DEFAULT_SEED
) -> VerificationReport:
    """
    Check that j is an injective unital semiring homomorphism and that
    x × j([ρ]) = η_[ρ](x), for all basis x and sectors ρ.

    Args:
        ring: Verified fusion ring
        spot_checks: Random nonnegative combinations tried for injectivity
        seed: Seed of the spot-check generator (reports are reproducible)
    """
    report = VerificationReport(f"{ring.name}: j homomorphism")
    n = ring.rank
    images = fusion_matrices(ring)
    basis = [KRingElement.basis(n, i) for i in range(n)]

    report.add_check(CHECK_MULTIPLICATIVITY)
    for i, j in itertools.product(range(n), repeat=2):
        product = kk_from_element(ring, ring_multiply(ring, basis[i], basis[j]))
        if product != kasparov_product(images[i], images[j]):
            report.fail(CHECK_MULTIPLICATIVITY, "j([i][j]) != j([i]) × j([j])", i=i, j=j)
            break

    report.add_check(CHECK_ADDITIVITY)
    for i, j in itertools.product(range(n), repeat=2):
        if kk_from_sector(ring, basis[i] + basis[j]) != kk_add(images[i], images[j]):
            report.fail(CHECK_ADDITIVITY, "j([i]⊕[j]) != j([i]) + j([j])", i=i, j=j)
            break

    report.add_check(CHECK_UNITALITY)
    if images[ring.vacuum_index] != kk_unit(n):
        report.fail(CHECK_UNITALITY, "j(vacuum) is not the unit class", sector=ring.vacuum_index)

    report.add_check(CHECK_INJECTIVITY)
    for i, j in itertools.combinations(range(n), 2):
        if images[i] == images[j]:
            report.fail(CHECK_INJECTIVITY, "distinct sectors with equal classes", i=i, j=j)
            break
    else:
        witness = _injectivity_spot_check(ring, spot_checks, seed)
        if witness is not None:
            report.fail(CHECK_INJECTIVITY, "distinct combinations with equal classes", x=witness[0], y=witness[1])

    report.add_check(CHECK_PAIRING)
    for rho, j in itertools.product(range(n), repeat=2):
        if act(basis[j], images[rho]) != ring_multiply(ring, basis[rho], basis[j]):
            report.fail(CHECK_PAIRING, "e_j × j([ρ]) != η_[ρ](e_j)", rho=rho, j=j)
            break

    logger.info(report.summary())
    return report


def _injectivity_spot_check(ring: FusionRing, count: int, seed: int):
    rng = np.random.default_rng(seed)
    seen = {}
    for _ in range(count):
        x = KRingElement(tuple(int(c) for c in rng.integers(0, 4, size=ring.rank)))
        image = kk_from_element(ring, x)
        other = seen.setdefault(image, x)
        if other != x:
            return other, x
    return None


@dataclass(frozen=True)
class PropernessWitness:
    """
    Two KK classes whose Kasparov products differ in the two orders.

    The image of j is commutative, so such a pair shows that j(ℛ̃) is a
    proper subring of KK(𝔎,𝔎).
    """

    left: KKClass
    right: KKClass
    left_times_right: KKClass
    right_times_left: KKClass
    image_report: VerificationReport

    def to_data(self) -> dict:
        return {
            "left": self.left.to_data(),
            "right": self.right.to_data(),
            "leftTimesRight": self.left_times_right.to_data(),
            "rightTimesLeft": self.right_times_left.to_data(),
            "imageCommutes": self.image_report.passed,
        }


def image_commutes(ring: FusionRing) -> VerificationReport:
    report = VerificationReport(f"{ring.name}: j-image", [CHECK_IMAGE_COMMUTES])
    images = fusion_matrices(ring)
    for i, j in itertools.combinations(range(ring.rank), 2):
        if kasparov_product(images[i], images[j]) != kasparov_product(images[j], images[i]):
            report.fail(CHECK_IMAGE_COMMUTES, "j([i]) and j([j]) do not commute", i=i, j=j)
            break
    return report


def properness_witness(ring: FusionRing) -> Optional[PropernessWitness]:
    """E₀₁ and E₁₀ for rank ≥ 2; None for rank 1, where M₁(ℤ) = ℤ is commutative."""
    n = ring.rank
    if n < 2:
        return None
    left, right = matrix_unit(n, 0, 1), matrix_unit(n, 1, 0)
    return PropernessWitness(
        left=left,
        right=right,
        left_times_right=kasparov_product(left, right),
        right_times_left=kasparov_product(right, left),
        image_report=image_commutes(ring),
    )


def check_ring_axioms(
    classes: Sequence[KKClass], elements: Optional[Iterable[KRingElement]] = None
) -> VerificationReport:
    """
    Ring axioms of the KK matrix model on a family of classes.

    Checks associativity and bilinearity of the Kasparov product, the unit,
    and act(act(x, a), b) = act(x, a × b) for the given elements (default:
    the standard basis).
    """
    report = VerificationReport("kk ring axioms")
    if not classes:
        return report
    dim = classes[0].dim
    if any(a.dim != dim for a in classes):
        raise DimensionMismatchError("classes of different dimension")
    elements = list(elements) if elements is not None else [KRingElement.basis(dim, i) for i in range(dim)]
    unit = kk_unit(dim)
    indexed = list(enumerate(classes))

    report.add_check(CHECK_ASSOCIATIVITY)
    for (ia, a), (ib, b), (ic, c) in itertools.product(indexed, repeat=3):
        if kasparov_product(kasparov_product(a, b), c) != kasparov_product(a, kasparov_product(b, c)):
            report.fail(CHECK_ASSOCIATIVITY, "(a × b) × c != a × (b × c)", a=ia, b=ib, c=ic)
            break

    report.add_check(CHECK_BILINEARITY)
    for (ia, a), (ib, b), (ic, c) in itertools.product(indexed, repeat=3):
        left_ok = kasparov_product(a + b, c) == kasparov_product(a, c) + kasparov_product(b, c)
        right_ok = kasparov_product(c, a + b) == kasparov_product(c, a) + kasparov_product(c, b)
        if not (left_ok and right_ok):
            report.fail(CHECK_BILINEARITY, "product is not additive", a=ia, b=ib, c=ic)
            break

    report.add_check(CHECK_UNIT)
    for ia, a in indexed:
        if kasparov_product(unit, a) != a or kasparov_product(a, unit) != a:
            report.fail(CHECK_UNIT, "unit × a or a × unit differs from a", a=ia)
            break

    report.add_check(CHECK_COMPATIBILITY)
    for x, (ia, a), (ib, b) in itertools.product(elements, indexed, indexed):
        if act(act(x, a), b) != act(x, kasparov_product(a, b)):
            report.fail(CHECK_COMPATIBILITY, "(x × a) × b != x × (a × b)", x=x, a=ia, b=ib)
            break
    return report


def resolve_sectors(ring: FusionRing, sectors: Iterable[Union[int, str]]) -> List[int]:
    return [sector_index(ring, s) for s in sectors]
