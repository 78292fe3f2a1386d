"""
Unit tests for fusion rings, Grothendieck ring elements and
Perron–Frobenius dimensions.
"""

from fractions import Fraction

import numpy as np
import pytest

from src.catalog.builtin import builtin, su2_fusion
from src.fusion_core.dimensions import perron_vector, quantum_dimensions
from src.fusion_core.fusion_ring import (
    CHECK_ASSOCIATIVITY,
    CHECK_COMMUTATIVITY,
    CHECK_DUALITY,
    CHECK_NONNEGATIVITY,
    CHECK_UNIT,
    FusionRing,
    dual,
    frobenius_symmetry,
    fusion_matrix,
    row_fusion_matrix,
    ring_multiply,
    sector_index,
    verify_fusion_ring,
)
from src.fusion_core.k_ring import KRingElement
from src.util.errors import DimensionMismatchError, SectorIndexError, VerificationFailedError


def _fibonacci_with(tau_tau):
    """Fibonacci labels with N_{τ τ} replaced by ``tau_tau`` = (N^1, N^τ)."""
    return FusionRing(
        "broken",
        ("1", "tau"),
        (((1, 0), (0, 1)), ((0, 1), tau_tau)),
    )


class TestConstruction:
    def test_from_quadruples_fills_zeros(self, fibonacci_model):
        ring = fibonacci_model.ring
        assert ring.rank == 2
        assert ring.fusion == (((1, 0), (0, 1)), ((0, 1), (1, 1)))
        assert FusionRing.from_quadruples("fib", ring.labels, ring.to_quadruples()) == ring

    def test_out_of_range_quadruple(self):
        with pytest.raises(SectorIndexError):
            FusionRing.from_quadruples("bad", ("1", "a"), [[0, 0, 2, 1]])

    def test_duplicate_quadruple(self):
        with pytest.raises(ValueError):
            FusionRing.from_quadruples("bad", ("1",), [[0, 0, 0, 1], [0, 0, 0, 1]])

    def test_shape_errors(self):
        with pytest.raises(DimensionMismatchError):
            FusionRing("bad", ("1", "a"), (((1,),),))
        with pytest.raises(DimensionMismatchError):
            FusionRing("bad", ("1", "1"), (((1, 0), (0, 1)), ((0, 1), (1, 0))))

    def test_sector_lookup(self, ising_model):
        ring = ising_model.ring
        assert sector_index(ring, "sigma") == 2
        assert sector_index(ring, "1") == 0
        assert sector_index(ring, 1) == 1
        with pytest.raises(SectorIndexError):
            sector_index(ring, "tau")
        with pytest.raises(SectorIndexError):
            sector_index(ring, 3)


class TestAxioms:
    @pytest.mark.parametrize("k", range(1, 11))
    def test_su2_rings_pass(self, k):
        ring = FusionRing(f"su2_{k}", tuple(str(a) for a in range(k + 1)), su2_fusion(k))
        report = verify_fusion_ring(ring)
        assert report.passed, report.summary()
        assert frobenius_symmetry(ring).passed

    def test_unit_violation(self):
        ring = FusionRing("bad", ("1", "a"), (((1, 0), (1, 1)), ((0, 1), (1, 0))))
        report = verify_fusion_ring(ring)
        assert CHECK_UNIT in report.failed_checks()
        assert report.violations[0].witness == {"j": 1, "k": 0, "value": 1}

    def test_commutativity_violation(self):
        ring = FusionRing(
            "bad",
            ("1", "a", "b"),
            (
                ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
                ((0, 1, 0), (1, 0, 0), (0, 1, 0)),
                ((0, 0, 1), (0, 0, 1), (1, 0, 0)),
            ),
        )
        report = verify_fusion_ring(ring)
        assert CHECK_COMMUTATIVITY in report.failed_checks()
        assert report.check_passed(CHECK_UNIT)

    def test_associativity_violation(self):
        # a·a = b, a·b = 1, b·b = b: (a·a)·b = b but a·(a·b) = a
        ring = FusionRing(
            "bad",
            ("1", "a", "b"),
            (
                ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
                ((0, 1, 0), (0, 0, 1), (1, 0, 0)),
                ((0, 0, 1), (1, 0, 0), (0, 0, 1)),
            ),
        )
        report = verify_fusion_ring(ring)
        assert report.check_passed(CHECK_COMMUTATIVITY)
        assert CHECK_ASSOCIATIVITY in report.failed_checks()

    def test_duality_violation(self):
        report = verify_fusion_ring(_fibonacci_with((0, 1)))
        assert CHECK_DUALITY in report.failed_checks()

    def test_negative_multiplicity(self):
        report = verify_fusion_ring(_fibonacci_with((1, -1)))
        assert CHECK_NONNEGATIVITY in report.failed_checks()

    def test_dual(self, su2_4_model):
        ring = su2_4_model.ring
        assert [dual(ring, i) for i in range(ring.rank)] == list(range(ring.rank))
        with pytest.raises(VerificationFailedError):
            dual(_fibonacci_with((0, 1)), 1)


class TestMatrices:
    def test_column_convention(self, ising_model):
        ring = ising_model.ring
        m_sigma = fusion_matrix(ring, "sigma")
        assert m_sigma.matrix == ((0, 0, 1), (0, 0, 1), (1, 1, 0))
        assert row_fusion_matrix(ring, "sigma") == m_sigma.transpose()

    @pytest.mark.parametrize("model", ["ising", "fibonacci", "su2_4"])
    def test_matrices_realize_the_product(self, model):
        ring = builtin(model).ring
        n = ring.rank
        for i in range(n):
            m = np.array(fusion_matrix(ring, i).matrix)
            for j in range(n):
                e_j = np.eye(n, dtype=int)[j]
                expected = ring_multiply(ring, KRingElement.basis(n, i), KRingElement.basis(n, j))
                assert tuple(m @ e_j) == expected.coords

    def test_ring_multiply_is_bilinear(self, fibonacci_model):
        ring = fibonacci_model.ring
        x = KRingElement((2, -1))
        y = KRingElement((0, 3))
        # (2 − τ)(3τ) = 6τ − 3(1 + τ) = −3 + 3τ
        assert ring_multiply(ring, x, y) == KRingElement((-3, 3))
        with pytest.raises(DimensionMismatchError):
            ring_multiply(ring, x, KRingElement((1, 0, 0)))


class TestKRingElement:
    def test_arithmetic(self):
        a = KRingElement((1, 2))
        b = KRingElement.basis(2, 1)
        assert a + b == KRingElement((1, 3))
        assert a - b == KRingElement((1, 1))
        assert -a == KRingElement((-1, -2))
        assert 3 * a == KRingElement((3, 6))
        assert (a - 3 * b).is_nonnegative() is False
        assert list(KRingElement.zero(3)) == [0, 0, 0]

    def test_rank_errors(self):
        with pytest.raises(DimensionMismatchError):
            KRingElement((1,)) + KRingElement((1, 2))
        with pytest.raises(SectorIndexError):
            KRingElement.basis(2, 2)


class TestQuantumDimensions:
    def test_fibonacci_encloses_golden_ratio(self, fibonacci_model):
        dims = quantum_dimensions(fibonacci_model.ring)
        assert dims[0].lo == dims[0].hi == 1
        golden = (1 + 5 ** 0.5) / 2
        assert dims[1].lo <= Fraction(golden) + Fraction(1, 10 ** 9)
        assert dims[1].hi >= Fraction(golden) - Fraction(1, 10 ** 9)
        assert dims[1].hi - dims[1].lo < Fraction(1, 10 ** 9)

    def test_ising_sigma_is_root_two(self, ising_model):
        dims = quantum_dimensions(ising_model.ring)
        assert dims[1].contains(1)
        assert dims[2].lo * dims[2].lo <= 2 <= dims[2].hi * dims[2].hi

    def test_lower_bounds_at_least_one(self, su2_4_model):
        assert all(d.lo >= 1 for d in quantum_dimensions(su2_4_model.ring))

    def test_perron_vector_is_positive(self, su2_4_model):
        vector = perron_vector(su2_4_model.ring)
        assert np.all(vector > 0)
        assert np.linalg.norm(vector) == pytest.approx(1.0)
