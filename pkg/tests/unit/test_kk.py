"""
Unit tests for the KK matrix model: classes and the Kasparov product,
elementary divisors, and the homomorphism j from the fusion ring.
"""

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from src.catalog.builtin import builtin
from src.fusion_core.fusion_ring import FusionRing, fusion_matrices
from src.fusion_core.k_ring import KRingElement
from src.kk_model.kk_class import KKClass, act, kasparov_product, kk_add, kk_neg, kk_unit, matrix_unit
from src.kk_model.kk_ring import (
    CHECK_PAIRING,
    CHECK_INJECTIVITY,
    CHECK_MULTIPLICATIVITY,
    check_ring_axioms,
    image_commutes,
    kk_from_element,
    kk_from_sector,
    kk_preimage,
    properness_witness,
    resolve_sectors,
    verify_theorem2,
)
from src.kk_model.smith import elementary_divisors
from src.util.errors import DimensionMismatchError, SectorIndexError

square_matrices = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=n, max_size=n)
)


class TestKKClass:
    def test_square_only(self):
        with pytest.raises(DimensionMismatchError):
            KKClass(((1, 2),))

    def test_kasparov_product_is_reversed_composition(self):
        e01, e10 = matrix_unit(2, 0, 1), matrix_unit(2, 1, 0)
        # e01 × e10 = e10·e01 = e11
        assert kasparov_product(e01, e10) == matrix_unit(2, 1, 1)
        assert kasparov_product(e10, e01) == matrix_unit(2, 0, 0)

    def test_pairing(self):
        a = KKClass.from_rows([[1, 2], [3, 4]])
        assert act(KRingElement((1, 0)), a) == KRingElement((1, 3))
        with pytest.raises(DimensionMismatchError):
            act(KRingElement((1, 0, 0)), a)

    def test_group_structure(self):
        a = KKClass.from_rows([[1, -2], [0, 5]])
        assert kk_add(a, kk_neg(a)) == KKClass.zero(2)
        assert a - a == KKClass.zero(2)
        assert 2 * a == a + a
        assert kasparov_product(kk_unit(2), a) == a == kasparov_product(a, kk_unit(2))
        assert a.to_data() == [[1, -2], [0, 5]]
        with pytest.raises(DimensionMismatchError):
            kasparov_product(a, kk_unit(3))

    def test_ring_axioms_on_matrix_units(self):
        family = [matrix_unit(3, i, j) for i in range(3) for j in range(3)]
        report = check_ring_axioms(family[:5])
        assert report.passed, report.summary()


class TestElementaryDivisors:
    def test_examples(self):
        assert elementary_divisors([[2, 4], [6, 8]]) == [2, 4]
        assert elementary_divisors(KKClass.identity(3)) == [1, 1, 1]
        assert elementary_divisors(KKClass.zero(2)) == []
        assert elementary_divisors([[1, 1], [1, 1]]) == [1]
        assert elementary_divisors([[2, 0], [0, 3]]) == [1, 6]

    def test_singular_and_rectangular(self):
        assert elementary_divisors([[0, 0], [0, 6]]) == [6]
        assert elementary_divisors([[0, 2], [0, 0]]) == [2]
        assert elementary_divisors([[-4, 0], [0, 0]]) == [4]
        assert elementary_divisors([[2, 4, 4]]) == [2]
        assert elementary_divisors([[0, 0, 0], [0, 0, 0]]) == []

    @settings(max_examples=80, deadline=None)
    @given(square_matrices)
    def test_invariants_match_sympy(self, rows):
        divisors = elementary_divisors(rows)
        matrix = sympy.Matrix(rows)
        assert len(divisors) == matrix.rank()
        assert all(d > 0 for d in divisors)
        assert all(b % a == 0 for a, b in zip(divisors, divisors[1:]))
        if len(divisors) == len(rows):
            product = 1
            for d in divisors:
                product *= d
            assert product == abs(int(matrix.det()))


class TestHomomorphism:
    @pytest.mark.timeout(120)
    def test_j_is_a_homomorphism_for_catalog(self, catalog_name):
        report = verify_theorem2(builtin(catalog_name).ring)
        assert report.passed, report.summary()

    def test_nonassociative_table_breaks_multiplicativity(self):
        ring = FusionRing(
            "bad",
            ("1", "a", "b"),
            (
                ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
                ((0, 1, 0), (0, 0, 1), (1, 0, 0)),
                ((0, 0, 1), (1, 0, 0), (0, 0, 1)),
            ),
        )
        report = verify_theorem2(ring)
        assert CHECK_MULTIPLICATIVITY in report.failed_checks()
        assert report.check_passed(CHECK_PAIRING)
        assert report.check_passed(CHECK_INJECTIVITY)

    def test_sector_and_direct_sum(self, fibonacci_model):
        ring = fibonacci_model.ring
        assert kk_from_sector(ring, "tau").matrix == ((0, 1), (1, 1))
        assert kk_from_sector(ring, KRingElement((1, 2))) == KKClass.from_rows([[1, 2], [2, 3]])
        with pytest.raises(ValueError):
            kk_from_sector(ring, KRingElement((1, -1)))
        with pytest.raises(SectorIndexError):
            kk_from_sector(ring, "sigma")

    def test_grothendieck_extension(self, ising_model):
        ring = ising_model.ring
        x = KRingElement((1, 0, -1))
        image = kk_from_element(ring, x)
        assert image == kk_from_sector(ring, 0) - kk_from_sector(ring, 2)
        assert kk_preimage(ring, image) == x

    def test_preimage_outside_image(self, ising_model):
        assert kk_preimage(ising_model.ring, matrix_unit(3, 0, 1)) is None
        with pytest.raises(DimensionMismatchError):
            kk_preimage(ising_model.ring, kk_unit(2))

    def test_resolve_sectors(self, ising_model):
        assert resolve_sectors(ising_model.ring, ["sigma", "1", 1]) == [2, 0, 1]

    @pytest.mark.parametrize("name", ["ising", "su2_3"])
    def test_image_family_satisfies_ring_axioms(self, name):
        report = check_ring_axioms(fusion_matrices(builtin(name).ring))
        assert report.passed, report.summary()


class TestProperness:
    def test_noncommuting_pair(self, fibonacci_model):
        witness = properness_witness(fibonacci_model.ring)
        assert witness is not None
        assert witness.left_times_right != witness.right_times_left
        assert witness.image_report.passed
        data = witness.to_data()
        assert data["leftTimesRight"] == [[0, 0], [0, 1]]
        assert data["rightTimesLeft"] == [[1, 0], [0, 0]]
        assert data["imageCommutes"] is True

    @pytest.mark.timeout(120)
    def test_witness_for_catalog(self, catalog_name):
        ring = builtin(catalog_name).ring
        witness = properness_witness(ring)
        if ring.rank == 1:
            assert witness is None
            return
        assert witness.left_times_right != witness.right_times_left
        assert witness.image_report.passed
        assert kk_preimage(ring, witness.left) is None

    def test_rank_one_has_no_witness(self, trivial_model):
        assert properness_witness(trivial_model.ring) is None
        assert image_commutes(trivial_model.ring).passed
