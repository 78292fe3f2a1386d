"""
Unit tests for exact modular data, the Verlinde formula and the rational
commutant.
"""

from fractions import Fraction

import pytest

from src.catalog.builtin import builtin, catalog
from src.exact_arith import cyc_matrix
from src.exact_arith.cyclotomic import CyclotomicNumber, sqrt_integer
from src.modular.commutant import commutant_basis, require_nondegenerate
from src.modular.modular_data import (
    CHECK_MODULAR_RELATION,
    CHECK_NONDEGENERACY,
    CHECK_T_DIAGONAL,
    CHECK_UNITARITY,
    ModularData,
    charge_conjugation,
    t_phase,
    verify_modular_data,
)
from src.modular.verlinde import dimension_eigen_relation, quantum_dimensions_exact, verlinde_fusion
from src.util.errors import DegenerateBraidingError, DimensionMismatchError, InvalidModularDataError


def _rational_matrix(rows, order):
    return [[CyclotomicNumber.from_rational(Fraction(x), order) for x in row] for row in rows]


class TestModularData:
    @pytest.mark.timeout(120)
    @pytest.mark.parametrize("name, k, n", list(catalog()))
    def test_catalog_is_modular(self, name, k, n):
        md = builtin(name, k=k, n=n).modular
        report = verify_modular_data(md)
        assert report.passed, report.summary()

    def test_t_phase_requires_integral_exponent(self):
        with pytest.raises(InvalidModularDataError):
            t_phase(Fraction(1, 16), Fraction(1, 2), 16)
        assert t_phase(Fraction(1, 16), Fraction(1, 2), 48).order == 48

    def test_t_carries_the_global_phase(self, ising_model):
        md = ising_model.modular
        # T_00 = e^{−2πi c/24} with c = 1/2
        assert md.t[0][0] == t_phase(Fraction(0), Fraction(1, 2), 48)
        assert md.t[0][0] != 1

    def test_scaled_s_fails_unitarity(self, ising_model):
        md = ising_model.modular
        doubled = [[x * 2 for x in row] for row in md.s]
        bad = ModularData.from_weights("doubled", doubled, md.central_charge, md.weights, md.ambient_order)
        report = verify_modular_data(bad)
        assert CHECK_UNITARITY in report.failed_checks()

    def test_wrong_weight_fails_modular_relation(self, ising_model):
        md = ising_model.modular
        weights = [Fraction(0), Fraction(1, 2), Fraction(1, 8)]
        bad = ModularData.from_weights("ising?", md.s, md.central_charge, weights, md.ambient_order)
        report = verify_modular_data(bad)
        assert report.check_passed(CHECK_UNITARITY)
        assert CHECK_MODULAR_RELATION in report.failed_checks()

    def test_off_diagonal_t(self, fibonacci_model):
        md = fibonacci_model.modular
        t = [list(row) for row in md.t]
        t[0][1] = CyclotomicNumber.from_rational(1, md.ambient_order)
        report = verify_modular_data(md.with_t(cyc_matrix.as_matrix(t)))
        assert CHECK_T_DIAGONAL in report.failed_checks()

    def test_singular_s(self):
        half = Fraction(1, 2)
        md = ModularData.from_weights("flat", _rational_matrix([[half, half], [half, half]], 1), 0, [0, 0], 1)
        report = verify_modular_data(md)
        assert CHECK_NONDEGENERACY in report.failed_checks()
        with pytest.raises(DegenerateBraidingError):
            require_nondegenerate(md)

    def test_shape_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            ModularData.from_weights("bad", _rational_matrix([[1]], 1), 0, [0, 0], 1)

    def test_charge_conjugation(self, ising_model):
        assert charge_conjugation(ising_model.modular) == [0, 1, 2]
        assert charge_conjugation(builtin("z_n", n=3).modular) == [0, 2, 1]
        assert charge_conjugation(builtin("su2", k=3).modular) == [0, 1, 2, 3]


class TestVerlinde:
    @pytest.mark.parametrize("name", ["trivial", "ising", "fibonacci", "su2_1", "su2_5", "z_4", "z_7"])
    def test_recovers_catalog_fusion(self, name):
        model = builtin(name)
        recovered = verlinde_fusion(model.modular, list(model.ring.labels))
        assert recovered.fusion == model.ring.fusion
        assert recovered.labels == model.ring.labels

    def test_vanishing_vacuum_row(self):
        md = ModularData.from_weights("identity", _rational_matrix([[1, 0], [0, 1]], 1), 0, [0, 0], 1)
        with pytest.raises(InvalidModularDataError):
            verlinde_fusion(md)

    def test_non_integral_output(self):
        # symmetric orthogonal, but N_11^1 = 7/12
        s = _rational_matrix([[Fraction(3, 5), Fraction(4, 5)], [Fraction(4, 5), Fraction(-3, 5)]], 1)
        fake = ModularData.from_weights("rotation", s, 0, [0, 0], 1)
        with pytest.raises(InvalidModularDataError):
            verlinde_fusion(fake)

    def test_exact_dimensions(self, fibonacci_model, ising_model):
        phi = (1 + sqrt_integer(5)) / 2
        assert quantum_dimensions_exact(fibonacci_model.modular) == [1, phi]
        dims = quantum_dimensions_exact(ising_model.modular)
        assert dims[1] == 1
        assert dims[2] * dims[2] == 2

    def test_dimension_eigen_relation(self, ising_model, fibonacci_model):
        assert dimension_eigen_relation(ising_model.ring, ising_model.modular).passed
        assert not dimension_eigen_relation(fibonacci_model.ring, ising_model.modular).passed

    @pytest.mark.timeout(120)
    def test_dimension_eigen_relation_for_catalog(self, catalog_name):
        model = builtin(catalog_name)
        report = dimension_eigen_relation(model.ring, model.modular)
        assert report.passed, report.summary()


class TestCommutant:
    @pytest.mark.parametrize("name, dimension", [("trivial", 1), ("ising", 1), ("fibonacci", 1)])
    def test_small_commutants_are_scalars(self, name, dimension):
        basis = commutant_basis(builtin(name).modular)
        assert len(basis) == dimension
        n = builtin(name).ring.rank
        assert basis[0] == tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))

    def test_su2_4_basis_commutes_exactly(self, su2_4_model):
        md = su2_4_model.modular
        basis = commutant_basis(md)
        assert len(basis) >= 2
        for b in basis:
            entries = _rational_matrix(b, md.ambient_order)
            for a in (md.s, md.t):
                assert cyc_matrix.mat_mul(entries, a) == cyc_matrix.mat_mul(a, entries)
