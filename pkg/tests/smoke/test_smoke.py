"""
Smoke tests for fusionkk: imports and the cheapest end-to-end paths.
"""

import importlib

import pytest

MODULES = [
    "src.main",
    "src.config.config",
    "src.util.errors",
    "src.util.log_util",
    "src.util.path_util",
    "src.util.report",
    "src.exact_arith.cyclotomic",
    "src.exact_arith.cyc_matrix",
    "src.exact_arith.interval",
    "src.exact_arith.linalg",
    "src.exact_arith.polynomial",
    "src.exact_arith.rational",
    "src.fusion_core.dimensions",
    "src.fusion_core.fusion_ring",
    "src.fusion_core.k_ring",
    "src.kk_model.kk_class",
    "src.kk_model.kk_ring",
    "src.kk_model.smith",
    "src.modular.commutant",
    "src.modular.invariants",
    "src.modular.modular_data",
    "src.modular.verlinde",
    "src.catalog.builtin",
    "src.catalog.model_file",
]


@pytest.mark.smoke
@pytest.mark.parametrize("name", MODULES)
def test_imports_succeed(name):
    assert importlib.import_module(name) is not None


@pytest.mark.smoke
def test_trivial_model_round_trip(trivial_model):
    from src.modular.invariants import enumerate_modular_invariants

    assert trivial_model.ring.rank == 1
    assert [z.matrix for z in enumerate_modular_invariants(trivial_model.modular)] == [((1,),)]


@pytest.mark.smoke
def test_cli_parser_builds():
    from src.main import build_parser

    parser = build_parser()
    args = parser.parse_args(["invariants", "su2", "--k", "4", "--format", "csv"])
    assert (args.command, args.model, args.k, args.format) == ("invariants", "su2", 4, "csv")
