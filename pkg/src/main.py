"""
fusionkk command line - Verification, KK matrices and modular invariants.

Usage:
    python -m src.main verify ising
    python -m src.main eta ising --sector sigma
    python -m src.main kk fibonacci --product tau,tau --theorem2 --properness
    python -m src.main kk ising --element 1,0,-1
    python -m src.main verlinde su2 --k 4
    python -m src.main invariants su2 --k 4 --format json
    python -m src.main invariants --file my_model.json --bound-mult 2 --jobs 4

Models are builtin names (trivial, ising, fibonacci, su2 --k, z_n --n, or
the spellings su2_4 / z_5), files given with --file, or <name>.json in the
configured modelDirectory.

Output contract:
    - The report goes to standard output, diagnostics to standard error.
    - JSON reports hold {"command", "data", "meta"}; "data" is
      deterministic (sorted keys, exact numbers, canonical order) and
      "meta" carries the version and wall time.
    - Exit codes: 0 success, 1 a verification or check failed,
      2 usage, parse, unknown-model or configuration error.

See also:
    - util/report.py: Report and VerificationReport
    - config/config.py: Settings that flags override
"""

import argparse
import logging
import os
import sys
import time
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from src.catalog.builtin import BUILTIN_NAMES, builtin
from src.catalog.model_file import Model, load_model
from src.config.config import Config
from src.fusion_core.dimensions import quantum_dimensions
from src.fusion_core.fusion_ring import (
    fusion_matrices,
    fusion_matrix,
    frobenius_symmetry,
    ring_multiply,
    sector_index,
    verify_fusion_ring,
)
from src.fusion_core.k_ring import KRingElement
from src.kk_model.kk_class import kasparov_product, matrix_unit
from src.kk_model.kk_ring import (
    check_ring_axioms,
    kk_from_element,
    kk_from_sector,
    kk_preimage,
    properness_witness,
    resolve_sectors,
    verify_theorem2,
)
from src.modular.invariants import classify
from src.modular.modular_data import charge_conjugation, verify_modular_data
from src.modular.verlinde import dimension_eigen_relation, quantum_dimensions_exact, verlinde_fusion
from src.util.errors import (
    ConfigError,
    DimensionMismatchError,
    FusionKKError,
    InvalidModularDataError,
    ModelParseError,
    SectorIndexError,
    UnknownModelError,
    VerificationFailedError,
)
from src.util.log_util import configure_logging
from src.util.report import VACUUM_NOTE, Report, render_csv

logger = logging.getLogger(__name__)

VERSION = "1.0.0"

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

# Fusion matrices fed to the KK ring axiom check (cubic in the family size),
# joined by the noncommuting pair E01, E10
AXIOM_FAMILY_LIMIT = 4


def _add_model_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("model", nargs="?", help=f"builtin model ({', '.join(BUILTIN_NAMES)}) or file stem")
    parser.add_argument("--k", type=int, help="level of su2")
    parser.add_argument("--n", type=int, help="order of z_n")
    parser.add_argument("--file", help="path to a model JSON file")
    parser.add_argument("--jobs", type=int, help="worker processes (default from config)")
    parser.add_argument("--log-level", help="DEBUG, INFO, WARNING, ERROR")
    parser.add_argument("--reset-config", action="store_true", help="reset ~/.fusionkk config to defaults")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fusionkk", description=__doc__.split("\n")[1])
    parser.add_argument("--version", action="version", version=f"fusionkk {VERSION}")
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", help="fusion and modular verification report")
    _add_model_arguments(verify)

    eta = commands.add_parser("eta", help="fusion matrix of η for one sector")
    _add_model_arguments(eta)
    eta.add_argument("--sector", required=True, help="sector label or index")

    kk = commands.add_parser("kk", help="KK classes, products, the j homomorphism check and properness")
    _add_model_arguments(kk)
    kk.add_argument("--product", help="two sectors 'a,b': j(a) × j(b)")
    kk.add_argument("--theorem2", action="store_true", help="check that j is an injective unital semiring homomorphism")
    kk.add_argument("--properness", action="store_true", help="noncommuting pair outside the j-image")
    kk.add_argument("--element", help="Grothendieck ring element 'x0,x1,...' for the extended j")

    verlinde = commands.add_parser("verlinde", help="fusion tensor recomputed from S")
    _add_model_arguments(verlinde)

    invariants = commands.add_parser("invariants", help="classify modular invariants")
    _add_model_arguments(invariants)
    invariants.add_argument("--bound-mult", help="entry bound multiplier m (rational 'p/q')")
    invariants.add_argument("--format", choices=("json", "csv"), default="json")
    return parser


def resolve_model(args: argparse.Namespace, config: Config) -> Model:
    """Model from --file, a builtin name, or <modelDirectory>/<name>.json."""
    if args.file:
        return load_model(args.file)
    if not args.model:
        raise UnknownModelError("name a model or pass --file")
    try:
        return builtin(args.model, k=args.k, n=args.n)
    except UnknownModelError:
        if config.model_directory:
            candidate = os.path.join(config.model_directory, f"{args.model}.json")
            if os.path.isfile(candidate):
                return load_model(candidate)
        raise


def _require_modular(model: Model):
    if model.modular is None:
        raise UnknownModelError(f"{model.name} carries no modular data")
    return model.modular


def _parse_element(text: str, rank: int) -> KRingElement:
    try:
        coords = tuple(int(part) for part in text.split(","))
    except ValueError as error:
        raise DimensionMismatchError(f"--element must be comma separated integers: {text!r}") from error
    if len(coords) != rank:
        raise DimensionMismatchError(f"--element has {len(coords)} entries, the ring has rank {rank}")
    return KRingElement(coords)


def cmd_verify(model: Model, args: argparse.Namespace, config: Config) -> Tuple[Dict, int]:
    ring = model.ring
    reports = [verify_fusion_ring(ring), frobenius_symmetry(ring)]
    data: Dict = {
        "model": ring.name,
        "n": ring.rank,
        "labels": list(ring.labels),
        "perronDimensions": quantum_dimensions(ring),
    }
    md = model.modular
    if md is not None:
        reports.append(verify_modular_data(md))
        reports.append(dimension_eigen_relation(ring, md))
        dims = quantum_dimensions_exact(md)
        data["centralCharge"] = md.central_charge
        data["ambientOrder"] = md.ambient_order
        data["chargeConjugation"] = charge_conjugation(md)
        data["quantumDimensions"] = [
            {"exact": d, "interval": d.interval(config.precision_bits).real} for d in dims
        ]
    data["reports"] = [r.to_data() for r in reports]
    data["passed"] = all(r.passed for r in reports)
    for r in reports:
        logger.info(r.summary())
    return data, EXIT_OK if data["passed"] else EXIT_FAILED


def cmd_eta(model: Model, args: argparse.Namespace, config: Config) -> Tuple[Dict, int]:
    ring = model.ring
    i = sector_index(ring, args.sector)
    data = {
        "model": ring.name,
        "sector": ring.labels[i],
        "index": i,
        "convention": "(M_i)[k][j] = N_ij^k, column vectors",
        "matrix": fusion_matrix(ring, i),
    }
    return data, EXIT_OK


def cmd_kk(model: Model, args: argparse.Namespace, config: Config) -> Tuple[Dict, int]:
    ring = model.ring
    code = EXIT_OK
    data: Dict = {
        "model": ring.name,
        "labels": list(ring.labels),
        "classes": {label: kk_from_sector(ring, i) for i, label in enumerate(ring.labels)},
    }
    if args.product:
        parts = [p.strip() for p in args.product.split(",")]
        if len(parts) != 2:
            raise SectorIndexError(f"--product needs two sectors 'a,b', got {args.product!r}")
        a, b = resolve_sectors(ring, parts)
        product = kasparov_product(kk_from_sector(ring, a), kk_from_sector(ring, b))
        fused = ring_multiply(ring, KRingElement.basis(ring.rank, a), KRingElement.basis(ring.rank, b))
        data["product"] = {
            "left": ring.labels[a],
            "right": ring.labels[b],
            "class": product,
            "fusion": fused,
            "equalsJOfFusion": kk_from_element(ring, fused) == product,
        }
    if args.element:
        x = _parse_element(args.element, ring.rank)
        image = kk_from_element(ring, x)
        data["element"] = {"x": x, "class": image, "preimage": kk_preimage(ring, image)}
    if args.theorem2:
        report = verify_theorem2(ring)
        family = fusion_matrices(ring)[:AXIOM_FAMILY_LIMIT]
        if ring.rank >= 2:
            family += [matrix_unit(ring.rank, 0, 1), matrix_unit(ring.rank, 1, 0)]
        axioms = check_ring_axioms(family)
        data["theorem2"] = report.to_data()
        data["ringAxioms"] = axioms.to_data()
        if not (report.passed and axioms.passed):
            code = EXIT_FAILED
    if args.properness:
        witness = properness_witness(ring)
        data["properness"] = witness.to_data() if witness is not None else None
        if witness is not None and not witness.image_report.passed:
            code = EXIT_FAILED
    return data, code


def cmd_verlinde(model: Model, args: argparse.Namespace, config: Config) -> Tuple[Dict, int]:
    md = _require_modular(model)
    ring = model.ring
    recovered = verlinde_fusion(md, list(ring.labels))
    n = ring.rank
    diff = [
        [i, j, k, ring.fusion[i][j][k], recovered.fusion[i][j][k]]
        for i in range(n)
        for j in range(n)
        for k in range(n)
        if ring.fusion[i][j][k] != recovered.fusion[i][j][k]
    ]
    data = {
        "model": ring.name,
        "fusion": recovered.to_quadruples(),
        "matchesCatalog": not diff,
        "diff": diff,
    }
    return data, EXIT_OK if not diff else EXIT_FAILED


def cmd_invariants(model: Model, args: argparse.Namespace, config: Config) -> Tuple[Dict, int]:
    md = _require_modular(model)
    result = classify(md, ring=model.ring, bound_multiplier=config.bound_multiplier, jobs=config.jobs)
    return result.to_data(), EXIT_OK


COMMANDS: Dict[str, Callable[[Model, argparse.Namespace, Config], Tuple[Dict, int]]] = {
    "verify": cmd_verify,
    "eta": cmd_eta,
    "kk": cmd_kk,
    "verlinde": cmd_verlinde,
    "invariants": cmd_invariants,
}


def render(report: Report, fmt: str) -> str:
    if fmt == "csv":
        data = report.data
        return render_csv(
            ["model", "n", "commutant_dimension", "count"],
            [[data["model"], data["n"], data["commutantDimension"], data["count"]]],
        )
    return report.to_json() + "\n"


def run(argv: Optional[Sequence[str]] = None, stdout=None) -> int:
    """
    Parse argv, run one subcommand and print its report.

    Returns:
        int: Exit code (0 ok, 1 failed check, 2 usage or input error)
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    stdout = stdout if stdout is not None else sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exit_request:
        return EXIT_USAGE if exit_request.code else EXIT_OK

    started = time.perf_counter()
    try:
        config = Config(argv).override(
            bound_multiplier=getattr(args, "bound_mult", None),
            jobs=args.jobs,
            log_level=args.log_level,
        )
        configure_logging(config.log_level)
        model = resolve_model(args, config)
        data, code = COMMANDS[args.command](model, args, config)
    except VerificationFailedError as error:
        logger.error("%s", error)
        if error.report is not None:
            print(Report(args.command, {"report": error.report.to_data()}).data_json(), file=sys.stderr)
        return EXIT_FAILED
    except InvalidModularDataError as error:
        logger.error("%s", error)
        return EXIT_FAILED
    except (ModelParseError, UnknownModelError, SectorIndexError, DimensionMismatchError, ConfigError) as error:
        print(f"fusionkk: error: {error}", file=sys.stderr)
        return EXIT_USAGE
    except (FusionKKError, ValueError) as error:
        print(f"fusionkk: error: {error}", file=sys.stderr)
        return EXIT_USAGE

    data.update(VACUUM_NOTE)
    report = Report(
        args.command,
        data,
        meta={"version": VERSION, "wallTimeSeconds": round(time.perf_counter() - started, 3), "jobs": config.jobs},
    )
    stdout.write(render(report, getattr(args, "format", "json")))
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
