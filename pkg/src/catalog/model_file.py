"""
Model files: JSON ingestion and serialization.

Schema (UTF-8 JSON object):

    name            string
    rank            int, optional; must equal len(labels) when present
    labels          n strings, labels[0] is the vacuum
    fusion          sparse list of [i, j, k, N_ij^k], absent entries are 0
    central_charge  "p/q"                     \\
    weights         n × "p/q"                  |  all four required when
    ambient_order   N                          |  S is present
    S               n × n cyclotomic entries  /

Cyclotomic entries are {"order": N, "coeffs": [...]} (canonical form),
{"zeta_pow": k, "scale": "p/q"} (a monomial in ζ_N), a list of such
objects (their sum), or a rational "p/q". T is never stored: it is
rebuilt from central_charge and weights.

Loading FAILS on any verification failure. A file that is not valid
JSON or violates the schema raises ModelParseError; a well-formed file
whose data violates an axiom raises VerificationFailedError carrying the
report.
"""

import json
import logging
import os
from dataclasses import dataclass
from typing import IO, Any, Dict, Optional, Union

from src.exact_arith.cyclotomic import CyclotomicNumber
from src.exact_arith.rational import format_rational, parse_rational
from src.fusion_core.fusion_ring import FusionRing, verify_fusion_ring
from src.modular.modular_data import ModularData, verify_modular_data
from src.util.errors import (
    FusionKKError,
    InvalidModularDataError,
    ModelParseError,
    SectorIndexError,
    VerificationFailedError,
)

logger = logging.getLogger(__name__)

MODULAR_KEYS = ("central_charge", "weights", "ambient_order")


@dataclass(frozen=True)
class Model:
    """A verified fusion ring with optional verified modular data."""

    ring: FusionRing
    modular: Optional[ModularData] = None

    @property
    def name(self) -> str:
        return self.ring.name


def _require(data: Dict[str, Any], key: str, kind: type) -> Any:
    if key not in data:
        raise ModelParseError(f"model file is missing '{key}'")
    value = data[key]
    if not isinstance(value, kind):
        raise ModelParseError(f"'{key}' must be a {kind.__name__}")
    return value


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _parse_ring(data: Dict[str, Any]) -> FusionRing:
    name = _require(data, "name", str)
    labels = _require(data, "labels", list)
    if not labels:
        raise ModelParseError("'labels' must name at least the vacuum")
    if "rank" in data and (not _is_int(data["rank"]) or data["rank"] != len(labels)):
        raise ModelParseError(f"rank {data['rank']} does not match {len(labels)} labels")
    quadruples = _require(data, "fusion", list)
    for quad in quadruples:
        if not isinstance(quad, list) or len(quad) != 4 or not all(_is_int(x) for x in quad):
            raise ModelParseError(f"fusion entry {quad!r} is not [i, j, k, N] of integers")
        if quad[3] < 0:
            raise ModelParseError(f"fusion entry {quad!r} has a negative multiplicity")
    try:
        return FusionRing.from_quadruples(name, [str(label) for label in labels], quadruples)
    except (SectorIndexError, ValueError) as error:
        raise ModelParseError(str(error)) from error


def _parse_modular(data: Dict[str, Any], ring: FusionRing) -> Optional[ModularData]:
    if "S" not in data:
        return None
    missing = [key for key in MODULAR_KEYS if key not in data]
    if missing:
        raise ModelParseError(f"an S matrix needs {', '.join(missing)}")
    order = data["ambient_order"]
    if not _is_int(order) or order < 1:
        raise ModelParseError("'ambient_order' must be a positive integer")
    n = ring.rank
    s_rows = data["S"]
    weights = data["weights"]
    if not isinstance(s_rows, list) or len(s_rows) != n or any(not isinstance(r, list) or len(r) != n for r in s_rows):
        raise ModelParseError(f"'S' must be a {n}×{n} matrix")
    if not isinstance(weights, list) or len(weights) != n:
        raise ModelParseError(f"'weights' must list {n} rationals")
    try:
        s = [[CyclotomicNumber.from_data(entry, order) for entry in row] for row in s_rows]
        central_charge = parse_rational(data["central_charge"])
        h = [parse_rational(w) for w in weights]
    except (ValueError, TypeError, FusionKKError) as error:
        raise ModelParseError(f"bad modular data entry: {error}") from error
    try:
        return ModularData.from_weights(ring.name, s, central_charge, h, order)
    except InvalidModularDataError as error:
        raise VerificationFailedError(str(error)) from error


def parse_model(data: Any) -> Model:
    """Validate a decoded JSON document and verify what it describes."""
    if not isinstance(data, dict):
        raise ModelParseError("a model file must contain a JSON object")
    ring = _parse_ring(data)
    modular = _parse_modular(data, ring)

    report = verify_fusion_ring(ring)
    if not report.passed:
        raise VerificationFailedError(f"fusion ring rejected: {report.summary()}", report)
    if modular is not None:
        report = verify_modular_data(modular)
        if not report.passed:
            raise VerificationFailedError(f"modular data rejected: {report.summary()}", report)
    logger.info("model %s loaded and verified (rank %d)", ring.name, ring.rank)
    return Model(ring, modular)


def load_model(source: Union[str, os.PathLike, IO[str]]) -> Model:
    """
    Load and verify a model file.

    Args:
        source: Path to a JSON file or an open text stream

    Raises:
        ModelParseError: Unreadable, not JSON, or not matching the schema
        VerificationFailedError: The model violates an axiom (report attached)
    """
    try:
        if hasattr(source, "read"):
            text = source.read()
        else:
            with open(source, "r", encoding="utf-8") as handle:
                text = handle.read()
    except OSError as error:
        raise ModelParseError(f"cannot read model file: {error}") from error
    try:
        data = json.loads(text)
    except json.JSONDecodeError as error:
        raise ModelParseError(f"model file is not valid JSON: {error}") from error
    return parse_model(data)


def serialize_model(model: Model) -> Dict[str, Any]:
    """Inverse of load_model: a JSON-ready dict in canonical form."""
    ring = model.ring
    data: Dict[str, Any] = {
        "name": ring.name,
        "rank": ring.rank,
        "labels": list(ring.labels),
        "fusion": ring.to_quadruples(),
    }
    md = model.modular
    if md is not None:
        data["central_charge"] = format_rational(md.central_charge)
        data["weights"] = [format_rational(h) for h in md.weights]
        data["ambient_order"] = md.ambient_order
        data["S"] = [[x.to_data() for x in row] for row in md.s]
    return data


def dump_model(model: Model) -> str:
    return json.dumps(serialize_model(model), indent=2, ensure_ascii=False) + "\n"
