"""
Modular invariants: checking and exhaustive bounded classification.

A modular invariant is a nonnegative integer matrix Z with ZS = SZ,
ZT = TZ and Z_00 = 1 (vacuum at index 0). Read as an endomorphism of
K₀ ≅ ℤⁿ, the same matrix is a KK class, and every classification result
carries that reading (its "KK echo").

Enumeration strategy:
    1. Compute the rational commutant of S and T (commutant.py). Its basis
       is in reduced echelon form, so a commutant element is determined
       by its values x_r at the basis pivots: Z = Σ_r x_r·b_r.
    2. Bound every entry: 0 ≤ Z_ij ≤ ceil(m·d_i·d_j), m the bound
       multiplier, d_i exact quantum dimensions; Z_00 is pinned to 1.
    3. Scale the basis to integers (common denominator L) and walk the
       pivot values depth first. Each partial assignment is pruned when
       some entry can no longer reach its box, using suffix min/max of
       the remaining contributions.
    4. Leaves whose scaled entries are all divisible by L and inside
       their boxes are invariants; each one is re-verified exactly.

The walk is split into independent subtrees (one per value pair of the
first two pivots, the first being the pinned vacuum) that can run in a
multiprocessing pool. Results are merged and sorted lexicographically by
flattened entries, so the output does not depend on the number of workers.

See also:
    - commutant.py: the rational solution space
    - kk_model/smith.py: elementary divisors printed with each KK echo
"""

import functools
import itertools
import logging
import multiprocessing as mp
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from src.exact_arith import cyc_matrix
from src.exact_arith.rational import RationalLike, parse_rational
from src.fusion_core.fusion_ring import FusionRing
from src.kk_model.kk_class import KKClass
from src.kk_model.kk_ring import kk_preimage
from src.kk_model.smith import elementary_divisors
from src.modular.commutant import commutant_basis, require_nondegenerate
from src.modular.modular_data import ModularData
from src.modular.verlinde import quantum_dimensions_exact
from src.util.errors import DimensionMismatchError, VerificationFailedError
from src.util.report import VACUUM_NOTE, VerificationReport

logger = logging.getLogger(__name__)

CHECK_S_COMMUTATION = "s_commutation"
CHECK_T_COMMUTATION = "t_commutation"
CHECK_POSITIVITY = "positivity"
CHECK_VACUUM = "vacuum"

IntMatrix = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class ModularInvariant:
    """A nonnegative integer matrix commuting with S and T, Z_00 = 1."""

    matrix: IntMatrix

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def flat(self) -> Tuple[int, ...]:
        return tuple(x for row in self.matrix for x in row)

    def transpose(self) -> "ModularInvariant":
        return ModularInvariant(tuple(zip(*self.matrix)))

    def to_kk_class(self) -> KKClass:
        return KKClass(self.matrix)

    def to_data(self) -> list:
        return [list(row) for row in self.matrix]


def check_modular_invariant(md: ModularData, z: Sequence[Sequence[int]]) -> VerificationReport:
    """
    Evaluate modular invariance, positivity and vacuum uniqueness exactly.

    Raises:
        DimensionMismatchError: Z is not n×n
    """
    n = md.rank
    if len(z) != n or any(len(row) != n for row in z):
        raise DimensionMismatchError(f"Z must be {n}×{n}")
    z = [[int(x) for x in row] for row in z]
    report = VerificationReport(f"{md.name}: modular invariant")

    report.add_check(CHECK_S_COMMUTATION)
    witness = cyc_matrix.first_difference(cyc_matrix.int_mat_mul(z, md.s), cyc_matrix.mat_int_mul(md.s, z))
    if witness:
        report.fail(CHECK_S_COMMUTATION, "(ZS)_ij != (SZ)_ij", i=witness[0], j=witness[1])

    report.add_check(CHECK_T_COMMUTATION)
    phases = md.t_diagonal
    for i, j in itertools.product(range(n), repeat=2):
        if z[i][j] and phases[i] != phases[j]:
            report.fail(CHECK_T_COMMUTATION, "Z_ij != 0 but T_ii != T_jj", i=i, j=j)
            break

    report.add_check(CHECK_POSITIVITY)
    for i, j in itertools.product(range(n), repeat=2):
        if z[i][j] < 0:
            report.fail(CHECK_POSITIVITY, "Z_ij < 0", i=i, j=j, value=z[i][j])
            break

    report.add_check(CHECK_VACUUM)
    if z[0][0] != 1:
        report.fail(CHECK_VACUUM, "Z_00 must be 1", value=z[0][0])
    return report


def entry_bounds(md: ModularData, bound_multiplier: RationalLike = 1) -> List[List[int]]:
    """ceil(m·d_i·d_j) for all i, j, decided exactly."""
    multiplier = parse_rational(bound_multiplier)
    if multiplier <= 0:
        raise ValueError("bound multiplier must be positive")
    dims = quantum_dimensions_exact(md)
    n = md.rank
    bounds = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            bounds[i][j] = bounds[j][i] = (dims[i] * dims[j] * multiplier).ceil()
    return bounds


@dataclass(frozen=True)
class SearchPlan:
    """
    Integer data of the pruned walk, held in plain tuples.

    Attributes:
        scale: L, the common denominator of the commutant basis
        columns: For each pivot r, the sparse scaled basis vector ((var, c), ...)
        ranges: For each pivot r, (lo, hi) of its value x_r
        lower / upper: Per variable, L·(box bounds)
        suffix_min / suffix_max: Per depth r, per variable, the least and
                                 greatest contribution of pivots r..d−1
        variables: Variables touched by some basis vector
    """

    size: int
    scale: int
    columns: Tuple[Tuple[Tuple[int, int], ...], ...]
    ranges: Tuple[Tuple[int, int], ...]
    lower: Tuple[int, ...]
    upper: Tuple[int, ...]
    suffix_min: Tuple[Tuple[int, ...], ...]
    suffix_max: Tuple[Tuple[int, ...], ...]
    variables: Tuple[int, ...]

    @property
    def depth(self) -> int:
        return len(self.columns)


def build_plan(basis: Sequence[Sequence[Sequence[Fraction]]], bounds: Sequence[Sequence[int]]) -> SearchPlan:
    n = len(bounds)
    size = n * n
    vectors = [[Fraction(x) for row in b for x in row] for b in basis]
    scale = 1
    for v in vectors:
        for x in v:
            scale = scale * x.denominator // gcd(scale, x.denominator)
    scaled = [[int(x * scale) for x in v] for v in vectors]
    pivots = [next(var for var, x in enumerate(v) if x) for v in vectors]

    low = [0] * size
    high = [bounds[var // n][var % n] for var in range(size)]
    low[0] = high[0] = 1
    ranges = tuple((low[p], high[p]) for p in pivots)

    columns = tuple(tuple((var, c) for var, c in enumerate(v) if c) for v in scaled)
    variables = tuple(sorted({var for column in columns for var, _ in column} | {0}))

    suffix_min = [[0] * size for _ in range(len(vectors) + 1)]
    suffix_max = [[0] * size for _ in range(len(vectors) + 1)]
    for r in range(len(vectors) - 1, -1, -1):
        lo, hi = ranges[r]
        suffix_min[r] = list(suffix_min[r + 1])
        suffix_max[r] = list(suffix_max[r + 1])
        for var, c in columns[r]:
            suffix_min[r][var] += min(c * lo, c * hi)
            suffix_max[r][var] += max(c * lo, c * hi)

    return SearchPlan(
        size=size,
        scale=scale,
        columns=columns,
        ranges=ranges,
        lower=tuple(x * scale for x in low),
        upper=tuple(x * scale for x in high),
        suffix_min=tuple(tuple(row) for row in suffix_min),
        suffix_max=tuple(tuple(row) for row in suffix_max),
        variables=variables,
    )


def _feasible(plan: SearchPlan, partial: Sequence[int], depth: int) -> bool:
    low, high = plan.suffix_min[depth], plan.suffix_max[depth]
    for var in plan.variables:
        value = partial[var]
        if value + low[var] > plan.upper[var] or value + high[var] < plan.lower[var]:
            return False
    return True


def _extend(plan: SearchPlan, partial: List[int], depth: int, value: int) -> List[int]:
    out = list(partial)
    if value:
        for var, c in plan.columns[depth]:
            out[var] += c * value
    return out


def _leaf(plan: SearchPlan, partial: Sequence[int]) -> Optional[Tuple[int, ...]]:
    scale = plan.scale
    for var in range(plan.size):
        value = partial[var]
        if value % scale or not plan.lower[var] <= value <= plan.upper[var]:
            return None
    return tuple(value // scale for value in partial)


def search_subtree(plan: SearchPlan, prefix: Tuple[int, ...]) -> List[Tuple[int, ...]]:
    """All leaves below the given assignment of the first len(prefix) pivots."""
    partial = [0] * plan.size
    for depth, value in enumerate(prefix):
        partial = _extend(plan, partial, depth, value)
    if not _feasible(plan, partial, len(prefix)):
        return []
    found: List[Tuple[int, ...]] = []
    stack = [(len(prefix), partial)]
    while stack:
        depth, partial = stack.pop()
        if depth == plan.depth:
            leaf = _leaf(plan, partial)
            if leaf is not None:
                found.append(leaf)
            continue
        lo, hi = plan.ranges[depth]
        for value in range(hi, lo - 1, -1):
            nxt = _extend(plan, partial, depth, value)
            if _feasible(plan, nxt, depth + 1):
                stack.append((depth + 1, nxt))
    return found


def _prefixes(plan: SearchPlan) -> List[Tuple[int, ...]]:
    split_depth = min(2, plan.depth)
    ranges = [range(lo, hi + 1) for lo, hi in plan.ranges[:split_depth]]
    return [tuple(p) for p in itertools.product(*ranges)]


def run_search(plan: SearchPlan, jobs: int = 1) -> List[Tuple[int, ...]]:
    """Walk every subtree, in a pool when jobs > 1; output sorted and deduplicated."""
    if plan.depth == 0:
        return []
    prefixes = _prefixes(plan)
    if jobs > 1 and len(prefixes) > 1:
        with mp.Pool(min(jobs, len(prefixes))) as pool:
            chunks = list(pool.imap_unordered(functools.partial(search_subtree, plan), prefixes))
    else:
        chunks = [search_subtree(plan, prefix) for prefix in prefixes]
    return sorted(set(itertools.chain.from_iterable(chunks)))


def enumerate_modular_invariants(
    md: ModularData, bound_multiplier: RationalLike = 1, jobs: int = 1
) -> List[ModularInvariant]:
    """
    Every modular invariant with Z_ij ≤ ceil(m·d_i·d_j), sorted by flattened entries.

    Raises:
        DegenerateBraidingError: S is singular
        VerificationFailedError: A candidate failed exact re-verification
    """
    return classify(md, bound_multiplier=bound_multiplier, jobs=jobs).invariants


@dataclass
class Classification:
    """Result of classify(); to_data() is the deterministic report body."""

    model: str
    rank: int
    ambient_order: int
    bound_multiplier: Fraction
    bounds: List[List[int]]
    commutant_dimension: int
    invariants: List[ModularInvariant] = field(default_factory=list)
    kk_echo: List[Dict] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.invariants)

    def to_data(self) -> dict:
        data = {
            "model": self.model,
            "n": self.rank,
            "ambientOrder": self.ambient_order,
            "boundMultiplier": self.bound_multiplier,
            "bounds": self.bounds,
            "commutantDimension": self.commutant_dimension,
            "count": self.count,
            "invariants": [
                {"Z": invariant.to_data(), "kk": echo}
                for invariant, echo in zip(self.invariants, self.kk_echo)
            ],
        }
        data.update(VACUUM_NOTE)
        return data


def kk_echo(invariant: ModularInvariant, ring: Optional[FusionRing] = None) -> dict:
    """The invariant read as a KK class, with its integer invariants."""
    kk_class = invariant.to_kk_class()
    divisors = elementary_divisors(kk_class)
    determinant = 0
    if len(divisors) == kk_class.dim:
        determinant = functools.reduce(lambda a, b: a * b, divisors, 1)
    echo = {
        "class": kk_class.to_data(),
        "elementaryDivisors": divisors,
        "rank": len(divisors),
        "absDeterminant": determinant,
    }
    if ring is not None and ring.rank == kk_class.dim:
        preimage = kk_preimage(ring, kk_class)
        echo["fusionPreimage"] = preimage.to_data() if preimage is not None else None
    return echo


def classify(
    md: ModularData,
    ring: Optional[FusionRing] = None,
    bound_multiplier: RationalLike = 1,
    jobs: int = 1,
) -> Classification:
    """
    Full classification with bounds, commutant dimension and KK echoes.

    Args:
        md: Verified modular data
        ring: Fusion ring of the model; when given, each echo says whether
              the class is j(x) for some x in the Grothendieck ring
        bound_multiplier: m in Z_ij ≤ ceil(m·d_i·d_j)
        jobs: Worker processes for the walk
    """
    require_nondegenerate(md)
    multiplier = parse_rational(bound_multiplier)
    bounds = entry_bounds(md, multiplier)
    basis = commutant_basis(md)
    plan = build_plan(basis, bounds)
    logger.debug(
        "search plan for %s: %d pivots, scale %d, ranges %s", md.name, plan.depth, plan.scale, list(plan.ranges)
    )

    n = md.rank
    invariants = []
    for flat in run_search(plan, jobs):
        z = tuple(tuple(flat[i * n: (i + 1) * n]) for i in range(n))
        report = check_modular_invariant(md, z)
        if not report.passed:
            raise VerificationFailedError(f"enumerated matrix failed re-verification: {report.summary()}", report)
        invariants.append(ModularInvariant(z))

    result = Classification(
        model=md.name,
        rank=n,
        ambient_order=md.ambient_order,
        bound_multiplier=multiplier,
        bounds=bounds,
        commutant_dimension=len(basis),
        invariants=invariants,
        kk_echo=[kk_echo(z, ring) for z in invariants],
    )
    logger.info("%s: %d modular invariants (commutant dimension %d)", md.name, result.count, result.commutant_dimension)
    return result
