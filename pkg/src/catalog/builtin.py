"""
Built-in rational models.

    trivial      rank 1, S = (1), c = 0
    ising        labels (1, psi, sigma), c = 1/2, ambient order 48
    fibonacci    labels (1, tau), c = 14/5, h_tau = 2/5, ambient order 60
    su2 --k k    1 ≤ k ≤ 10: spins a = 0..k, ambient order 8(k+2)
    z_n --n n    2 ≤ n ≤ 12: pointed ℤ_n, ambient order lcm(4n, 24)

Every number is built exactly from ζ-combinations (sqrt_integer, sin_pi),
never from floats, and every model is verified when it is built. Results
are cached per (name, parameter): models are immutable.

SU(2)_k, with m = k + 2:
    N_ab^c = 1  iff |a − b| ≤ c ≤ min(a + b, 2k − a − b) and a + b + c even
    S_ab   = √(2/m)·sin(π(a+1)(b+1)/m) = √(2m)/m · sin(π(a+1)(b+1)/m)
    h_a    = a(a+2) / 4m,   c = 3k/m

ℤ_n:
    fusion a·b = a + b mod n
    q(a)   = a²/2n for n even, (n+1)a²/2n for n odd
    S_ab   = ζ_n^(−ab) / √n
    c mod 8 from the Gauss sum Σ_a e^{2πi q(a)} = √n·e^{2πic/8}
"""

import logging
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterator, List, Optional, Tuple

from src.catalog.model_file import Model
from src.exact_arith.cyclotomic import CyclotomicNumber, cyc_normalize, sin_pi, sqrt_integer, zeta
from src.fusion_core.fusion_ring import FusionRing, verify_fusion_ring
from src.modular.modular_data import ModularData, verify_modular_data
from src.modular.verlinde import verlinde_fusion
from src.util.errors import InvalidModularDataError, UnknownModelError, VerificationFailedError

logger = logging.getLogger(__name__)

SU2_LEVELS = range(1, 11)
ZN_ORDERS = range(2, 13)
BUILTIN_NAMES = ("trivial", "ising", "fibonacci", "su2", "z_n")


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _verified(ring: FusionRing, md: ModularData) -> Model:
    report = verify_fusion_ring(ring)
    if not report.passed:
        raise VerificationFailedError(f"builtin {ring.name} fusion ring: {report.summary()}", report)
    report = verify_modular_data(md)
    if not report.passed:
        raise VerificationFailedError(f"builtin {ring.name} modular data: {report.summary()}", report)
    return Model(ring, md)


def trivial() -> Model:
    ring = FusionRing("trivial", ("1",), (((1,),),))
    one = CyclotomicNumber.from_rational(1)
    md = ModularData.from_weights("trivial", [[one]], Fraction(0), [Fraction(0)], 1)
    return _verified(ring, md)


def ising() -> Model:
    order = 48
    ring = FusionRing.from_quadruples(
        "ising",
        ("1", "psi", "sigma"),
        [
            [0, 0, 0, 1], [0, 1, 1, 1], [0, 2, 2, 1],
            [1, 0, 1, 1], [1, 1, 0, 1], [1, 2, 2, 1],
            [2, 0, 2, 1], [2, 1, 2, 1], [2, 2, 0, 1], [2, 2, 1, 1],
        ],
    )
    half = CyclotomicNumber.from_rational(Fraction(1, 2), order)
    root = sqrt_integer(2).embed(order) * Fraction(1, 2)
    zero = CyclotomicNumber.zero(order)
    s = [
        [half, half, root],
        [half, half, -root],
        [root, -root, zero],
    ]
    md = ModularData.from_weights(
        "ising", s, Fraction(1, 2), [Fraction(0), Fraction(1, 2), Fraction(1, 16)], order
    )
    return _verified(ring, md)


def fibonacci() -> Model:
    order = 60
    ring = FusionRing.from_quadruples(
        "fibonacci",
        ("1", "tau"),
        [[0, 0, 0, 1], [0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 1], [1, 1, 1, 1]],
    )
    # 2/√5 = 2√5/5
    prefactor = sqrt_integer(5).embed(order) * Fraction(2, 5)
    small = prefactor * sin_pi(Fraction(1, 5))
    large = prefactor * sin_pi(Fraction(2, 5))
    s = [[small, large], [large, -small]]
    md = ModularData.from_weights("fibonacci", s, Fraction(14, 5), [Fraction(0), Fraction(2, 5)], order)
    return _verified(ring, md)


def su2_fusion(k: int) -> List[List[List[int]]]:
    """Truncated Clebsch–Gordan rules of SU(2)_k on spins 0..k (twice the spin)."""
    n = k + 1
    tensor = [[[0] * n for _ in range(n)] for _ in range(n)]
    for a in range(n):
        for b in range(n):
            for c in range(abs(a - b), min(a + b, 2 * k - a - b) + 1, 2):
                tensor[a][b][c] = 1
    return tensor


def su2(k: int) -> Model:
    if k not in SU2_LEVELS:
        raise UnknownModelError(f"su2 level must be in {SU2_LEVELS.start}..{SU2_LEVELS.stop - 1}, got {k}")
    m = k + 2
    order = 8 * m
    name = f"su2_{k}"
    labels = tuple(str(a) for a in range(k + 1))
    ring = FusionRing(name, labels, su2_fusion(k))

    prefactor = sqrt_integer(2 * m).embed(order) * Fraction(1, m)
    s = [
        [prefactor * sin_pi(Fraction((a + 1) * (b + 1), m)) for b in range(k + 1)]
        for a in range(k + 1)
    ]
    weights = [Fraction(a * (a + 2), 4 * m) for a in range(k + 1)]
    md = ModularData.from_weights(name, s, Fraction(3 * k, m), weights, order)
    model = _verified(ring, md)

    recovered = verlinde_fusion(md, list(labels))
    if recovered.fusion != ring.fusion:
        raise VerificationFailedError(f"{name}: Clebsch–Gordan rules differ from the Verlinde formula")
    return model


def zn_quadratic_form(n: int, a: int) -> Fraction:
    if n % 2 == 0:
        return Fraction(a * a, 2 * n)
    return Fraction((n + 1) * a * a, 2 * n)


def zn_central_charge(n: int) -> int:
    """c ∈ {0, …, 7} with Σ_a e^{2πi q(a)} = √n·ζ_8^c."""
    order = _lcm(4 * n, 8)
    gauss = cyc_normalize([(int(zn_quadratic_form(n, a) * order), 1) for a in range(n)], order)
    root = sqrt_integer(n).embed(order)
    for c in range(8):
        if gauss == root * zeta(8, c):
            return c
    raise InvalidModularDataError(f"Gauss sum of ℤ_{n} is not √n times an 8th root of unity")


def z_n(n: int) -> Model:
    if n not in ZN_ORDERS:
        raise UnknownModelError(f"z_n order must be in {ZN_ORDERS.start}..{ZN_ORDERS.stop - 1}, got {n}")
    order = _lcm(4 * n, 24)
    name = f"z_{n}"
    labels = tuple(str(a) for a in range(n))
    tensor = [[[1 if (a + b) % n == c else 0 for c in range(n)] for b in range(n)] for a in range(n)]
    ring = FusionRing(name, labels, tensor)

    inverse_root = sqrt_integer(n).embed(order).inverse()
    step = order // n
    s = [[zeta(order, -a * b * step) * inverse_root for b in range(n)] for a in range(n)]
    weights = [zn_quadratic_form(n, a) for a in range(n)]
    md = ModularData.from_weights(name, s, Fraction(zn_central_charge(n)), weights, order)
    return _verified(ring, md)


@lru_cache(maxsize=None)
def _build(name: str, parameter: Optional[int]) -> Model:
    if name == "trivial":
        return trivial()
    if name == "ising":
        return ising()
    if name == "fibonacci":
        return fibonacci()
    if name == "su2":
        if parameter is None:
            raise UnknownModelError("su2 needs a level k")
        return su2(parameter)
    if name == "z_n":
        if parameter is None:
            raise UnknownModelError("z_n needs an order n")
        return z_n(parameter)
    raise UnknownModelError(f"unknown model {name!r}; builtins are {', '.join(BUILTIN_NAMES)}")


def builtin(name: str, k: Optional[int] = None, n: Optional[int] = None) -> Model:
    """
    A verified builtin model.

    Args:
        name: One of BUILTIN_NAMES (also accepts "su2_4" and "z_5" spellings)
        k: SU(2) level
        n: ℤ_n order

    Raises:
        UnknownModelError: Unknown name or parameter out of range
    """
    name, k, n = _normalize_name(name, k, n)
    parameter = k if name == "su2" else n if name == "z_n" else None
    model = _build(name, parameter)
    logger.debug("builtin %s ready", model.name)
    return model


def _normalize_name(name: str, k: Optional[int], n: Optional[int]) -> Tuple[str, Optional[int], Optional[int]]:
    lowered = name.strip().lower()
    if lowered.startswith("su2_") and lowered[4:].isdigit():
        return "su2", int(lowered[4:]), n
    if lowered.startswith("z_") and lowered[2:].isdigit():
        return "z_n", k, int(lowered[2:])
    if lowered in ("zn", "z"):
        return "z_n", k, n
    return lowered, k, n


def catalog() -> Iterator[Tuple[str, Optional[int], Optional[int]]]:
    """(name, k, n) for every builtin model."""
    yield "trivial", None, None
    yield "ising", None, None
    yield "fibonacci", None, None
    for k in SU2_LEVELS:
        yield "su2", k, None
    for n in ZN_ORDERS:
        yield "z_n", None, n
