"""
Exact arithmetic in cyclotomic fields ℚ(ζ_N).

A CyclotomicNumber of order N is stored by its φ(N) rational coordinates
over the power basis 1, ζ_N, …, ζ_N^{φ(N)−1}, i.e. reduced modulo the
N-th cyclotomic polynomial Φ_N. That representation is canonical, so two
numbers of the same order are equal exactly when their coordinates are.

Entry points:
    cyc_normalize   raw {exponent: coefficient} data → canonical number
    cyc_add/cyc_mul strict same-order operations (OrderMismatchError otherwise)
    cyc_inv         inverse through the extended gcd with Φ_N over ℚ
    cyc_conj        the automorphism ζ_N ↦ ζ_N^{N−1}
    cyc_to_float    certified complex interval (mpmath interval arithmetic)

The Python operators (+, −, ×, /, **, ==) embed operands of different
orders into ℚ(ζ_lcm) first, so mixed-order expressions just work.

Internally products are computed on integer numerators over a common
denominator: Φ_N is monic with integer coefficients, so reduction by the
cached table x^e mod Φ_N never leaves ℤ.

See also:
    - polynomial.py: Φ_N, the reduction table, extended gcd
    - interval.py: Interval / ComplexInterval returned by cyc_to_float
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Any, Iterable, List, Mapping, Optional, Tuple, Union

from mpmath.ctx_iv import MPIntervalContext
from mpmath.libmp import to_rational

from src.exact_arith.interval import ComplexInterval, Interval
from src.exact_arith.polynomial import (
    cyclotomic_polynomial,
    normalized_traces,
    poly_divmod,
    poly_xgcd,
    reduction_table,
    totient,
    trim,
)
from src.exact_arith.rational import RationalLike, format_rational, parse_rational
from src.util.errors import CyclotomicZeroDivisionError, DimensionMismatchError, OrderMismatchError

MIN_PRECISION_BITS = 32
DEFAULT_PRECISION_BITS = 64

RawTerms = Union[Mapping[int, RationalLike], Iterable[Tuple[int, RationalLike]]]


@lru_cache(maxsize=None)
def _sparse_reduction_table(order: int) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
    return tuple(
        tuple((j, v) for j, v in enumerate(row) if v)
        for row in reduction_table(order)
    )


@dataclass(frozen=True, eq=False)
class CyclotomicNumber:
    """
    Element of ℚ(ζ_N) in canonical form.

    Attributes:
        order: N ≥ 1
        coeffs: φ(N) Fractions over the power basis 1, ζ_N, …, ζ_N^{φ(N)−1}
    """

    order: int
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError(f"cyclotomic order must be ≥ 1, got {self.order}")
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if len(coeffs) != totient(self.order):
            raise DimensionMismatchError(
                f"order {self.order} needs {totient(self.order)} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    # -- construction -----------------------------------------------------

    @classmethod
    def zero(cls, order: int = 1) -> "CyclotomicNumber":
        return cls(order, (Fraction(0),) * totient(order))

    @classmethod
    def from_rational(cls, value: RationalLike, order: int = 1) -> "CyclotomicNumber":
        coeffs = [Fraction(0)] * totient(order)
        coeffs[0] = parse_rational(value)
        return cls(order, tuple(coeffs))

    @classmethod
    def from_data(cls, data: Any, order: Optional[int] = None) -> "CyclotomicNumber":
        """
        Parse the model-file forms of a cyclotomic number.

        Accepted forms:
            {"order": N, "coeffs": ["p/q", …]}     canonical, φ(N) entries
            {"zeta_pow": k, "scale": "p/q"}        scale·ζ^k (order from context)
            [term, term, …]                        sum of the above
            "p/q" or int                            rational
        The result is embedded into ``order`` when one is given.
        """
        if isinstance(data, list):
            total = cls.zero(order or 1)
            for term in data:
                total = total + cls.from_data(term, order)
            return total.embed(order) if order else total
        if isinstance(data, dict):
            if "coeffs" in data:
                own = _json_int(data.get("order", order or 0), "order")
                value = cls(own, tuple(parse_rational(c) for c in data["coeffs"]))
            elif "zeta_pow" in data:
                own = _json_int(data.get("order", order or 0), "order")
                if own < 1:
                    raise ValueError("a zeta_pow term needs an order")
                value = zeta(own, _json_int(data["zeta_pow"], "zeta_pow")) * parse_rational(data.get("scale", 1))
            else:
                raise ValueError(f"unrecognized cyclotomic object: {sorted(data)}")
            return value.embed(order) if order else value
        return cls.from_rational(parse_rational(data), order or 1)

    # -- integer view -------------------------------------------------------

    @cached_property
    def _scaled(self) -> Tuple[Tuple[int, ...], int]:
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        return tuple(c.numerator * (den // c.denominator) for c in self.coeffs), den

    def integer_form(self) -> Tuple[Tuple[int, ...], int]:
        """(numerators, den) with coeffs[k] == numerators[k] / den."""
        return self._scaled

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def is_real(self) -> bool:
        return self == self.conj()

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def is_integer(self) -> bool:
        return self.is_rational() and self.coeffs[0].denominator == 1

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- field operations ---------------------------------------------------

    def embed(self, order: int) -> "CyclotomicNumber":
        """Image in ℚ(ζ_order) under ζ_N = ζ_order^{order/N}."""
        if order == self.order:
            return self
        if order % self.order:
            raise OrderMismatchError(f"ℚ(ζ_{self.order}) does not embed into ℚ(ζ_{order})")
        factor = order // self.order
        ints, den = self._scaled
        dense = [0] * order
        for k, c in enumerate(ints):
            if c:
                dense[(k * factor) % order] += c
        return from_integer_dense(dense, den, order)

    def conj(self) -> "CyclotomicNumber":
        return cyc_conj(self)

    def inverse(self) -> "CyclotomicNumber":
        return cyc_inv(self)

    def __neg__(self) -> "CyclotomicNumber":
        return CyclotomicNumber(self.order, tuple(-c for c in self.coeffs))

    def __add__(self, other: Any) -> "CyclotomicNumber":
        a, b = _coerce_pair(self, other)
        if b is None:
            return NotImplemented
        return cyc_add(a, b)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "CyclotomicNumber":
        a, b = _coerce_pair(self, other)
        if b is None:
            return NotImplemented
        return cyc_add(a, -b)

    def __rsub__(self, other: Any) -> "CyclotomicNumber":
        a, b = _coerce_pair(self, other)
        if b is None:
            return NotImplemented
        return cyc_add(b, -a)

    def __mul__(self, other: Any) -> "CyclotomicNumber":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            scale = Fraction(other)
            return CyclotomicNumber(self.order, tuple(c * scale for c in self.coeffs))
        a, b = _coerce_pair(self, other)
        if b is None:
            return NotImplemented
        return cyc_mul(a, b)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "CyclotomicNumber":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise CyclotomicZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        a, b = _coerce_pair(self, other)
        if b is None:
            return NotImplemented
        return cyc_mul(a, cyc_inv(b))

    def __rtruediv__(self, other: Any) -> "CyclotomicNumber":
        a, b = _coerce_pair(self, other)
        if b is None:
            return NotImplemented
        return cyc_mul(b, cyc_inv(a))

    def __pow__(self, exponent: int) -> "CyclotomicNumber":
        if exponent < 0:
            return cyc_inv(self) ** (-exponent)
        result = CyclotomicNumber.from_rational(1, self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = cyc_mul(result, base)
            base = cyc_mul(base, base)
            exponent >>= 1
        return result

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, CyclotomicNumber):
            if other.order == self.order:
                return self.coeffs == other.coeffs
            common = _lcm(self.order, other.order)
            return self.embed(common).coeffs == other.embed(common).coeffs
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        # Normalized trace is invariant under embedding, so equal numbers of
        # different orders hash alike; rationals hash like the Fraction.
        return hash(sum((c * t for c, t in zip(self.coeffs, normalized_traces(self.order))), Fraction(0)))

    # -- real-valued helpers --------------------------------------------------

    def interval(self, precision: int = DEFAULT_PRECISION_BITS) -> ComplexInterval:
        return cyc_to_float(self, precision)

    def approx(self) -> complex:
        return self.interval(DEFAULT_PRECISION_BITS).midpoint

    def _require_real(self) -> None:
        if not self.is_real():
            raise ValueError(f"{self} is not real")

    def sign(self) -> int:
        """Sign of a real element, decided by interval refinement."""
        self._require_real()
        if self.is_zero():
            return 0
        precision = DEFAULT_PRECISION_BITS
        while True:
            real = self.interval(precision).real
            if real.is_positive():
                return 1
            if real.is_negative():
                return -1
            precision *= 2

    def floor(self) -> int:
        self._require_real()
        if self.is_rational():
            return math.floor(self.coeffs[0])
        precision = DEFAULT_PRECISION_BITS
        while True:
            real = self.interval(precision).real
            # An irrational value never sits on an integer.
            if real.floor_is_determined():
                return math.floor(real.lo)
            precision *= 2

    def ceil(self) -> int:
        if self.is_rational():
            return math.ceil(self.coeffs[0])
        return self.floor() + 1

    # -- serialization --------------------------------------------------------

    def to_data(self) -> dict:
        return {"order": self.order, "coeffs": [format_rational(c) for c in self.coeffs]}

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                power = "ζ" if k == 1 else f"ζ^{k}"
                terms.append(power if c == 1 else f"({c})·{power}")
        return f"[{' + '.join(terms) or '0'}]_{self.order}"

    __repr__ = __str__


def _json_int(value: Any, key: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"'{key}' must be an integer, got {value!r}")
    return value


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def _coerce_pair(a: CyclotomicNumber, other: Any) -> Tuple[CyclotomicNumber, Optional[CyclotomicNumber]]:
    if isinstance(other, CyclotomicNumber):
        if other.order == a.order:
            return a, other
        common = _lcm(a.order, other.order)
        return a.embed(common), other.embed(common)
    if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
        return a, CyclotomicNumber.from_rational(other, a.order)
    return a, None


def from_integer_dense(dense: List[int], den: int, order: int) -> CyclotomicNumber:
    """Reduce Σ dense[e]·ζ^e / den (0 ≤ e < order) to canonical form."""
    phi = totient(order)
    out = list(dense[:phi]) + [0] * max(0, phi - len(dense))
    table = _sparse_reduction_table(order)
    for e in range(phi, min(order, len(dense))):
        c = dense[e]
        if c:
            for j, v in table[e]:
                out[j] += c * v
    return CyclotomicNumber(order, tuple(Fraction(x, den) for x in out))


def cyc_normalize(raw: RawTerms, order: int) -> CyclotomicNumber:
    """
    Canonical form of Σ c_e ζ_N^e.

    Args:
        raw: {exponent: coefficient} mapping or (exponent, coefficient) pairs;
             exponents are arbitrary integers, reduced mod N
        order: N ≥ 1

    Example:
        cyc_normalize({2: 1}, 4) -> −1
    """
    if order < 1:
        raise ValueError(f"cyclotomic order must be ≥ 1, got {order}")
    items = raw.items() if isinstance(raw, Mapping) else raw
    terms = [(int(e) % order, parse_rational(c)) for e, c in items]
    den = 1
    for _, c in terms:
        den = den * c.denominator // math.gcd(den, c.denominator)
    dense = [0] * order
    for e, c in terms:
        dense[e] += c.numerator * (den // c.denominator)
    return from_integer_dense(dense, den, order)


def zeta(order: int, power: int = 1) -> CyclotomicNumber:
    """ζ_order^power."""
    return cyc_normalize({power: 1}, order)


def root_of_unity(turns: RationalLike) -> CyclotomicNumber:
    """e^{2πi·turns} in ℚ(ζ_q), q the denominator of ``turns``."""
    turns = parse_rational(turns)
    return zeta(turns.denominator, turns.numerator)


def _require_same_order(a: CyclotomicNumber, b: CyclotomicNumber) -> None:
    if a.order != b.order:
        raise OrderMismatchError(
            f"orders {a.order} and {b.order} differ; embed both into a common order first"
        )


def cyc_add(a: CyclotomicNumber, b: CyclotomicNumber) -> CyclotomicNumber:
    _require_same_order(a, b)
    return CyclotomicNumber(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def cyc_mul(a: CyclotomicNumber, b: CyclotomicNumber) -> CyclotomicNumber:
    """Canonical product; both operands must have the same order."""
    _require_same_order(a, b)
    order = a.order
    ia, da = a._scaled
    ib, db = b._scaled
    nonzero_b = [(j, y) for j, y in enumerate(ib) if y]
    dense = [0] * order
    for i, x in enumerate(ia):
        if x:
            for j, y in nonzero_b:
                dense[(i + j) % order] += x * y
    return from_integer_dense(dense, da * db, order)


def cyc_inv(a: CyclotomicNumber) -> CyclotomicNumber:
    """Inverse via s·a + t·Φ_N = 1 over ℚ."""
    if a.is_zero():
        raise CyclotomicZeroDivisionError(f"{a} has no inverse")
    if a.is_rational():
        return CyclotomicNumber.from_rational(1 / a.coeffs[0], a.order)
    modulus = cyclotomic_polynomial(a.order)
    g, s, _ = poly_xgcd(trim(a.coeffs), modulus)
    if g != (Fraction(1),):
        raise ArithmeticError(f"gcd with Φ_{a.order} is not 1")
    _, s = poly_divmod(s, modulus)
    phi = totient(a.order)
    return CyclotomicNumber(a.order, tuple(s) + (Fraction(0),) * (phi - len(s)))


def cyc_conj(a: CyclotomicNumber) -> CyclotomicNumber:
    """Complex conjugation ζ_N ↦ ζ_N^{N−1}."""
    ints, den = a._scaled
    order = a.order
    dense = [0] * order
    for k, c in enumerate(ints):
        if c:
            dense[(-k) % order] += c
    return from_integer_dense(dense, den, order)


def cyc_to_float(a: CyclotomicNumber, precision: int = DEFAULT_PRECISION_BITS) -> ComplexInterval:
    """
    Certified enclosure of the complex value of ``a``.

    Args:
        a: The number to evaluate
        precision: Target precision in bits (≥ 32); guard bits are added for
                   the size of the coefficients so the radius stays near 2^-precision

    Returns:
        ComplexInterval: Exact-endpoint rectangle containing the value
    """
    if precision < MIN_PRECISION_BITS:
        raise ValueError(f"precision must be ≥ {MIN_PRECISION_BITS} bits")
    if a.is_zero():
        zero = Interval.point(0)
        return ComplexInterval(zero, zero)
    if a.is_rational():
        return ComplexInterval(Interval.point(a.coeffs[0]), Interval.point(0))

    ints, den = a._scaled
    biggest = max(abs(c) for c in ints)
    ctx = MPIntervalContext()
    ctx.prec = precision + 16 + biggest.bit_length() + len(ints).bit_length()
    angle_unit = 2 * ctx.pi / a.order
    real, imag = ctx.mpf(0), ctx.mpf(0)
    for k, c in enumerate(ints):
        if not c:
            continue
        angle = angle_unit * k
        real += c * ctx.cos(angle)
        imag += c * ctx.sin(angle)
    real = real / den
    imag = imag / den
    return ComplexInterval(_to_interval(real), _to_interval(imag))


def _to_interval(value: Any) -> Interval:
    lo, hi = value._mpi_
    return Interval(Fraction(*to_rational(lo)), Fraction(*to_rational(hi)))


def sqrt_integer(n: int) -> CyclotomicNumber:
    """
    Positive square root of n ≥ 0 inside ℚ(ζ_{4n}).

    The quadratic Gauss sum G = Σ_{j<4n} ζ_{4n}^{j²} equals (1+i)·√(4n), so
    √n = G·(1 − i)/4 with i = ζ_{4n}^n.
    """
    if n < 0:
        raise ValueError("sqrt_integer expects n ≥ 0")
    if n == 0:
        return CyclotomicNumber.zero(1)
    order = 4 * n
    gauss = cyc_normalize([((j * j) % order, 1) for j in range(order)], order)
    one_minus_i = cyc_normalize({0: 1, n: -1}, order)
    return cyc_mul(gauss, one_minus_i) * Fraction(1, 4)


def cos_pi(ratio: RationalLike) -> CyclotomicNumber:
    """cos(π·ratio) in ℚ(ζ_{2q})."""
    ratio = parse_rational(ratio)
    order = 2 * ratio.denominator
    return cyc_normalize({ratio.numerator: Fraction(1, 2), -ratio.numerator: Fraction(1, 2)}, order)


def sin_pi(ratio: RationalLike) -> CyclotomicNumber:
    """sin(π·ratio) = (ζ^a − ζ^{−a})/(2i) in ℚ(ζ_{lcm(2q, 4)})."""
    ratio = parse_rational(ratio)
    order = _lcm(2 * ratio.denominator, 4)
    half_turn = order // (2 * ratio.denominator)
    a = ratio.numerator * half_turn
    # 1/(2i) = −i/2 and i = ζ^{order/4}
    minus_i_half = {order // 4 * 3: Fraction(1, 2)}
    difference = cyc_normalize({a: 1, -a: -1}, order)
    return cyc_mul(difference, cyc_normalize(minus_i_half, order))
