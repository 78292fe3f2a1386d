"""
Dense univariate polynomials over ℚ and cyclotomic polynomials.

Polynomials are tuples of coefficients, lowest degree first, with no
trailing zeros (the zero polynomial is the empty tuple). Coefficients are
ints or Fractions; results of division are Fractions.

Φ_N is computed by dividing x^N − 1 by Φ_d for every proper divisor d of N
and cached per order, together with the integer reduction table
x^e mod Φ_N (0 ≤ e < N) that cyclotomic multiplication uses.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import List, Sequence, Tuple

Poly = Tuple


def trim(coeffs: Sequence) -> Poly:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


def degree(p: Poly) -> int:
    return len(p) - 1


def poly_sub(a: Poly, b: Poly) -> Poly:
    size = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(size)])


def poly_scale(a: Poly, c) -> Poly:
    return trim([c * x for x in a])


def poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] += x * y
    return trim(out)


def poly_divmod(a: Poly, b: Poly) -> Tuple[Poly, Poly]:
    """Quotient and remainder over ℚ. ``b`` must be nonzero."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    remainder: List = [Fraction(x) for x in a]
    lead = Fraction(b[-1])
    db = len(b) - 1
    if len(remainder) <= db:
        return (), trim(remainder)
    quotient: List = [Fraction(0)] * (len(remainder) - db)
    for shift in range(len(remainder) - 1 - db, -1, -1):
        c = remainder[shift + db] / lead
        if c == 0:
            continue
        quotient[shift] = c
        for j, y in enumerate(b):
            remainder[shift + j] -= c * y
    return trim(quotient), trim(remainder[:db])


def poly_exact_div(a: Poly, b: Poly) -> Poly:
    quotient, remainder = poly_divmod(a, b)
    if remainder:
        raise ArithmeticError("polynomial division is not exact")
    return quotient


def poly_xgcd(a: Poly, b: Poly) -> Tuple[Poly, Poly, Poly]:
    """
    Extended Euclid over ℚ.

    Returns:
        (g, s, t) with s·a + t·b = g and g monic (g = () when a = b = 0)
    """
    old_r, r = trim(a), trim(b)
    old_s, s = (Fraction(1),), ()
    old_t, t = (), (Fraction(1),)
    while r:
        q, rem = poly_divmod(old_r, r)
        old_r, r = r, rem
        old_s, s = s, poly_sub(old_s, poly_mul(q, s))
        old_t, t = t, poly_sub(old_t, poly_mul(q, t))
    if not old_r:
        return (), (), ()
    lead = Fraction(old_r[-1])
    return poly_scale(old_r, 1 / lead), poly_scale(old_s, 1 / lead), poly_scale(old_t, 1 / lead)


def divisors(n: int) -> List[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def totient(n: int) -> int:
    """Euler's φ(n)."""
    if n < 1:
        raise ValueError("totient is defined for n ≥ 1")
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    result, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> Tuple[int, ...]:
    """
    Φ_n with integer coefficients, lowest degree first.

    x^n − 1 = Π_{d | n} Φ_d, so Φ_n is x^n − 1 divided by all Φ_d, d a
    proper divisor of n.
    """
    if n < 1:
        raise ValueError("cyclotomic order must be ≥ 1")
    p: Poly = (-1,) + (0,) * (n - 1) + (1,)
    for d in divisors(n)[:-1]:
        p = poly_exact_div(p, cyclotomic_polynomial(d))
    result = tuple(int(c) for c in p)
    if len(result) - 1 != totient(n):
        raise ArithmeticError(f"degree of Φ_{n} is not φ({n})")
    return result


@lru_cache(maxsize=None)
def reduction_table(n: int) -> Tuple[Tuple[int, ...], ...]:
    """
    Integer coordinates of x^e mod Φ_n over the power basis, for 0 ≤ e < n.

    Φ_n is monic with integer coefficients, so every reduction stays in ℤ.
    """
    phi = totient(n)
    cyc = cyclotomic_polynomial(n)
    rows: List[Tuple[int, ...]] = []
    current = [0] * phi
    current[0] = 1
    rows.append(tuple(current))
    for _ in range(1, n):
        top = current[-1]
        shifted = [0] + current[:-1]
        if top:
            # x^phi = −(Φ_n − x^phi)
            for j in range(phi):
                shifted[j] -= top * cyc[j]
        current = shifted
        rows.append(tuple(current))
    return tuple(rows)


@lru_cache(maxsize=None)
def normalized_traces(n: int) -> Tuple[Fraction, ...]:
    """
    Tr(ζ_n^k)/φ(n) for the basis powers k < φ(n).

    The normalized trace is unchanged by embedding into a larger cyclotomic
    field, which makes it usable as an order-independent hash.
    """
    phi = totient(n)
    out = []
    for k in range(phi):
        m = n // gcd(k, n)
        out.append(Fraction(mobius(m), totient(m)))
    return tuple(out)
