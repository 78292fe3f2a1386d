"""
Dense matrices over ℚ(ζ_N).

Matrices are tuples of row tuples of CyclotomicNumber sharing one ambient
order. Only what the modular-data code needs is here: products, adjoints,
comparisons, mixed integer×cyclotomic products and a rank computation.
"""

import math
from typing import List, Sequence, Tuple

from src.exact_arith.cyclotomic import CyclotomicNumber, cyc_add, cyc_inv, cyc_mul, from_integer_dense
from src.util.errors import DimensionMismatchError, OrderMismatchError

CycMatrix = Tuple[Tuple[CyclotomicNumber, ...], ...]


def as_matrix(rows: Sequence[Sequence[CyclotomicNumber]]) -> CycMatrix:
    return tuple(tuple(row) for row in rows)


def zeros(n: int, order: int) -> CycMatrix:
    zero = CyclotomicNumber.zero(order)
    return tuple(tuple(zero for _ in range(n)) for _ in range(n))


def identity(n: int, order: int) -> CycMatrix:
    zero = CyclotomicNumber.zero(order)
    one = CyclotomicNumber.from_rational(1, order)
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def diagonal(entries: Sequence[CyclotomicNumber]) -> CycMatrix:
    order = entries[0].order if entries else 1
    zero = CyclotomicNumber.zero(order)
    n = len(entries)
    return tuple(tuple(entries[i] if i == j else zero for j in range(n)) for i in range(n))


def shape(a: CycMatrix) -> Tuple[int, int]:
    return len(a), (len(a[0]) if a else 0)


def _integer_matrix(a: CycMatrix):
    """Sparse integer numerators of every entry over one common denominator."""
    den = 1
    for row in a:
        for x in row:
            d = x.integer_form()[1]
            den = den * d // math.gcd(den, d)
    out = []
    for row in a:
        new_row = []
        for x in row:
            ints, d = x.integer_form()
            factor = den // d
            new_row.append(tuple((e, c * factor) for e, c in enumerate(ints) if c))
        out.append(new_row)
    return out, den


def mat_mul(a: CycMatrix, b: CycMatrix) -> CycMatrix:
    """
    Exact product over ℚ(ζ_N).

    Each entry is accumulated as an unreduced integer vector of length N and
    reduced modulo Φ_N once, instead of once per term.
    """
    rows, inner = shape(a)
    inner_b, cols = shape(b)
    if inner != inner_b:
        raise DimensionMismatchError(f"cannot multiply {rows}×{inner} by {inner_b}×{cols}")
    if not rows or not cols:
        return tuple(() for _ in range(rows))
    order = a[0][0].order
    if any(x.order != order for row in a for x in row) or any(y.order != order for row in b for y in row):
        raise OrderMismatchError("matrix entries must share one cyclotomic order")
    ia, da = _integer_matrix(a)
    ib, db = _integer_matrix(b)
    out: List[Tuple[CyclotomicNumber, ...]] = []
    for i in range(rows):
        row = []
        nonzero = [(k, terms) for k, terms in enumerate(ia[i]) if terms]
        for j in range(cols):
            dense = [0] * order
            for k, left in nonzero:
                right = ib[k][j]
                for e, x in left:
                    for f, y in right:
                        dense[(e + f) % order] += x * y
            row.append(from_integer_dense(dense, da * db, order))
        out.append(tuple(row))
    return tuple(out)


def int_mat_mul(z: Sequence[Sequence[int]], a: CycMatrix) -> CycMatrix:
    """Z·A for an integer matrix Z."""
    n = len(z)
    order = a[0][0].order
    out = []
    for i in range(n):
        row = []
        for j in range(len(a[0])):
            acc = CyclotomicNumber.zero(order)
            for k in range(len(a)):
                if z[i][k]:
                    acc = cyc_add(acc, a[k][j] * z[i][k])
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_int_mul(a: CycMatrix, z: Sequence[Sequence[int]]) -> CycMatrix:
    """A·Z for an integer matrix Z."""
    order = a[0][0].order
    out = []
    for i in range(len(a)):
        row = []
        for j in range(len(z[0])):
            acc = CyclotomicNumber.zero(order)
            for k in range(len(z)):
                if z[k][j]:
                    acc = cyc_add(acc, a[i][k] * z[k][j])
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def scale_columns(a: CycMatrix, entries: Sequence[CyclotomicNumber]) -> CycMatrix:
    """A·diag(entries)."""
    return tuple(tuple(cyc_mul(x, d) for x, d in zip(row, entries)) for row in a)


def scale_rows(entries: Sequence[CyclotomicNumber], a: CycMatrix) -> CycMatrix:
    """diag(entries)·A."""
    return tuple(tuple(cyc_mul(d, x) for x in row) for d, row in zip(entries, a))


def transpose(a: CycMatrix) -> CycMatrix:
    return tuple(zip(*a)) if a else ()


def conj_transpose(a: CycMatrix) -> CycMatrix:
    return tuple(tuple(x.conj() for x in col) for col in zip(*a)) if a else ()


def first_difference(a: CycMatrix, b: CycMatrix):
    """First (i, j) where the matrices differ, or None."""
    for i, (row_a, row_b) in enumerate(zip(a, b)):
        for j, (x, y) in enumerate(zip(row_a, row_b)):
            if x != y:
                return i, j
    return None


def rank(a: CycMatrix) -> int:
    """Rank over ℚ(ζ_N) by Gaussian elimination."""
    rows = [list(row) for row in a]
    if not rows:
        return 0
    n_rows, n_cols = len(rows), len(rows[0])
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if not rows[i][c].is_zero()), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = cyc_inv(rows[r][c])
        for i in range(r + 1, n_rows):
            if rows[i][c].is_zero():
                continue
            factor = cyc_mul(rows[i][c], inv)
            rows[i] = [
                cyc_add(rows[i][k], -cyc_mul(factor, rows[r][k])) if k >= c else rows[i][k]
                for k in range(n_cols)
            ]
        r += 1
        if r == n_rows:
            break
    return r
