"""
Exact rational linear algebra: echelon forms and nullspaces.

Rows are reduced fraction-free: every stored row is a primitive integer
vector (content 1, leading entry positive), and eliminating a pivot from a
row replaces r by (lead_p·r − r_c·p)/content. Rows are sparse dicts
{column: int}, which keeps the many short equations of the commutant
system cheap. The final reduced echelon form is produced over ℚ.
"""

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Dict, Iterable, List, Mapping, Sequence

SparseRow = Dict[int, int]


def _primitive(row: SparseRow) -> SparseRow:
    if not row:
        return row
    content = reduce(gcd, (abs(v) for v in row.values()))
    lead = row[min(row)]
    if lead < 0:
        content = -content
    return {c: v // content for c, v in row.items()}


def integer_row(row: Mapping[int, Fraction]) -> SparseRow:
    """Clear denominators of a sparse rational row and make it primitive."""
    entries = {c: Fraction(v) for c, v in row.items() if v}
    if not entries:
        return {}
    den = reduce(lambda a, b: a * b // gcd(a, b), (v.denominator for v in entries.values()), 1)
    return _primitive({c: int(v * den) for c, v in entries.items()})


class EchelonBuilder:
    """
    Incremental fraction-free row echelon form.

    Rows are added one at a time; each is reduced against the stored pivots
    and kept only if something survives. ``rank`` is the number of pivots.
    """

    def __init__(self, ncols: int) -> None:
        self.ncols = ncols
        self.pivots: Dict[int, SparseRow] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def add_row(self, row: Mapping[int, Fraction]) -> bool:
        """Reduce and insert a row; returns True if it increased the rank."""
        current = integer_row(row)
        while current:
            lead_col = min(current)
            pivot_row = self.pivots.get(lead_col)
            if pivot_row is None:
                self.pivots[lead_col] = current
                return True
            a = pivot_row[lead_col]
            b = current[lead_col]
            combined: SparseRow = {}
            for c in set(current) | set(pivot_row):
                v = a * current.get(c, 0) - b * pivot_row.get(c, 0)
                if v:
                    combined[c] = v
            current = _primitive(combined)
        return False

    def add_rows(self, rows: Iterable[Mapping[int, Fraction]]) -> None:
        for row in rows:
            self.add_row(row)
            if self.rank == self.ncols:
                return

    def rref(self) -> List[List[Fraction]]:
        """Reduced row echelon form over ℚ, rows ordered by pivot column."""
        order = sorted(self.pivots)
        dense: Dict[int, List[Fraction]] = {}
        for col in order:
            row = self.pivots[col]
            lead = Fraction(row[col])
            dense[col] = [Fraction(row.get(c, 0)) / lead for c in range(self.ncols)]
        for col in reversed(order):
            pivot = dense[col]
            for other in order:
                if other == col:
                    continue
                factor = dense[other][col]
                if factor:
                    dense[other] = [x - factor * y for x, y in zip(dense[other], pivot)]
        return [dense[col] for col in order]


def rref(rows: Sequence[Sequence[Fraction]]) -> List[List[Fraction]]:
    ncols = len(rows[0]) if rows else 0
    builder = EchelonBuilder(ncols)
    builder.add_rows({c: v for c, v in enumerate(row) if v} for row in rows)
    return builder.rref()


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    ncols = len(rows[0]) if rows else 0
    builder = EchelonBuilder(ncols)
    builder.add_rows({c: v for c, v in enumerate(row) if v} for row in rows)
    return builder.rank


def nullspace_from_echelon(builder: EchelonBuilder) -> List[List[Fraction]]:
    """
    Basis of {x : R·x = 0} in reduced echelon form.

    One vector per free column f (x_f = 1, other free columns 0), then the
    stacked basis itself is brought to reduced echelon form so the result
    depends only on the solution space.
    """
    reduced = builder.rref()
    pivot_cols = sorted(builder.pivots)
    pivot_set = set(pivot_cols)
    basis = []
    for free in range(builder.ncols):
        if free in pivot_set:
            continue
        vector = [Fraction(0)] * builder.ncols
        vector[free] = Fraction(1)
        for row, col in zip(reduced, pivot_cols):
            vector[col] = -row[free]
        basis.append(vector)
    return rref(basis) if basis else []


def nullspace(rows: Iterable[Mapping[int, Fraction]], ncols: int) -> List[List[Fraction]]:
    builder = EchelonBuilder(ncols)
    builder.add_rows(rows)
    return nullspace_from_echelon(builder)
