"""
KK classes of the matrix model KK(𝔎,𝔎) ≅ End(K₀) ≅ M_n(ℤ).

Conventions, fixed here once:
    - K₀ elements are column vectors; a class acts by left multiplication:
      act(x, a) = a·x. This is the pairing KK(ℂ,𝔎) × KK(𝔎,𝔎) → KK(ℂ,𝔎).
    - The Kasparov product is order-reversed composition:
      kasparov_product(a, b) = b·a, so the class of ψ times the class of φ
      is the class of φ∘ψ. On the commutative image of the fusion ring the
      reversal is invisible; the matrix-unit test is what pins it down.
    - No grading: only the ungraded case is modelled.

See also:
    - kk_ring.py: the homomorphism j from the fusion ring into this ring
"""

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

from src.fusion_core.k_ring import KRingElement
from src.util.errors import DimensionMismatchError

IntMatrix = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class KKClass:
    """A square integer matrix, serialized row-major."""

    matrix: IntMatrix

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in self.matrix)
        if any(len(row) != len(rows) for row in rows):
            raise DimensionMismatchError("a KK class must be a square matrix")
        object.__setattr__(self, "matrix", rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> "KKClass":
        return cls(tuple(tuple(row) for row in rows))

    @classmethod
    def identity(cls, dim: int) -> "KKClass":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim)))

    @classmethod
    def zero(cls, dim: int) -> "KKClass":
        return cls(tuple((0,) * dim for _ in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def transpose(self) -> "KKClass":
        return KKClass(tuple(zip(*self.matrix)) if self.matrix else ())

    def column(self, index: int) -> Tuple[int, ...]:
        return tuple(row[index] for row in self.matrix)

    def __add__(self, other: "KKClass") -> "KKClass":
        return kk_add(self, other)

    def __sub__(self, other: "KKClass") -> "KKClass":
        return kk_add(self, kk_neg(other))

    def __neg__(self) -> "KKClass":
        return kk_neg(self)

    def __rmul__(self, scalar: int) -> "KKClass":
        if not isinstance(scalar, int):
            return NotImplemented
        return KKClass(tuple(tuple(scalar * x for x in row) for row in self.matrix))

    def to_data(self) -> list:
        return [list(row) for row in self.matrix]


def _same_dim(a: KKClass, b: KKClass) -> None:
    if a.dim != b.dim:
        raise DimensionMismatchError(f"KK classes of dimension {a.dim} and {b.dim}")


def matrix_unit(dim: int, row: int, col: int) -> KKClass:
    """E_{row,col}: 1 at (row, col), 0 elsewhere."""
    return KKClass(tuple(tuple(1 if (i, j) == (row, col) else 0 for j in range(dim)) for i in range(dim)))


def kk_unit(dim: int) -> KKClass:
    """Neutral element for the Kasparov product (class of the identity)."""
    return KKClass.identity(dim)


def kk_add(a: KKClass, b: KKClass) -> KKClass:
    _same_dim(a, b)
    return KKClass(tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a.matrix, b.matrix)))


def kk_neg(a: KKClass) -> KKClass:
    return KKClass(tuple(tuple(-x for x in row) for row in a.matrix))


def matmul(left: IntMatrix, right: IntMatrix) -> IntMatrix:
    cols = tuple(zip(*right))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in left)


def kasparov_product(a: KKClass, b: KKClass) -> KKClass:
    """a × b = matrix(b)·matrix(a)."""
    _same_dim(a, b)
    return KKClass(matmul(b.matrix, a.matrix))


def act(x: KRingElement, a: KKClass) -> KRingElement:
    """x × a for x ∈ K₀ = KK(ℂ,𝔎): the column vector a·x."""
    if x.rank != a.dim:
        raise DimensionMismatchError(f"element of rank {x.rank} against class of dimension {a.dim}")
    return KRingElement(tuple(sum(m * c for m, c in zip(row, x.coords)) for row in a.matrix))
