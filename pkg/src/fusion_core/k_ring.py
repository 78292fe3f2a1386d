"""
Elements of K₀ ≅ ℤⁿ over the basis of sector classes.

A KRingElement is an integer column vector. Negative coordinates are
allowed, so the same type carries the Grothendieck ring (formal
differences of sectors) and the classes of KK(ℂ, 𝔎) ≅ K₀.
"""

from dataclasses import dataclass
from typing import Iterable, Tuple

from src.util.errors import DimensionMismatchError, SectorIndexError


@dataclass(frozen=True)
class KRingElement:
    """Integer coordinates over the sector basis."""

    coords: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @classmethod
    def basis(cls, rank: int, index: int) -> "KRingElement":
        if not 0 <= index < rank:
            raise SectorIndexError(f"sector index {index} out of range for rank {rank}")
        return cls(tuple(1 if k == index else 0 for k in range(rank)))

    @classmethod
    def zero(cls, rank: int) -> "KRingElement":
        return cls((0,) * rank)

    @classmethod
    def of(cls, values: Iterable[int]) -> "KRingElement":
        return cls(tuple(values))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def _check(self, other: "KRingElement") -> None:
        if other.rank != self.rank:
            raise DimensionMismatchError(f"rank {self.rank} vs rank {other.rank}")

    def __add__(self, other: "KRingElement") -> "KRingElement":
        self._check(other)
        return KRingElement(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "KRingElement") -> "KRingElement":
        self._check(other)
        return KRingElement(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "KRingElement":
        return KRingElement(tuple(-a for a in self.coords))

    def __mul__(self, scalar: int) -> "KRingElement":
        if not isinstance(scalar, int):
            return NotImplemented
        return KRingElement(tuple(scalar * a for a in self.coords))

    __rmul__ = __mul__

    def __getitem__(self, index: int) -> int:
        return self.coords[index]

    def __iter__(self):
        return iter(self.coords)

    def to_data(self) -> list:
        return list(self.coords)
