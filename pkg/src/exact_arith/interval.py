"""
Certified real and complex intervals with exact rational endpoints.

Endpoints are Fractions, so containment and the ceil/floor decisions made
from them are exact; only the width of an interval depends on the working
precision that produced it. Evaluation of cyclotomic numbers into these
intervals lives in cyclotomic.py (mpmath interval contexts).
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Number = Union[int, Fraction]


@dataclass(frozen=True)
class Interval:
    """Closed real interval [lo, hi], lo ≤ hi."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, value: Number) -> "Interval":
        return cls(Fraction(value), Fraction(value))

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def radius(self) -> Fraction:
        return (self.hi - self.lo) / 2

    def contains(self, value: Number) -> bool:
        return self.lo <= value <= self.hi

    def is_positive(self) -> bool:
        return self.lo > 0

    def is_negative(self) -> bool:
        return self.hi < 0

    def excludes_zero(self) -> bool:
        return self.lo > 0 or self.hi < 0

    def __add__(self, other: "Interval") -> "Interval":
        return Interval(self.lo + other.lo, self.hi + other.hi)

    def __mul__(self, other: "Interval") -> "Interval":
        products = (self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi)
        return Interval(min(products), max(products))

    def scale(self, factor: Number) -> "Interval":
        factor = Fraction(factor)
        a, b = self.lo * factor, self.hi * factor
        return Interval(min(a, b), max(a, b))

    def floor_is_determined(self) -> bool:
        """True when every point of the interval has the same floor."""
        return math.floor(self.lo) == math.floor(self.hi)

    def approx(self) -> float:
        return float(self.mid)

    def to_data(self) -> dict:
        return {
            "lo": f"{self.lo.numerator}/{self.lo.denominator}",
            "hi": f"{self.hi.numerator}/{self.hi.denominator}",
            "approx": self.approx(),
        }


@dataclass(frozen=True)
class ComplexInterval:
    """
    Rectangle real × imag in the complex plane.

    ``midpoint`` and ``radius`` give the disc form: every point of the
    rectangle lies within ``radius`` of ``midpoint`` (radius is the sum of
    the half-widths, an upper bound of the half-diagonal).
    """

    real: Interval
    imag: Interval

    @property
    def midpoint(self) -> complex:
        return complex(float(self.real.mid), float(self.imag.mid))

    @property
    def radius(self) -> Fraction:
        return self.real.radius + self.imag.radius

    def contains(self, value: Union[Number, complex, tuple]) -> bool:
        if isinstance(value, tuple):
            re_part, im_part = value
        elif isinstance(value, complex):
            re_part, im_part = Fraction(value.real), Fraction(value.imag)
        else:
            re_part, im_part = Fraction(value), Fraction(0)
        return self.real.contains(re_part) and self.imag.contains(im_part)

    def to_data(self) -> dict:
        mid = self.midpoint
        return {
            "real": self.real.to_data(),
            "imag": self.imag.to_data(),
            "approx": {"re": mid.real, "im": mid.imag, "radius": float(self.radius)},
        }
