"""Divisor classes in the (L0, L1) basis and two-ray cones."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Optional

from .kclass import format_rational


@dataclass(frozen=True)
class PicardClass:
    l0: Fraction
    l1: Fraction

    def __post_init__(self):
        object.__setattr__(self, "l0", Fraction(self.l0))
        object.__setattr__(self, "l1", Fraction(self.l1))

    def __iter__(self):
        return iter((self.l0, self.l1))

    def __add__(self, other: "PicardClass") -> "PicardClass":
        return PicardClass(self.l0 + other.l0, self.l1 + other.l1)

    def __mul__(self, k) -> "PicardClass":
        return PicardClass(k * self.l0, k * self.l1)

    __rmul__ = __mul__

    def __neg__(self) -> "PicardClass":
        return PicardClass(-self.l0, -self.l1)

    def primitive(self) -> "PicardClass":
        """Positive multiple with coprime integer coordinates."""
        if self.l0 == 0 and self.l1 == 0:
            raise ValueError("the zero class has no primitive ray")
        den = lcm(self.l0.denominator, self.l1.denominator)
        a, b = int(self.l0 * den), int(self.l1 * den)
        g = gcd(a, b)
        return PicardClass(a // g, b // g)

    def as_ray(self) -> list[int]:
        p = self.primitive()
        return [int(p.l0), int(p.l1)]

    def to_json(self) -> dict:
        return {"l0": format_rational(self.l0), "l1": format_rational(self.l1)}


L0 = PicardClass(1, 0)


def det2(x: PicardClass, y: PicardClass) -> Fraction:
    return x.l0 * y.l1 - x.l1 * y.l0


def same_ray(x: PicardClass, y: PicardClass) -> bool:
    return x.primitive() == y.primitive()


class ConeStatus(enum.Enum):
    PROVEN = "proven"
    UNKNOWN = "unknown"
    NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class Cone2:
    """Cone spanned by two rays; ``ray_a`` is always L0."""

    ray_a: Optional[PicardClass]
    ray_b: Optional[PicardClass]
    status: ConeStatus

    def __post_init__(self):
        if self.status is not ConeStatus.NOT_APPLICABLE:
            object.__setattr__(self, "ray_a", self.ray_a.primitive())
            object.__setattr__(self, "ray_b", self.ray_b.primitive())

    @classmethod
    def not_applicable(cls) -> "Cone2":
        return cls(None, None, ConeStatus.NOT_APPLICABLE)

    def coefficients(self, x: PicardClass) -> tuple[Fraction, Fraction]:
        """(p, q) with x = p * ray_a + q * ray_b."""
        a, b = self.ray_a, self.ray_b
        d = det2(a, b)
        if d == 0:
            raise ValueError("degenerate cone")
        return det2(x, b) / d, det2(a, x) / d

    def contains(self, x: PicardClass) -> bool:
        p, q = self.coefficients(x)
        return p >= 0 and q >= 0

    def strictly_contains(self, x: PicardClass) -> bool:
        p, q = self.coefficients(x)
        return p > 0 and q > 0

    def to_json(self) -> dict:
        rays = None if self.ray_a is None else [self.ray_a.as_ray(), self.ray_b.as_ray()]
        return {"rays": rays, "status": self.status.value}
