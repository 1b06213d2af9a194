"""Walls in the (s, t) half-plane for one-dimensional sheaf classes.

All geometry is kept polynomial in t^2 and in radius^2 so that nothing leaves
the rationals. Bayer-Macri degrees, which are genuinely linear in t, are
returned as ``x + y*t`` with t^2 known.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Optional, Union

from .cones import curve_basis_pairing, curve_dot, effective_cone
from .errors import InvariantViolation, NotOneDimensional, ZeroCentralCharge
from .kclass import (
    HALF,
    ChernCharacter,
    coords,
    common_kernel,
    decompose_in_cperp,
    euler_characteristic,
    format_rational,
    ideal_twist,
    line_class,
    onedim,
    orthogonal_basis,
    point_class,
    structure_sheaf_twist,
)
from .moduli import ModuliSpace
from .picard import L0, Cone2, ConeStatus, PicardClass


@dataclass(frozen=True)
class StabilityPoint:
    s: Fraction
    t_sq: Fraction

    def __post_init__(self):
        object.__setattr__(self, "s", Fraction(self.s))
        object.__setattr__(self, "t_sq", Fraction(self.t_sq))
        if self.t_sq <= 0:
            raise ValueError(f"t^2 must be positive, got {self.t_sq}")


class WallDegeneracy(enum.Enum):
    EMPTY = "empty"
    EVERYWHERE = "everywhere"


EMPTY = WallDegeneracy.EMPTY
EVERYWHERE = WallDegeneracy.EVERYWHERE


@dataclass(frozen=True)
class Wall:
    center: Fraction
    radius_sq: Fraction

    def __post_init__(self):
        object.__setattr__(self, "center", Fraction(self.center))
        object.__setattr__(self, "radius_sq", Fraction(self.radius_sq))
        if self.radius_sq <= 0:
            raise ValueError("a wall needs positive radius^2; use make_wall for possibly empty walls")

    def contains_point(self, p: StabilityPoint) -> bool:
        return (p.s - self.center) ** 2 + p.t_sq == self.radius_sq

    def strictly_contains(self, inner: "Wall") -> bool:
        """True when ``inner`` lies strictly inside this semicircle.

        Decides |dc| + r < R with R^2, r^2 rational, by squaring twice.
        """
        dc2 = (self.center - inner.center) ** 2
        if inner.radius_sq >= self.radius_sq:
            return False
        lhs = self.radius_sq - inner.radius_sq - dc2
        return lhs > 0 and lhs * lhs > 4 * dc2 * inner.radius_sq

    def to_json(self) -> dict:
        return {"center": format_rational(self.center), "radius_sq": format_rational(self.radius_sq)}


def make_wall(center, radius_sq) -> Union[Wall, WallDegeneracy]:
    if radius_sq <= 0:
        return EMPTY
    return Wall(center, radius_sq)


# -- slopes ------------------------------------------------------------------


def _require_onedim(c) -> tuple[Fraction, Fraction, Fraction]:
    c0, c1, c2 = coords(c)
    if c0 != 0 or c1 <= 0:
        raise NotOneDimensional(f"expected ch0 == 0 and ch1 > 0, got {tuple(coords(c))}")
    return c0, c1, c2


def simpson_slope(x) -> Fraction:
    _, x1, _ = _require_onedim(x)
    return euler_characteristic(x) / x1


@dataclass(frozen=True)
class BridgelandSlope:
    """mu_{s,t} = scaled / t, or infinite when the imaginary part vanishes.

    Since t > 0, comparisons at one point only need ``scaled``.
    """

    scaled: Optional[Fraction]

    @property
    def is_infinite(self) -> bool:
        return self.scaled is None

    def value(self, t: float) -> float:
        return float("inf") if self.scaled is None else float(self.scaled) / t


def bridgeland_slope(x, p: StabilityPoint) -> BridgelandSlope:
    x0, x1, x2 = coords(x)
    num = x0 / 2 * (p.s * p.s - p.t_sq) + x2 - p.s * x1
    den = x1 - p.s * x0
    if den == 0:
        return BridgelandSlope(None)
    return BridgelandSlope(num / den)


def potential_wall(c, e) -> Union[Wall, WallDegeneracy]:
    """Locus where e and the one-dimensional class c have equal Bridgeland slope."""
    _, c1, c2 = _require_onedim(c)
    e0, e1, e2 = coords(e)
    center = c2 / c1
    if e0 == 0:
        return EVERYWHERE if c2 * e1 == c1 * e2 else EMPTY
    return make_wall(center, center * center + 2 / e0 * (e2 - center * e1))


def rank_radius_bound(mu: int, rank: int) -> Fraction:
    """Upper bound on the radius of a wall from a torsion-free sheaf of given rank."""
    if rank < 1:
        raise ValueError(f"rank must be positive, got {rank}")
    return Fraction(mu, 2 * rank)


def ideal_twist_wall(k: int, n: int) -> Optional[Wall]:
    """The semicircle bounding the stable region of I_W(k), |W| = n (None for n == 0)."""
    if n == 0:
        return None
    return Wall(k - n - HALF, (n - HALF) ** 2)


def ideal_twist_stable_at(k: int, n: int, p: StabilityPoint) -> bool:
    if p.s >= k:
        return False
    if n == 0:
        return True
    w = ideal_twist_wall(k, n)
    return (p.s - w.center) ** 2 + p.t_sq > w.radius_sq


# -- destabilizers -------------------------------------------------------------


class DestabilizerKind(enum.Enum):
    IDEAL = "ideal"
    LINE = "line"
    SHIFTED_LINE = "shifted_line"
    LINE_ON_LINE = "line_on_line"
    EXTENSION = "extension"  # zero-dimensional sheaf of length `points` extended by O(twist)[1]


@dataclass(frozen=True)
class Destabilizer:
    kind: DestabilizerKind
    twist: Union[int, Fraction]
    points: int = 0
    chern: ChernCharacter = field(init=False, compare=False)

    def __post_init__(self):
        k, n = self.twist, self.points
        if self.kind is DestabilizerKind.IDEAL:
            ch = ideal_twist(k, n)
        elif self.kind is DestabilizerKind.LINE:
            ch = structure_sheaf_twist(k)
        elif self.kind is DestabilizerKind.SHIFTED_LINE:
            ch = -structure_sheaf_twist(k)
        elif self.kind is DestabilizerKind.LINE_ON_LINE:
            twist = Fraction(k)
            if twist.denominator != 1:
                raise ValueError(f"O_l({twist}) is not a sheaf twist")
            ch = line_class(int(twist))
        else:
            ch = n * point_class() - structure_sheaf_twist(k)
        object.__setattr__(self, "chern", ch)

    @classmethod
    def ideal(cls, k: int, n: int) -> "Destabilizer":
        return cls(DestabilizerKind.IDEAL, k, n)

    @classmethod
    def line(cls, k: int) -> "Destabilizer":
        return cls(DestabilizerKind.LINE, k)

    @classmethod
    def shifted_line(cls, k: int) -> "Destabilizer":
        return cls(DestabilizerKind.SHIFTED_LINE, k)

    @classmethod
    def line_on_line(cls, k) -> "Destabilizer":
        return cls(DestabilizerKind.LINE_ON_LINE, k)

    @classmethod
    def extension(cls, points: int, k: int) -> "Destabilizer":
        return cls(DestabilizerKind.EXTENSION, k, points)

    def to_json(self) -> dict:
        out = {"kind": self.kind.value}
        t = self.twist
        out["twist"] = t if isinstance(t, int) else format_rational(t)
        if self.kind in (DestabilizerKind.IDEAL, DestabilizerKind.EXTENSION):
            out["points"] = self.points
        out["ch"] = self.chern.to_json()
        return out

    def __str__(self) -> str:
        k = format_rational(self.twist)
        return {
            DestabilizerKind.IDEAL: f"I_W({k}), |W|={self.points}",
            DestabilizerKind.LINE: f"O({k})",
            DestabilizerKind.SHIFTED_LINE: f"O({k})[1]",
            DestabilizerKind.LINE_ON_LINE: f"O_l({k})",
            DestabilizerKind.EXTENSION: f"ext(length {self.points}, O({k})[1])",
        }[self.kind]


@dataclass(frozen=True)
class FactorList:
    case: str  # "generic" or "collinear"
    factors: tuple[Destabilizer, ...]

    def total(self) -> ChernCharacter:
        out = ChernCharacter(0, 0, Fraction(0))
        for f in self.factors:
            out = out + f.chern
        return out

    def to_json(self) -> dict:
        return {"case": self.case, "factors": [f.to_json() for f in self.factors]}


@dataclass(frozen=True)
class WallReport:
    wall: Wall
    primary_destabilizer: Destabilizer
    alternates: tuple[Destabilizer, ...]
    jh_factors: tuple[FactorList, ...]

    def to_json(self) -> dict:
        out = self.wall.to_json()
        out["destabilizer"] = self.primary_destabilizer.to_json()
        out["alternates"] = [d.to_json() for d in self.alternates]
        out["jh_factors"] = [fl.to_json() for fl in self.jh_factors]
        return out


def _primary_destabilizer(space: ModuliSpace) -> Destabilizer:
    b, eps = space.b, space.epsilon
    if eps <= 0:
        return Destabilizer.ideal(b, -eps)
    return Destabilizer.line(b)


def _alternate_destabilizers(space: ModuliSpace) -> tuple[Destabilizer, ...]:
    b, eps = space.b, space.epsilon
    if space.boundary_case:
        return (Destabilizer.line(b - 1),)
    if eps == 0:
        return (Destabilizer.line(b),)
    return ()


def jh_factors(space: ModuliSpace) -> tuple[FactorList, ...]:
    """Jordan-Hoelder factors of sheaves that become strictly semistable on the largest wall.

    The first list is the generic one for the primary destabilizer. In the
    boundary case eps == -mu/2 the line-bundle form follows, then the list for
    collinear points.
    """
    space.require_rank_two()
    mu, b, eps = space.mu, space.b, space.epsilon
    shifted = Destabilizer.shifted_line(b - mu)
    if eps < 0:
        lists = [FactorList("generic", (Destabilizer.ideal(b, -eps), shifted))]
    elif eps > 0:
        lists = [FactorList("generic", (Destabilizer.line(b), Destabilizer.extension(eps, b - mu)))]
    else:
        lists = [FactorList("generic", (Destabilizer.line(b), shifted))]
    if space.boundary_case:
        # Same wall written as a' = (b-1)*mu + mu/2.
        lists.append(
            FactorList(
                "generic",
                (Destabilizer.line(b - 1), Destabilizer.extension(mu // 2, b - 1 - mu)),
            )
        )
        lists.append(
            FactorList(
                "collinear",
                (Destabilizer.line(b - 1), shifted, Destabilizer.line_on_line(b - mu // 2)),
            )
        )
    return tuple(lists)


def largest_wall_radius_sq(space: ModuliSpace) -> Fraction:
    mu, eps = space.mu, space.epsilon
    if eps <= 0:
        return (Fraction(eps, mu) + Fraction(mu, 2)) ** 2
    return (Fraction(mu, 2) - Fraction(eps, mu)) ** 2


def largest_wall(space: ModuliSpace) -> WallReport:
    space.require_rank_two()
    c = onedim(space.mu, space.chi)
    primary = _primary_destabilizer(space)
    wall = potential_wall(c, primary.chern)
    if not isinstance(wall, Wall) or wall.radius_sq != largest_wall_radius_sq(space):
        raise InvariantViolation(f"largest wall of N({space.mu}, {space.chi}) disagrees with closed form")
    if wall.center != Fraction(space.chi, space.mu) - Fraction(3, 2):
        raise InvariantViolation("largest wall is not centered at chi/mu - 3/2")
    alternates = _alternate_destabilizers(space)
    for alt in alternates:
        if potential_wall(c, alt.chern) != wall:
            raise InvariantViolation(f"alternate {alt} gives a different wall")
    factors = jh_factors(space)
    for fl in factors:
        if fl.total() != c:
            raise InvariantViolation(f"factors {fl} do not add up to the sheaf class")
    return WallReport(wall, primary, alternates, factors)


def enumerate_rank_one_walls(
    space: ModuliSpace, min_radius_sq, max_points: int
) -> list[tuple[Wall, Destabilizer]]:
    """Potential walls of twisted ideal sheaves I_W(k), |W| <= max_points.

    Keeps k <= b and min_radius_sq <= radius^2 <= (largest wall radius)^2. These
    are potential walls only; nothing here decides whether a wall is actual.
    Sorted by radius^2 descending, then twist descending, then points ascending.
    """
    min_radius_sq = Fraction(min_radius_sq)
    if min_radius_sq <= 0:
        raise ValueError("min_radius_sq must be positive")
    if max_points < 0:
        raise ValueError("max_points must be nonnegative")
    space.require_rank_two()
    c = onedim(space.mu, space.chi)
    top = largest_wall_radius_sq(space)
    x = space.d / space.mu
    found = []
    k = space.b
    # (x - k)^2 grows without bound as k decreases past x.
    while (x - k) <= 0 or (x - k) ** 2 - 2 * max_points <= top:
        for n in range(max_points + 1):
            r2 = (x - k) ** 2 - 2 * n
            if r2 < min_radius_sq:
                break
            if r2 <= top:
                d = Destabilizer.ideal(k, n)
                wall = potential_wall(c, d.chern)
                assert isinstance(wall, Wall) and wall.radius_sq == r2
                found.append((wall, d))
        k -= 1
    found.sort(key=lambda wd: (-wd[0].radius_sq, -wd[1].twist, wd[1].points))
    return found


def is_largest_wall_entry(space: ModuliSpace, destabilizer: Destabilizer) -> bool:
    b, eps = space.b, space.epsilon
    n = -eps if eps <= 0 else 0
    return destabilizer.twist == b and destabilizer.points == n


# -- nef cone ------------------------------------------------------------------


def nef_class(space: ModuliSpace) -> tuple[tuple[Fraction, Fraction, Fraction], ChernCharacter]:
    """A generator of the line of classes Tor-orthogonal to both c and the destabilizer.

    Returns the class (up to scale) and the destabilizer class it was built from.
    """
    space.require_rank_two()
    c = onedim(space.mu, space.chi)
    e = _primary_destabilizer(space).chern
    return common_kernel(c, e), e


def nef_cone(space: ModuliSpace) -> Cone2:
    """Nef cone spanned by L0 and the Bayer-Macri class of the largest wall.

    Computed on the normalized space so its coordinates match effective_cone.
    """
    space.require_rank_two()
    space = space.normalized()
    a_sigma, _ = nef_class(space)
    c = onedim(space.mu, space.chi)
    dec = decompose_in_cperp(a_sigma, orthogonal_basis(c, space.mu, space.chi))
    ray = PicardClass(dec.alpha, dec.beta)
    effective = effective_cone(space)
    side = effective.ray_b.l1
    if ray.l1 * side < 0 or (ray.l1 == 0 and ray.l0 < 0):
        ray = -ray
    if curve_dot(curve_basis_pairing(space), ray) < 0:
        raise InvariantViolation(f"nef ray {ray} pairs negatively with the moving curve")
    return Cone2(L0, ray, ConeStatus.PROVEN)


# -- Bayer-Macri degree --------------------------------------------------------


@dataclass(frozen=True)
class QuadraticValue:
    """x + y*t where t > 0 and t^2 == t_sq."""

    x: Fraction
    y: Fraction
    t_sq: Fraction

    def is_rational(self) -> bool:
        return self.y == 0 or _rational_sqrt(self.t_sq) is not None

    def rational(self) -> Fraction:
        if self.y == 0:
            return self.x
        t = _rational_sqrt(self.t_sq)
        if t is None:
            raise ValueError(f"t = sqrt({self.t_sq}) is irrational")
        return self.x + self.y * t

    def sign(self) -> int:
        # Sign of x + y*sqrt(q) without leaving the rationals.
        x, y, q = self.x, self.y, self.t_sq
        sx = (x > 0) - (x < 0)
        sy = (y > 0) - (y < 0)
        if sy == 0 or sx == sy:
            return sx if sx else sy
        if sx == 0:
            return sy
        cmp = x * x - y * y * q
        return sx if cmp > 0 else (sy if cmp < 0 else 0)

    def __eq__(self, other):
        if isinstance(other, QuadraticValue):
            return (self.x, self.y, self.t_sq) == (other.x, other.y, other.t_sq) or (
                self.is_rational() and other.is_rational() and self.rational() == other.rational()
            )
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.rational() == other
        return NotImplemented

    def __hash__(self):
        return hash((self.x, self.y, self.t_sq))

    def __float__(self):
        return float(self.x) + float(self.y) * float(self.t_sq) ** 0.5


def _rational_sqrt(q: Fraction) -> Optional[Fraction]:
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _central_charge(x, p: StabilityPoint) -> tuple[Fraction, Fraction]:
    """Z_{s,t}(x) = re + i*t*im_over_t."""
    x0, x1, x2 = coords(x)
    s = p.s
    re = -x2 + s * x1 - (s * s - p.t_sq) / 2 * x0
    im_over_t = x1 - s * x0
    return re, im_over_t


def bm_curve_degree(space: ModuliSpace, w, p: StabilityPoint) -> QuadraticValue:
    """Im(-Z(w) / Z(v)) for v the class of N(mu, chi)."""
    v = onedim(space.mu, space.chi)
    rv, iv = _central_charge(v, p)
    rw, iw = _central_charge(w, p)
    norm = rv * rv + p.t_sq * iv * iv
    if norm == 0:
        raise ZeroCentralCharge(f"Z(v) vanishes at ({p.s}, t^2={p.t_sq})")
    # -(rw + i t iw)(rv - i t iv) / |Z(v)|^2 has imaginary part t (rw iv - iw rv) / |Z(v)|^2.
    return QuadraticValue(Fraction(0), (rw * iv - iw * rv) / norm, p.t_sq)

