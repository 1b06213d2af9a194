"""Effective cones, interpolation, determinant divisors and moving curves.

Sign convention. A divisor class is written ``l0*L0 + l1*L1`` with
``L0 = lambda(u0)`` and ``L1 = lambda(u1)`` for the basis ``(u0, u1)`` of
:func:`torsheaf.kclass.orthogonal_basis`. The divisor of a bundle ``E`` is the
decomposition of ``ch(E)`` itself in that basis, and a curve whose family has
Riemann-Roch class ``w`` meets ``lambda(x)`` in degree ``-<x, w>``. This is the
orientation in which the pencil curve meets ``L0`` in degree +1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import NotOrthogonal, ZeroRank
from .kclass import (
    HALF,
    ChernCharacter,
    coords,
    decompose_in_cperp,
    euler_characteristic,
    format_rational,
    onedim,
    orthogonal_basis,
    structure_sheaf_twist,
    tor_pairing,
    twist,
)
from .moduli import ModuliSpace, ResolutionData
from .picard import L0, Cone2, ConeStatus, PicardClass


class InterpolationReason(enum.Enum):
    ABOVE_GOLDEN_RATIO = "above_golden_ratio"
    FIBONACCI_RATIO = "fibonacci_ratio"
    FAILS = "fails"


@dataclass(frozen=True)
class InterpolationVerdict:
    alpha: Fraction
    passes: bool
    reason: InterpolationReason

    def to_json(self) -> dict:
        return {"alpha": format_rational(self.alpha), "passes": self.passes, "reason": self.reason.value}


def fibonacci_pairs(limit: int) -> Iterator[tuple[int, int]]:
    """Consecutive pairs (F_j, F_{j+1}) starting at (0, 1), while F_{j+1} <= limit."""
    f, g = 0, 1
    while g <= limit:
        yield f, g
        f, g = g, f + g


def is_fibonacci_ratio(alpha: Fraction) -> bool:
    alpha = Fraction(alpha)
    return any(Fraction(f, g) == alpha for f, g in fibonacci_pairs(alpha.denominator))


def interpolation_criterion(alpha) -> InterpolationVerdict:
    """Decide the golden-ratio/Fibonacci criterion for a given alpha in [0, 1].

    alpha > 1/phi is tested as alpha^2 + alpha - 1 > 0, which is exact for alpha >= 0.
    """
    alpha = Fraction(alpha)
    if not 0 <= alpha <= 1:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    if alpha * alpha + alpha - 1 > 0:
        return InterpolationVerdict(alpha, True, InterpolationReason.ABOVE_GOLDEN_RATIO)
    if is_fibonacci_ratio(alpha):
        return InterpolationVerdict(alpha, True, InterpolationReason.FIBONACCI_RATIO)
    return InterpolationVerdict(alpha, False, InterpolationReason.FAILS)


def interpolation_check(space: ModuliSpace) -> InterpolationVerdict:
    space.require_normalized()
    return interpolation_criterion(1 - Fraction(space.chi, space.mu))


def interpolation_bundle_class(space: ModuliSpace, k: int = 1) -> ChernCharacter:
    """ch(E) for E(mu) = coker( k(mu-chi) O(mu-2) -> k(2mu-chi) O(mu-1) )."""
    space.require_normalized()
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    mu, chi = space.mu, space.chi
    res = ResolutionData(((mu - 1, k * (2 * mu - chi)),), ((mu - 2, k * (mu - chi)),))
    return twist(res.chern_character(), -mu)


def determinant_divisor_class(E, space: ModuliSpace) -> PicardClass:
    """Class of the divisor of sheaves not cohomologically orthogonal to E."""
    c = onedim(space.mu, space.chi)
    if tor_pairing(E, c) != 0:
        raise NotOrthogonal(f"{tuple(coords(E))} has slope != {-Fraction(space.chi, space.mu)}")
    dec = decompose_in_cperp(E, orthogonal_basis(c, space.mu, space.chi))
    return PicardClass(dec.alpha, dec.beta)


def effective_boundary_bundle(space: ModuliSpace) -> ChernCharacter:
    """The bundle whose orthogonality divisor spans the non-L0 effective edge.

    For chi > 0 this is the interpolation bundle. For chi == 0 it is O itself:
    its theta divisor is effective and is the edge met trivially by the chi == 0
    moving curve, while the interpolation bundle's divisor lies strictly inside.
    """
    space = space.normalized()
    if space.chi == 0:
        return structure_sheaf_twist(0)
    return interpolation_bundle_class(space, 1)


def effective_cone(space: ModuliSpace) -> Cone2:
    space.require_rank_two()
    space = space.normalized()
    ray = determinant_divisor_class(effective_boundary_bundle(space), space)
    status = ConeStatus.PROVEN if interpolation_check(space).passes else ConeStatus.UNKNOWN
    return Cone2(L0, ray, status)


# -- moving curves -----------------------------------------------------------


@dataclass(frozen=True)
class MovingCurve:
    """Pencil of degree-mu curves with a line bundle sum(a_i E_i) + b H on its total space.

    Only the multiset of exceptional coefficients matters: ``ones`` of them
    equal 1, ``minus_ones`` equal -1, the rest 0.
    """

    ones: int
    minus_ones: int
    b_coeff: int
    total_exceptional: int

    def __post_init__(self):
        if self.ones < 0 or self.minus_ones < 0:
            raise ValueError("coefficient counts must be nonnegative")
        if self.ones + self.minus_ones > self.total_exceptional:
            raise ValueError("more nonzero coefficients than exceptional divisors")

    @property
    def sum_a_minus_a_squared(self) -> int:
        return -2 * self.minus_ones


def moving_curve(space: ModuliSpace) -> MovingCurve:
    space.require_normalized()
    mu, chi = space.mu, space.chi
    if chi > 0:
        return MovingCurve(chi + mu * (mu - 3) // 2, 0, 0, mu * mu)
    return MovingCurve((mu - 1) * (mu - 2) // 2, 1, 0, mu * mu)


def curve_divisor_pairing(curve: MovingCurve, chi_E, rank_E: int, ch1_E: int) -> Fraction:
    """C.D for the divisor D of a bundle E, evaluated as the closed formula

        C.(-D) = chi(E) + rk(E) (1/2 sum(a_i - a_i^2) + 1/2 b(b+3)) + b ch1(E)/rk(E)

    The last term is kept exactly in this form; every curve built here has b == 0.
    """
    if rank_E == 0:
        raise ZeroRank("the closed formula divides by the rank")
    b = curve.b_coeff
    minus_d = (
        Fraction(chi_E)
        + rank_E * (HALF * curve.sum_a_minus_a_squared + HALF * b * (b + 3))
        + Fraction(b * ch1_E, rank_E)
    )
    return -minus_d


def curve_class_degree(curve: MovingCurve, x) -> Fraction:
    """Degree of lambda(x) on the curve, for any class x (rank 0 allowed).

    Riemann-Roch on the blown-up plane gives the pushforward degree
    chi(x) + x0 (1/2 sum(a_i - a_i^2) + 1/2 b(b+3)) + b x1.
    """
    x0, x1, _ = coords(x)
    b = curve.b_coeff
    raw = euler_characteristic(x) + x0 * (HALF * curve.sum_a_minus_a_squared + HALF * b * (b + 3)) + b * x1
    return -raw


def curve_basis_pairing(space: ModuliSpace) -> tuple[Fraction, Fraction]:
    """(C.L0, C.L1) for the moving curve of the normalized space."""
    space.require_rank_two()
    space = space.normalized()
    curve = moving_curve(space)
    u0, u1 = orthogonal_basis(onedim(space.mu, space.chi), space.mu, space.chi)
    return curve_class_degree(curve, u0), curve_class_degree(curve, u1)


def curve_dot(pairing: tuple[Fraction, Fraction], D: PicardClass) -> Fraction:
    return pairing[0] * D.l0 + pairing[1] * D.l1

