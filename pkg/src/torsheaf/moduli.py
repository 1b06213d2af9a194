"""Invariants of the moduli space N(mu, chi) of semistable one-dimensional sheaves."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Union

from .errors import NotApplicable, NotNormalized
from .kclass import THREE_HALVES, ChernCharacter, delta as _delta, euler_characteristic, structure_sheaf_twist
from .picard import PicardClass


def balanced_residue(a: int, mu: int) -> tuple[int, int]:
    """(b, eps) with a == b*mu + eps and -mu/2 <= eps < mu/2."""
    h = mu // 2
    eps = (a + h) % mu - h
    return (a - eps) // mu, eps


def normalized_chi(mu: int, chi: int) -> int:
    r = chi % mu
    return mu - r if 2 * r > mu else r


@dataclass(frozen=True)
class ModuliSpace:
    mu: int
    chi: int
    delta: int = field(init=False)
    d: Fraction = field(init=False)
    a: int = field(init=False)
    b: int = field(init=False)
    epsilon: int = field(init=False)
    chi_normalized: int = field(init=False)

    def __post_init__(self):
        if self.mu <= 0:
            raise ValueError(f"mu must be positive, got {self.mu}")
        d = self.chi - THREE_HALVES * self.mu
        a = d + Fraction(self.mu * self.mu, 2)
        assert a.denominator == 1
        a = int(a)
        b, eps = balanced_residue(a, self.mu)
        for name, value in (
            ("delta", _delta(self.mu, self.chi)),
            ("d", d),
            ("a", a),
            ("b", b),
            ("epsilon", eps),
            ("chi_normalized", normalized_chi(self.mu, self.chi)),
        ):
            object.__setattr__(self, name, value)

    @property
    def is_normalized(self) -> bool:
        return 0 <= 2 * self.chi <= self.mu

    @property
    def boundary_case(self) -> bool:
        """eps == -mu/2, where two destabilizer forms coincide."""
        return 2 * self.epsilon == -self.mu

    def normalized(self) -> "ModuliSpace":
        return self if self.chi == self.chi_normalized else ModuliSpace(self.mu, self.chi_normalized)

    def require_normalized(self) -> None:
        if not self.is_normalized:
            raise NotNormalized(f"need 0 <= 2*chi <= mu, got N({self.mu}, {self.chi})")

    def require_rank_two(self) -> None:
        if self.mu < 3:
            raise NotApplicable(f"Picard rank 2 needs mu >= 3, got mu = {self.mu}")


def make_space(mu: int, chi: int) -> ModuliSpace:
    return ModuliSpace(mu, chi)


def dimension(space: ModuliSpace) -> int:
    return space.mu ** 2 + 1


# -- isomorphisms --------------------------------------------------------------


@dataclass(frozen=True)
class Twist:
    step: int  # +1 or -1

    def apply(self, mu: int, chi: int) -> int:
        return chi + self.step * mu

    def __str__(self):
        return f"Twist({self.step:+d})"


@dataclass(frozen=True)
class Dualize:
    def apply(self, mu: int, chi: int) -> int:
        return -chi

    def __str__(self):
        return "Dualize"


Move = Union[Twist, Dualize]


def normalize_chi(mu: int, chi: int) -> tuple[int, list[Move]]:
    """Reduce chi to 0 <= chi' <= mu/2 using twists and at most one dualization.

    Picks the shortest move list; on a tie, the one without dualization. Twists
    always come before the dualization.
    """
    if mu <= 0:
        raise ValueError(f"mu must be positive, got {mu}")
    target = normalized_chi(mu, chi)
    candidates = []
    # chi + k*mu == target, or chi + k*mu == -target followed by Dualize.
    for dualize, goal in ((False, target), (True, -target)):
        if (goal - chi) % mu == 0:
            k = (goal - chi) // mu
            cost = abs(k) + int(dualize)
            candidates.append((cost, dualize, k))
    cost, dualize, k = min(candidates)
    step = 1 if k > 0 else -1
    moves: list[Move] = [Twist(step) for _ in range(abs(k))]
    if dualize:
        moves.append(Dualize())
    return target, moves


def replay_moves(mu: int, chi: int, moves: list[Move]) -> int:
    for m in moves:
        chi = m.apply(mu, chi)
    return chi


class IsoReason(enum.Enum):
    DIMENSION_MISMATCH = "dimension_mismatch"
    SMALL_MU = "small_mu"
    CONGRUENT = "congruent"
    CONGRUENT_DUAL = "congruent_dual"
    EPSILON_INVARIANT = "epsilon_invariant"


@dataclass(frozen=True)
class IsoVerdict:
    isomorphic: bool
    reason: IsoReason
    message: str


def is_isomorphic(mu1: int, chi1: int, mu2: int, chi2: int) -> IsoVerdict:
    for mu in (mu1, mu2):
        if mu <= 0:
            raise ValueError(f"mu must be positive, got {mu}")
    if mu1 != mu2:
        d1, d2 = mu1 ** 2 + 1, mu2 ** 2 + 1
        return IsoVerdict(False, IsoReason.DIMENSION_MISMATCH, f"dimension {d1} ≠ {d2}")
    mu = mu1
    if mu == 1:
        return IsoVerdict(True, IsoReason.SMALL_MU, "every χ is congruent mod 1")
    if mu == 2:
        return IsoVerdict(True, IsoReason.SMALL_MU, "N(2, 0) ≅ N(2, 1) ≅ P⁵")
    if (chi1 - chi2) % mu == 0:
        return IsoVerdict(True, IsoReason.CONGRUENT, "χ ≡ χ′ mod μ")
    if (chi1 + chi2) % mu == 0:
        return IsoVerdict(True, IsoReason.CONGRUENT_DUAL, "χ ≡ −χ′ mod μ")
    e1 = abs(ModuliSpace(mu, chi1).epsilon)
    e2 = abs(ModuliSpace(mu, chi2).epsilon)
    return IsoVerdict(
        False, IsoReason.EPSILON_INVARIANT, f"exceptional fiber dimension {e1} ≠ {e2}"
    )


def exceptional_fiber_dimension(space: ModuliSpace) -> int:
    space.require_rank_two()
    return abs(space.epsilon)


def canonical_class(space: ModuliSpace) -> PicardClass:
    """K = -3 mu L0."""
    space.require_rank_two()
    return PicardClass(-3 * space.mu, 0)


# -- resolutions ---------------------------------------------------------------


@dataclass(frozen=True)
class ResolutionData:
    """Two-step complex  relations -> generators; entries are (twist, multiplicity)."""

    generators: tuple[tuple[int, int], ...]
    relations: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for t, m in self.generators + self.relations:
            if m < 0:
                raise ValueError(f"negative multiplicity {m} for O({t})")

    def chern_character(self):
        total = ChernCharacter(0, 0, Fraction(0))
        for t, m in self.generators:
            total = total + m * structure_sheaf_twist(t)
        for t, m in self.relations:
            total = total - m * structure_sheaf_twist(t)
        return total

    def euler_characteristic(self) -> Fraction:
        return euler_characteristic(self.chern_character())

    def to_json(self) -> dict:
        def enc(terms):
            return [{"twist": t, "mult": m} for t, m in terms]

        return {"generators": enc(self.generators), "relations": enc(self.relations)}

    def __str__(self):
        def fmt(terms):
            return " ⊕ ".join(f"{m}·O({t})" for t, m in terms)

        return f"{fmt(self.relations)} → {fmt(self.generators)}"


def generic_resolution(space: ModuliSpace) -> ResolutionData:
    """Minimal free resolution of a general sheaf in N(mu, chi)."""
    space.require_normalized()
    mu, chi = space.mu, space.chi
    return ResolutionData(((0, chi), (-1, mu - 2 * chi)), ((-2, mu - chi),))


def ideal_resolution(space: ModuliSpace) -> ResolutionData:
    """Minimal free resolution of I(mu) for a general I in the companion Hilbert scheme."""
    space.require_normalized()
    mu, chi = space.mu, space.chi
    return ResolutionData(((0, chi + 1), (-1, mu - 2 * chi)), ((-2, mu - chi),))


def companion_hilbert_points(space: ModuliSpace) -> int:
    space.require_normalized()
    return comb(space.mu + 1, 2) + space.mu - space.chi
