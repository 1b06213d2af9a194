"""Numerical K-theory of the projective plane.

A class is recorded by its Chern character ``(ch0, ch1, ch2)`` where ``ch1``
is measured in hyperplane units and ``ch2`` in point units. Everything is
exact; :class:`fractions.Fraction` carries the rationals.

The single bilinear form used throughout is the symmetric Tor pairing

    <x, y> = chi(x . y) = x0*y0 + 3/2*(x0*y1 + x1*y0) + (x0*y2 + x1*y1 + x2*y0)

i.e. the Euler characteristic of the product in K-theory.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Union

from .errors import NotApplicable, NotInSpan

HALF = Fraction(1, 2)
THREE_HALVES = Fraction(3, 2)


def format_rational(q) -> str:
    """Render ``q`` as ``"p/q"`` in lowest terms, or ``"p"`` when integral."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`format_rational`. Accepts a Unicode minus sign."""
    return Fraction(text.strip().replace("−", "-"))


@dataclass(frozen=True)
class ChernCharacter:
    ch0: int
    ch1: int
    ch2: Fraction

    def __post_init__(self):
        for name in ("ch0", "ch1"):
            value = getattr(self, name)
            if isinstance(value, Fraction):
                if value.denominator != 1:
                    raise ValueError(f"{name} must be an integer, got {value}")
                object.__setattr__(self, name, int(value))
            elif not isinstance(value, int):
                raise TypeError(f"{name} must be an integer, got {value!r}")
        ch2 = Fraction(self.ch2)
        if (2 * ch2).denominator != 1:
            raise ValueError(f"ch2 must be half-integral, got {ch2}")
        object.__setattr__(self, "ch2", ch2)

    def __iter__(self):
        return iter((Fraction(self.ch0), Fraction(self.ch1), self.ch2))

    def __add__(self, other: "ChernCharacter") -> "ChernCharacter":
        return ChernCharacter(self.ch0 + other.ch0, self.ch1 + other.ch1, self.ch2 + other.ch2)

    def __sub__(self, other: "ChernCharacter") -> "ChernCharacter":
        return ChernCharacter(self.ch0 - other.ch0, self.ch1 - other.ch1, self.ch2 - other.ch2)

    def __neg__(self) -> "ChernCharacter":
        return ChernCharacter(-self.ch0, -self.ch1, -self.ch2)

    def __mul__(self, k: int) -> "ChernCharacter":
        if not isinstance(k, int):
            return NotImplemented
        return ChernCharacter(k * self.ch0, k * self.ch1, k * self.ch2)

    __rmul__ = __mul__

    @property
    def rank(self) -> int:
        return self.ch0

    def to_json(self) -> dict:
        return {"ch0": self.ch0, "ch1": self.ch1, "ch2": format_rational(self.ch2)}

    @classmethod
    def from_json(cls, data: dict) -> "ChernCharacter":
        return cls(int(data["ch0"]), int(data["ch1"]), parse_rational(data["ch2"]))

    def __str__(self) -> str:
        return f"({self.ch0}, {self.ch1}, {format_rational(self.ch2)})"


# Anything with three rational coordinates: a ChernCharacter or a plain triple.
ClassLike = Union[ChernCharacter, Sequence]


def coords(x: ClassLike) -> tuple[Fraction, Fraction, Fraction]:
    a, b, c = x
    return Fraction(a), Fraction(b), Fraction(c)


def as_chern(x: ClassLike) -> ChernCharacter:
    if isinstance(x, ChernCharacter):
        return x
    a, b, c = coords(x)
    return ChernCharacter(a, b, c)


# -- standard classes --------------------------------------------------------


def structure_sheaf_twist(k: int) -> ChernCharacter:
    """ch O(k) = (1, k, k^2/2)."""
    return ChernCharacter(1, k, Fraction(k * k, 2))


def line_class(k: int = 0) -> ChernCharacter:
    """ch O_H(k) for a line H: (0, 1, k - 1/2)."""
    return ChernCharacter(0, 1, k - HALF)


def point_class() -> ChernCharacter:
    return ChernCharacter(0, 0, Fraction(1))


def ideal_twist(k: int, n: int) -> ChernCharacter:
    """ch I_W(k) for a zero-dimensional W of length n."""
    if n < 0:
        raise ValueError(f"number of points must be >= 0, got {n}")
    return ChernCharacter(1, k, Fraction(k * k, 2) - n)


def onedim(mu: int, chi: int) -> ChernCharacter:
    """Class of a one-dimensional sheaf with Hilbert polynomial mu*m + chi."""
    if mu <= 0:
        raise ValueError(f"mu must be positive, got {mu}")
    return ChernCharacter(0, mu, chi - THREE_HALVES * mu)


def standard_class(kind: str, *args: int) -> ChernCharacter:
    """Dispatch by name; ``kind`` is one of the constructor names above."""
    table = {
        "structure_sheaf_twist": structure_sheaf_twist,
        "line_class": line_class,
        "point_class": point_class,
        "ideal_twist": ideal_twist,
        "onedim": onedim,
    }
    try:
        fn = table[kind]
    except KeyError:
        raise ValueError(f"unknown class kind {kind!r}") from None
    return fn(*args)


# -- arithmetic --------------------------------------------------------------


def twist(x: ChernCharacter, k: int) -> ChernCharacter:
    """Tensor with O(k)."""
    return ChernCharacter(
        x.ch0,
        x.ch1 + k * x.ch0,
        x.ch2 + k * x.ch1 + Fraction(k * k, 2) * x.ch0,
    )


def euler_characteristic(x: ClassLike) -> Fraction:
    """Riemann-Roch on the plane: chi = ch2 + 3/2 ch1 + ch0."""
    x0, x1, x2 = coords(x)
    return x2 + THREE_HALVES * x1 + x0


def tor_pairing(x: ClassLike, y: ClassLike) -> Fraction:
    x0, x1, x2 = coords(x)
    y0, y1, y2 = coords(y)
    return x0 * y0 + THREE_HALVES * (x0 * y1 + x1 * y0) + (x0 * y2 + x1 * y1 + x2 * y0)


def gram_row(y: ClassLike) -> tuple[Fraction, Fraction, Fraction]:
    """Coefficients r with tor_pairing(x, y) == r . x for every x."""
    y0, y1, y2 = coords(y)
    return (y0 + THREE_HALVES * y1 + y2, THREE_HALVES * y0 + y1, y0)


def cross(u: Sequence[Fraction], v: Sequence[Fraction]) -> tuple[Fraction, Fraction, Fraction]:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def common_kernel(*classes: ClassLike) -> tuple[Fraction, Fraction, Fraction]:
    """A nonzero x with tor_pairing(x, y) == 0 for two independent y."""
    if len(classes) != 2:
        raise ValueError("need exactly two classes")
    k = cross(gram_row(classes[0]), gram_row(classes[1]))
    if not any(k):
        raise ValueError("pairing conditions are dependent; kernel is not a line")
    return k


def solve_in_span(basis: Sequence[ClassLike], target: ClassLike) -> list[Fraction]:
    """Exact coefficients c with sum(c_i * basis_i) == target.

    Gaussian elimination on the 3 x len(basis) system; raises NotInSpan when the
    system is inconsistent. Basis vectors must be independent.
    """
    cols = [coords(b) for b in basis]
    n = len(cols)
    rows = [[cols[j][i] for j in range(n)] + [coords(target)[i]] for i in range(3)]
    r = 0
    for c in range(n):
        p = next((i for i in range(r, 3) if rows[i][c] != 0), None)
        if p is None:
            raise ValueError("basis vectors are linearly dependent")
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(3):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    if any(rows[i][n] != 0 for i in range(r, 3)):
        raise NotInSpan(f"{tuple(coords(target))} is not in the span of the basis")
    return [rows[i][n] for i in range(n)]


def delta(mu: int, chi: int) -> int:
    """gcd(mu, chi), with gcd(mu, 0) == mu."""
    return gcd(mu, chi)


@dataclass(frozen=True)
class KBasisDecomposition:
    alpha: Fraction
    beta: Fraction


def orthogonal_basis(c: ChernCharacter, mu: int, chi: int) -> tuple[ChernCharacter, ChernCharacter]:
    """Basis (u0, u1) of the Tor-orthogonal complement of ``c = onedim(mu, chi)``.

    u0 = -[point] and u1 = (1/delta)(-mu [O] + chi [O_H]).
    """
    if mu < 3:
        raise NotApplicable(f"Picard rank is not 2 for mu = {mu}")
    if c != onedim(mu, chi):
        raise ValueError(f"{c} is not the class of N({mu}, {chi})")
    d = delta(mu, chi)
    u0 = ChernCharacter(0, 0, Fraction(-1))
    u1 = ChernCharacter(-mu // d, chi // d, Fraction(-chi, 2 * d))
    return u0, u1


def decompose_in_cperp(x: ClassLike, basis: Iterable[ClassLike]) -> KBasisDecomposition:
    alpha, beta = solve_in_span(list(basis), x)
    return KBasisDecomposition(alpha, beta)
