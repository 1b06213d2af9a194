"""Independent reference computations used only by the tests.

Nothing here imports the package's geometry code; each oracle recomputes a
quantity from first principles with its own arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import sympy


def ch_line_bundle(k):
    return (Fraction(1), Fraction(k), Fraction(k * k, 2))


def alternating_sum(generators, relations):
    """Chern character of coker(relations -> generators) by direct summation."""
    tot = [Fraction(0)] * 3
    for sign, terms in ((1, generators), (-1, relations)):
        for t, m in terms:
            for i, v in enumerate(ch_line_bundle(t)):
                tot[i] += sign * m * v
    return tuple(tot)


def twist_down(ch, k):
    """ch * e^{kH} by power series."""
    r, c1, c2 = ch
    return (r, c1 + k * r, c2 + k * c1 + Fraction(k * k, 2) * r)


def surface_family_degree(mu, a, b, x):
    """Degree on the pencil of the determinant line of x, via Riemann-Roch on the blowup.

    The pencil's total space is P^2 blown up in mu^2 points; ``a`` lists the
    coefficient of every exceptional curve (length mu^2), ``b`` the hyperplane
    coefficient of the line bundle L = bH + sum a_i E_i. The determinant of the
    pushforward along the pencil has degree chi(S, L . x) - chi(fiber, L . x);
    the line bundle on the moduli side is its dual, hence the sign.
    """
    assert len(a) == mu * mu
    x0, x1, x2 = (Fraction(v) for v in x)
    n = len(a)
    # Intersection form on Pic(S): H^2 = 1, E_i^2 = -1, others 0.
    form = sympy.diag(1, *([-1] * n))
    D = sympy.Matrix([b] + list(a))
    Hv = sympy.Matrix([1] + [0] * n)
    anti_K = sympy.Matrix([3] + [-1] * n)
    fiber = sympy.Matrix([mu] + [-1] * n)

    def dot(u, v):
        return Fraction(str((u.T * form * v)[0]))

    # chi(S, L (x) p^*x) = int (x0 + x1 H + x2 pt) e^D td(S), chi(O_S) = 1.
    chi_S = (
        x2
        + x1 * (dot(Hv, D) + dot(Hv, anti_K) / 2)
        + x0 * (1 + dot(D, D) / 2 + dot(D, anti_K) / 2)
    )
    one_minus_g = -(dot(fiber, fiber) - dot(fiber, anti_K)) / 2
    chi_fiber = x0 * (dot(D, fiber) + one_minus_g) + x1 * dot(Hv, fiber)
    return -(chi_S - chi_fiber)


def pencil_coefficients(mu, chi):
    """Exceptional coefficients of the moving-curve family for normalized (mu, chi)."""
    if chi > 0:
        ones = chi + mu * (mu - 3) // 2
        return [1] * ones + [0] * (mu * mu - ones)
    ones = (mu - 1) * (mu - 2) // 2
    return [1] * ones + [-1] + [0] * (mu * mu - ones - 1)


def euler_pairing(x, y):
    """chi(x . y) on P^2 via ch(x)ch(y)td(P^2), td = 1 + 3/2 H + pt."""
    x0, x1, x2 = x
    y0, y1, y2 = y
    p0, p1, p2 = x0 * y0, x0 * y1 + x1 * y0, x0 * y2 + x1 * y1 + x2 * y0
    return p2 + Fraction(3, 2) * p1 + p0


def perp_coordinates(mu, chi, x):
    """Solve x = alpha*u0 + beta*u1 with sympy; u0, u1 rebuilt from scratch."""
    dl = gcd(mu, chi)
    u0 = sympy.Matrix([0, 0, -1])
    u1 = sympy.Matrix([sympy.Rational(-mu, dl), sympy.Rational(chi, dl), sympy.Rational(-chi, 2 * dl)])
    A = sympy.Matrix.hstack(u0, u1)
    sol, params = A.gauss_jordan_solve(sympy.Matrix([sympy.Rational(str(v)) for v in x]))
    assert not params
    return tuple(Fraction(str(v)) for v in sol)


def double_perp(c, e):
    """Nullspace of the 2x3 Gram system <., c> = <., e> = 0, via sympy."""
    rows = []
    for y in (c, e):
        basis = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
        rows.append([sympy.Rational(str(euler_pairing(b, y))) for b in basis])
    ns = sympy.Matrix(rows).nullspace()
    assert len(ns) == 1
    return tuple(Fraction(str(v)) for v in ns[0])


def primitive(v):
    den = 1
    for q in v:
        den = den * q.denominator // gcd(den, q.denominator)
    ints = [int(q * den) for q in v]
    g = 0
    for i in ints:
        g = gcd(g, i)
    return tuple(i // g for i in ints)


class GaussRational:
    """Minimal exact complex numbers over Q for central-charge arithmetic."""

    def __init__(self, re, im=0):
        self.re, self.im = Fraction(re), Fraction(im)

    def __add__(self, o):
        return GaussRational(self.re + o.re, self.im + o.im)

    def __sub__(self, o):
        return GaussRational(self.re - o.re, self.im - o.im)

    def __mul__(self, o):
        return GaussRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __truediv__(self, o):
        n = o.re * o.re + o.im * o.im
        return self * GaussRational(o.re / n, -o.im / n)


def central_charge(x, s, t):
    """Z(x) = -(ch2 - w ch1 + w^2/2 ch0) with w = s + i t, t rational."""
    w = GaussRational(s, t)
    x0, x1, x2 = (GaussRational(v) for v in x)
    half = GaussRational(Fraction(1, 2))
    return -(x2 - w * x1 + half * w * w * x0)


def bm_degree_rational_t(v, w, s, t):
    return (-central_charge(w, s, t) / central_charge(v, s, t)).im


def fibonacci_upto(n):
    fs = [0, 1]
    while fs[-1] <= n:
        fs.append(fs[-1] + fs[-2])
    return fs


def iso_orbit(mu, chi):
    """Orbit of chi mod mu under chi -> chi + mu and chi -> -chi (breadth-first)."""
    seen = {chi % mu}
    todo = [chi % mu]
    while todo:
        r = todo.pop()
        for nxt in ((r + mu) % mu, (-r) % mu):
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return frozenset(seen)
