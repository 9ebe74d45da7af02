"""Planar noncommutative parameters and the Bopp-shift realization.

Deformed coordinates and momenta are written as linear forms in the
canonical generators x1, x2, p1, p2; commutators of linear forms are
central and follow from [x_a, p_b] = i delta_ab.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational, Real
from typing import NamedTuple

GENERATORS = ("x1", "x2", "p1", "p2")
FLOAT_TOL = 1e-12


class InvalidParams(ValueError):
    pass


def _eps2(i: int, j: int) -> int:
    """Planar Levi-Civita symbol, eps(1, 2) = +1."""
    return {(1, 2): 1, (2, 1): -1}.get((i, j), 0)


def _div(a, b):
    if isinstance(a, Rational) and isinstance(b, Rational):
        return Fraction(a) / Fraction(b)
    return float(a) / float(b)


@dataclass(frozen=True)
class NCParams:
    """NC parameters (theta, alpha) with theta_bar derived from them.

    theta_bar = 4 alpha^2 (1 - alpha^2) / theta keeps [x^_a, p^_b] = i delta_ab.
    Rational inputs keep everything exact.
    """

    theta: Real
    alpha: Real = 1
    theta_bar: Real = field(init=False)

    def __post_init__(self):
        theta, alpha = self.theta, self.alpha
        if not math.isfinite(float(theta)) or not math.isfinite(float(alpha)):
            raise InvalidParams("theta and alpha must be finite")
        if alpha == 0:
            raise InvalidParams("alpha must be nonzero")
        if theta == 0:
            if alpha != 1:
                raise InvalidParams("theta = 0 requires alpha = 1 (theta_bar undefined)")
            tb = Fraction(0) if isinstance(alpha, Rational) else 0.0
        else:
            tb = _div(4 * alpha * alpha * (1 - alpha * alpha), theta)
        object.__setattr__(self, "theta_bar", tb)

    @classmethod
    def from_theta_bar(cls, theta: Real, theta_bar: Real) -> "NCParams":
        """Solve the constraint for alpha in (0, 1].

        alpha^2 = (1 + sqrt(1 - theta*theta_bar)) / 2, the root continuous
        with alpha = 1 at theta_bar = 0. Needs 0 <= theta*theta_bar <= 1.
        """
        prod = theta * theta_bar
        if theta == 0:
            if theta_bar != 0:
                raise InvalidParams("theta = 0 forces theta_bar = 0")
            return cls(theta, 1)
        if prod < 0 or prod > 1:
            raise InvalidParams(
                f"theta*theta_bar = {float(prod):g} outside [0, 1]; no alpha in (0, 1]")
        alpha = math.sqrt((1 + math.sqrt(1 - float(prod))) / 2)
        if prod == 0:
            alpha = 1
        params = cls(theta, alpha)
        # keep the caller's theta_bar rather than the float-recomputed one
        object.__setattr__(params, "theta_bar", theta_bar)
        return params

    def Theta(self, i: int, j: int):
        """Spatial Theta^{ij} = theta eps^{ij}; time components vanish."""
        return self.theta * _eps2(i, j)

    def Theta_bar(self, i: int, j: int):
        return self.theta_bar * _eps2(i, j)


@dataclass(frozen=True)
class CanonicalPolynomial:
    """Linear form sum_g c_g g over canonical generators plus a central term."""

    coeffs: tuple = (0, 0, 0, 0)
    central: Real = 0

    @classmethod
    def generator(cls, name: str) -> "CanonicalPolynomial":
        c = [0, 0, 0, 0]
        c[GENERATORS.index(name)] = 1
        return cls(tuple(c))

    def __add__(self, other: "CanonicalPolynomial") -> "CanonicalPolynomial":
        return CanonicalPolynomial(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
                                   self.central + other.central)

    def __sub__(self, other: "CanonicalPolynomial") -> "CanonicalPolynomial":
        return self + other.scale(-1)

    def scale(self, s) -> "CanonicalPolynomial":
        return CanonicalPolynomial(tuple(s * c for c in self.coeffs), s * self.central)

    __rmul__ = scale

    def coefficient(self, name: str):
        return self.coeffs[GENERATORS.index(name)]


def _generator_commutator(g: str, h: str) -> int:
    """[g, h] = i * (returned integer) for canonical generators."""
    if g[0] == h[0]:
        return 0
    if g[1] != h[1]:
        return 0
    return 1 if g[0] == "x" else -1


def commutator(a: CanonicalPolynomial, b: CanonicalPolynomial):
    """Coefficient c with [a, b] = i c. Central parts drop out."""
    total = 0
    for g, ca in zip(GENERATORS, a.coeffs):
        if not ca:
            continue
        for h, cb in zip(GENERATORS, b.coeffs):
            if cb:
                total = total + ca * cb * _generator_commutator(g, h)
    return total


class BoppShift(NamedTuple):
    x_hat: tuple[CanonicalPolynomial, CanonicalPolynomial]
    p_hat: tuple[CanonicalPolynomial, CanonicalPolynomial]


def bopp_shift(params: NCParams) -> BoppShift:
    """x^_a = alpha x_a - Theta_ab p_b / (2 alpha);  p^_a = alpha p_a + Theta_bar_ab x_b / (2 alpha)."""
    alpha = params.alpha
    x = [CanonicalPolynomial.generator(n) for n in ("x1", "x2")]
    p = [CanonicalPolynomial.generator(n) for n in ("p1", "p2")]
    x_hat, p_hat = [], []
    for a in (1, 2):
        xa = x[a - 1].scale(alpha)
        pa = p[a - 1].scale(alpha)
        for b in (1, 2):
            if params.Theta(a, b):
                xa = xa - p[b - 1].scale(_div(params.Theta(a, b), 2 * alpha))
            if params.Theta_bar(a, b):
                pa = pa + x[b - 1].scale(_div(params.Theta_bar(a, b), 2 * alpha))
        x_hat.append(xa)
        p_hat.append(pa)
    return BoppShift(tuple(x_hat), tuple(p_hat))


class DeformedCommutators(NamedTuple):
    theta_eff: Real
    theta_bar_eff: Real
    delta_eff: Real


def deformed_commutators(params: NCParams) -> DeformedCommutators:
    """Central coefficients of [x^1, x^2], [p^1, p^2] and [x^1, p^1]."""
    shift = bopp_shift(params)
    (x1, x2), (p1, p2) = shift
    return DeformedCommutators(commutator(x1, x2), commutator(p1, p2), commutator(x1, p1))


def delta_is_one(params: NCParams) -> bool:
    """Exact check for rational params, tolerance FLOAT_TOL otherwise."""
    d = deformed_commutators(params).delta_eff
    if isinstance(d, Rational):
        return d == 1
    return abs(float(d) - 1.0) <= FLOAT_TOL
