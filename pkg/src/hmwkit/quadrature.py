"""Adaptive composite Gauss-Legendre quadrature for closed line integrals.

Each panel is integrated with one n-point rule over the whole panel and
again over its two halves, and the finer value is kept. The panel error
estimate scales |coarse - fine| the way QUADPACK does, against the
panel's mean absolute deviation, so noise-dominated panels report noise. The panel with the largest estimate is
bisected until the summed estimate meets abs_tol + rel_tol * |value|.
The final sum runs over panels in (segment, position) order so the
result does not depend on the refinement history.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .paths import LoopPath, Segment

Integrand = Callable[[np.ndarray, np.ndarray], np.ndarray]

_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class QuadratureConfig:
    order: int = 16
    abs_tol: float = 1e-12
    rel_tol: float = 1e-10
    max_evaluations: int = 1_000_000

    def __post_init__(self):
        if self.order < 2:
            raise ValueError("order must be >= 2")
        if self.abs_tol < 0 or self.rel_tol < 0:
            raise ValueError("tolerances must be non-negative")
        if self.abs_tol == 0 and self.rel_tol == 0:
            raise ValueError("at least one tolerance must be positive")
        if self.max_evaluations < 1:
            raise ValueError("max_evaluations must be positive")

    def tolerance(self, value: float) -> float:
        return self.abs_tol + self.rel_tol * abs(value)


DEFAULT_QUAD = QuadratureConfig()


@dataclass(frozen=True)
class QuadResult:
    value: float
    error: float
    evaluations: int
    converged: bool = True
    panels: int = 0


class ToleranceNotMet(RuntimeError):
    """Evaluation budget ran out; `.result` holds the best value and its estimate."""

    def __init__(self, result: QuadResult):
        super().__init__(
            f"quadrature did not converge: value {result.value:.12g}, "
            f"error estimate {result.error:.3g} after {result.evaluations} evaluations")
        self.result = result


def _nodes(order: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = np.polynomial.legendre.leggauss(order)
    return x, w


class _Rule:
    def __init__(self, order: int):
        self.x, self.w = _nodes(order)
        self.order = order

    def apply(self, seg: Segment, f: Integrand, a: float, b: float):
        """Integral of f over [a, b], integral of |f|, integral of |f - mean f|."""
        half = 0.5 * (b - a)
        t = 0.5 * (a + b) + half * self.x
        vals = np.asarray(f(seg.point(t), seg.tangent(t)), dtype=float)
        if not np.all(np.isfinite(vals)):
            raise FloatingPointError("integrand is not finite on the path")
        hw = half * self.w
        value = math.fsum(hw * vals)
        mean = value / (b - a) if b > a else 0.0
        return value, float(np.abs(hw * vals).sum()), float((hw * np.abs(vals - mean)).sum())


def _panel(rule: _Rule, seg: Segment, f: Integrand, a: float, b: float,
           coarse: float | None = None):
    evals = 0
    if coarse is None:
        coarse = rule.apply(seg, f, a, b)[0]
        evals += rule.order
    m = 0.5 * (a + b)
    left, abs_l, asc_l = rule.apply(seg, f, a, m)
    right, abs_r, asc_r = rule.apply(seg, f, m, b)
    evals += 2 * rule.order
    fine = left + right
    resabs, resasc = abs_l + abs_r, asc_l + asc_r
    err = abs(fine - coarse)
    if resasc > 0 and err > 0:
        err = resasc * min(1.0, (200.0 * err / resasc) ** 1.5)
    err = max(err, 50.0 * _EPS * resabs)
    return fine, err, (left, right), evals


def line_integral(path: LoopPath, integrand: Integrand,
                  quad: QuadratureConfig = DEFAULT_QUAD, *, strict: bool = True) -> QuadResult:
    """Integrate integrand(points, dr/dt) dt over every segment of `path`.

    `integrand` is vectorized: points and tangents have shape (N, 2) and the
    return value shape (N,). With strict=True an unmet tolerance raises
    ToleranceNotMet; otherwise the result comes back with converged=False.
    """
    if not path.closed:
        raise ValueError("line_integral expects a closed path")
    rule = _Rule(quad.order)
    heap: list = []
    done: dict = {}
    evaluations = 0
    counter = 0
    for si, seg in enumerate(path.segments):
        fine, err, halves, n = _panel(rule, seg, integrand, 0.0, 1.0)
        evaluations += n
        done[(si, 0.0, 1.0)] = (fine, err, halves)
        heapq.heappush(heap, (-err, counter, si, 0.0, 1.0))
        counter += 1

    def totals():
        keys = sorted(done)
        value = math.fsum(done[k][0] for k in keys)
        error = math.fsum(done[k][1] for k in keys)
        return value, error

    value, error = totals()
    while error > quad.tolerance(value):
        if evaluations + 4 * rule.order > quad.max_evaluations:
            result = QuadResult(value, error, evaluations, False, len(done))
            if strict:
                raise ToleranceNotMet(result)
            return result
        _, _, si, a, b = heapq.heappop(heap)
        _, _, (left, right) = done.pop((si, a, b))
        seg = path.segments[si]
        m = 0.5 * (a + b)
        for (lo, hi), coarse in (((a, m), left), ((m, b), right)):
            fine, err, halves, n = _panel(rule, seg, integrand, lo, hi, coarse)
            evaluations += n
            done[(si, lo, hi)] = (fine, err, halves)
            heapq.heappush(heap, (-err, counter, si, lo, hi))
            counter += 1
        value, error = totals()
    return QuadResult(value, error, evaluations, True, len(done))

