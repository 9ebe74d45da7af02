"""Magnetic field of a uniformly charged monopole filament in the plane.

The filament is perpendicular to the plane, so B is planar and radial:
B(r) = lambda_m / (2 pi) * (r - c) / |r - c|^2, with 2D divergence
lambda_m * delta(r - c).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .nc_algebra import NCParams

SINGULARITY_EPSILON = 1e-9


class SingularPoint(ValueError):
    """Raised when the field is evaluated (too) close to the filament."""

    def __init__(self, message: str, point=None):
        super().__init__(message)
        self.point = point


@dataclass(frozen=True)
class FieldSample:
    B: np.ndarray
    gradB: np.ndarray  # gradB[j, l] = d_j B_l
    at: np.ndarray


@dataclass(frozen=True)
class FilamentField:
    lambda_m: float
    center: tuple[float, float] = (0.0, 0.0)
    singularity_epsilon: float = SINGULARITY_EPSILON

    def _offsets(self, pts: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        pts = np.asarray(pts, dtype=float)
        d = pts - np.asarray(self.center, dtype=float)
        r2 = np.einsum("...i,...i->...", d, d)
        bad = r2 <= self.singularity_epsilon ** 2
        if np.any(bad):
            where = pts.reshape(-1, 2)[np.flatnonzero(bad.ravel())[0]]
            raise SingularPoint(
                f"point ({where[0]:.6g}, {where[1]:.6g}) within "
                f"{self.singularity_epsilon:g} of the filament", where)
        return d, r2

    def B(self, pts) -> np.ndarray:
        """Field at one point (shape (2,)) or many (shape (N, 2))."""
        d, r2 = self._offsets(pts)
        return (self.lambda_m / (2 * np.pi)) * d / r2[..., None]

    def gradB(self, pts) -> np.ndarray:
        """d_j B_l = lambda_m/(2 pi) * (delta_jl r^2 - 2 x_j x_l) / r^4, indexed [..., j, l]."""
        d, r2 = self._offsets(pts)
        outer = d[..., :, None] * d[..., None, :]
        eye = np.eye(2) * r2[..., None, None]
        return (self.lambda_m / (2 * np.pi)) * (eye - 2 * outer) / (r2 ** 2)[..., None, None]

    def divergence(self, pts) -> np.ndarray:
        g = self.gradB(pts)
        return g[..., 0, 0] + g[..., 1, 1]

    def curl(self, pts) -> np.ndarray:
        g = self.gradB(pts)
        return g[..., 0, 1] - g[..., 1, 0]


def eval_field(field: FilamentField, at) -> FieldSample:
    at = np.asarray(at, dtype=float)
    return FieldSample(B=field.B(at), gradB=field.gradB(at), at=at)


def dual_tensor(B, E3: float = 0.0) -> np.ndarray:
    """Planar dual field tensor, rows/cols (0, 1, 2)::

        [[0,   -B1, -B2],
         [B1,   0,  -E3],
         [B2,  E3,   0 ]]
    """
    b1, b2 = np.asarray(B, dtype=float)
    return np.array([[0.0, -b1, -b2],
                     [b1, 0.0, -E3],
                     [b2, E3, 0.0]])


def shifted_dual_tensor(field: FilamentField, at, p, params: NCParams,
                        E3: float = 0.0) -> np.ndarray:
    """alpha F + (1/2 alpha) Theta^{rs} p_r d_s F, first order in theta.

    Only spatial r, s contribute (planar Theta). E3 is uniform, so its
    derivative vanishes.
    """
    sample = eval_field(field, at)
    p = np.asarray(p, dtype=float)
    alpha = float(params.alpha)
    theta = float(params.theta)
    F = dual_tensor(sample.B, E3)
    dF = [dual_tensor(sample.gradB[s], 0.0) for s in (0, 1)]
    # Theta^{rs} p_r d_s F = theta (p_1 d_2 F - p_2 d_1 F)
    correction = theta * (p[0] * dF[1] - p[1] * dF[0])
    return alpha * F + correction / (2 * alpha)
