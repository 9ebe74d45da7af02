"""HMW phase of a spin-one dipole and its NC-space / NC-phase-space corrections.

Index conventions: planar eps^{12} = +1 and the phase integrand is the
Euclidean vector a_k = 2 mu_e eps^{lk} B_l, i.e. a = 2 mu_e (-B2, B1).
A counter-clockwise loop around the filament then gives
+2 mu_e s3 lambda_m per turn, matching the flux form.

The spin operator xi_3 only enters through its eigenvalue s3, and the
dipole is mu = 2 mu_e s3 z_hat, so (mu x B) = 2 mu_e s3 (-B2, B1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .fields import FilamentField
from .nc_algebra import NCParams
from .paths import LoopPath, winding_number
from .quadrature import DEFAULT_QUAD, QuadratureConfig, QuadResult, line_integral

KMode = Literal["constant", "tangential"]

_EPS2 = np.array([[0.0, 1.0], [-1.0, 0.0]])  # eps^{ij}, eps^{12} = +1


@dataclass(frozen=True)
class ParticleState:
    mu_e: float
    s3: int
    mass: float = 1.0
    k: tuple[float, float] = (0.0, 0.0)
    k_mode: KMode = "constant"

    def __post_init__(self):
        if self.s3 not in (-1, 0, 1):
            raise ValueError(f"s3 must be -1, 0 or +1, got {self.s3!r}")
        if not self.mass > 0:
            raise ValueError("mass must be positive")
        if self.k_mode not in ("constant", "tangential"):
            raise ValueError(f"unknown k_mode {self.k_mode!r}")

    @property
    def k_norm(self) -> float:
        return float(math.hypot(*self.k))

    def k_field(self, tangents: np.ndarray) -> np.ndarray:
        """Wave vector k_i = m v_i at each sample (constant or along the tangent)."""
        if self.k_mode == "constant":
            return np.broadcast_to(np.asarray(self.k, float), tangents.shape)
        speed = np.hypot(tangents[:, 0], tangents[:, 1])[:, None]
        return self.k_norm * tangents / speed


def mu_cross_B(B: np.ndarray, mu_e: float, s3: int) -> np.ndarray:
    """In-plane (mu x B) for mu = 2 mu_e s3 z_hat."""
    return 2.0 * mu_e * s3 * np.stack([-B[..., 1], B[..., 0]], axis=-1)


def vector_potential_a(field: FilamentField, at, mu_e: float) -> np.ndarray:
    """a_k = 2 mu_e eps^{lk} B_l = 2 mu_e (-B2, B1)."""
    B = field.B(at)
    return 2.0 * mu_e * np.stack([-B[..., 1], B[..., 0]], axis=-1)


def _correction_density(w: np.ndarray, gradB: np.ndarray, tangents: np.ndarray) -> np.ndarray:
    """eps^{ij} eps^{lk} w_i d_jB_l t_k for N samples."""
    return np.einsum("ij,lk,ni,njl,nk->n", _EPS2, _EPS2, w, gradB, tangents)


def nc_vector_potential(field: FilamentField, at, particle: ParticleState,
                        theta: float, tangent=None) -> np.ndarray:
    """a^_k = 2 mu_e eps^{lk} B_l + mu_e theta eps^{ij} eps^{lk} p_i d_jB_l.

    p = k - (mu x B); the O(theta) part of p is dropped inside the
    already first-order term. `tangent` is needed only in tangential-k mode.
    """
    at = np.atleast_2d(np.asarray(at, float))
    B = field.B(at)
    g = field.gradB(at)
    t = np.atleast_2d(np.asarray(tangent if tangent is not None else (1.0, 0.0), float))
    p = particle.k_field(np.broadcast_to(t, at.shape)) - mu_cross_B(B, particle.mu_e, particle.s3)
    corr = np.einsum("ij,lk,ni,njl->nk", _EPS2, _EPS2, p, g)
    a = vector_potential_a(field, at, particle.mu_e) + particle.mu_e * theta * corr
    return a[0] if a.shape[0] == 1 else a


# unit line integrals; every phase term is a scalar multiple of one of these

def _hmw_integrand(field: FilamentField):
    def f(pts, tans):
        B = field.B(pts)
        return -B[:, 1] * tans[:, 0] + B[:, 0] * tans[:, 1]
    return f


def _velocity_integrand(field: FilamentField, particle: ParticleState):
    def f(pts, tans):
        return _correction_density(particle.k_field(tans), field.gradB(pts), tans)
    return f


def _vortex_integrand(field: FilamentField):
    # (mu x B) with 2 mu_e s3 factored out
    def f(pts, tans):
        B = field.B(pts)
        w = np.stack([-B[:, 1], B[:, 0]], axis=-1)
        return _correction_density(w, field.gradB(pts), tans)
    return f


def _area_integrand(pts, tans):
    # eps^{ij} x_j dx_i = x2 dx1 - x1 dx2
    return pts[:, 1] * tans[:, 0] - pts[:, 0] * tans[:, 1]


def _integrate(path, f, quad) -> QuadResult:
    return line_integral(path, f, quad)


def _prepare(field: FilamentField, path: LoopPath) -> None:
    path.check_clearance(field.center, field.singularity_epsilon)


@dataclass(frozen=True)
class Term:
    value: float
    error: float
    evaluations: int = 0

    @staticmethod
    def scaled(coef: float, r: QuadResult) -> "Term":
        return Term(coef * r.value, abs(coef) * r.error, r.evaluations)

    def __add__(self, other: "Term") -> "Term":
        return Term(self.value + other.value, self.error + other.error,
                    self.evaluations + other.evaluations)


def hmw_phase_line_term(field, path, particle, quad=DEFAULT_QUAD) -> Term:
    _prepare(field, path)
    r = _integrate(path, _hmw_integrand(field), quad)
    return Term.scaled(2.0 * particle.mu_e * particle.s3, r)


def hmw_phase_line(field: FilamentField, path: LoopPath, particle: ParticleState,
                   quad: QuadratureConfig = DEFAULT_QUAD) -> float:
    """s3 * closed integral of a . dr, by adaptive quadrature."""
    return hmw_phase_line_term(field, path, particle, quad).value


def hmw_phase_flux(field: FilamentField, path: LoopPath, particle: ParticleState) -> float:
    """Closed form 2 mu_e s3 lambda_m times the winding number about the filament."""
    n = winding_number(path, field.center, field.singularity_epsilon)
    return 2.0 * particle.mu_e * particle.s3 * field.lambda_m * n


@dataclass(frozen=True)
class _CorrectionIntegrals:
    velocity: QuadResult  # eps eps closed integral of k_i d_jB_l dx_k
    vortex: QuadResult    # same with (-B2, B1) in place of k


def _correction_integrals(field, path, particle, quad) -> _CorrectionIntegrals:
    _prepare(field, path)
    if particle.k_norm == 0.0:
        vel = QuadResult(0.0, 0.0, 0)
    else:
        vel = _integrate(path, _velocity_integrand(field, particle), quad)
    if particle.s3 == 0 or particle.mu_e == 0:
        vort = QuadResult(0.0, 0.0, 0)
    else:
        vort = _integrate(path, _vortex_integrand(field), quad)
    return _CorrectionIntegrals(vel, vort)


def _ncs_terms(ints: _CorrectionIntegrals, particle: ParticleState, theta: float):
    pref = particle.mu_e * particle.s3 * theta
    velocity = Term.scaled(pref, ints.velocity)
    vortex = Term.scaled(-pref * 2.0 * particle.mu_e * particle.s3, ints.vortex)
    return velocity, vortex


def delta_ncs(field: FilamentField, path: LoopPath, particle: ParticleState,
              theta: float, quad: QuadratureConfig = DEFAULT_QUAD) -> float:
    """mu_e s3 theta eps^{ij} eps^{lk} closed integral of [k_i - (mu x B)_i] d_jB_l dx_k."""
    if theta == 0:
        return 0.0
    velocity, vortex = _ncs_terms(_correction_integrals(field, path, particle, quad),
                                  particle, float(theta))
    return velocity.value + vortex.value


@dataclass(frozen=True)
class NCPSTerms:
    area: Term
    velocity: Term
    vortex: Term

    @property
    def total(self) -> Term:
        return self.area + self.velocity + self.vortex


def _ncps_terms(ints: _CorrectionIntegrals, area: QuadResult, particle: ParticleState,
                params: NCParams) -> NCPSTerms:
    alpha = float(params.alpha)
    theta = float(params.theta)
    theta_bar = float(params.theta_bar)
    factor = 1.0 / alpha ** 2 - 1.0
    pref = factor * particle.mu_e * particle.s3 * theta
    # k' = (m / alpha) v = k / alpha, and the velocity integral is linear in k
    velocity = Term.scaled(pref / alpha, ints.velocity)
    vortex = Term.scaled(-pref * 2.0 * particle.mu_e * particle.s3, ints.vortex)
    return NCPSTerms(Term.scaled(theta_bar / (2.0 * alpha ** 2), area), velocity, vortex)


def delta_ncps_terms(field: FilamentField, path: LoopPath, particle: ParticleState,
                     params: NCParams, quad: QuadratureConfig = DEFAULT_QUAD) -> NCPSTerms:
    """Area, velocity and vortex contributions of the momentum-momentum correction."""
    if params.alpha == 1:
        zero = Term(0.0, 0.0)
        return NCPSTerms(zero, zero, zero)
    ints = _correction_integrals(field, path, particle, quad)
    area = _integrate(path, _area_integrand, quad)
    return _ncps_terms(ints, area, particle, params)


def delta_ncps(field: FilamentField, path: LoopPath, particle: ParticleState,
               params: NCParams, quad: QuadratureConfig = DEFAULT_QUAD) -> float:
    return delta_ncps_terms(field, path, particle, params, quad).total.value


@dataclass(frozen=True)
class PhaseBreakdown:
    phi_hmw: float
    delta_ncs: float
    delta_ncps: float
    total: float
    terms: dict = field(default_factory=dict)
    errors: dict = field(default_factory=dict)
    flux_phase: float = 0.0
    winding: int = 0
    evaluations: int = 0

    def as_dict(self) -> dict:
        return {
            "phi_hmw": self.phi_hmw,
            "delta_ncs": self.delta_ncs,
            "delta_ncps": self.delta_ncps,
            "total": self.total,
            "terms": dict(self.terms),
            "errors": dict(self.errors),
        }


def total_phase(field: FilamentField, path: LoopPath, particle: ParticleState,
                params: NCParams, quad: QuadratureConfig = DEFAULT_QUAD) -> PhaseBreakdown:
    """phi_hmw + delta_ncs + delta_ncps with per-term diagnostics."""
    _prepare(field, path)
    hmw = hmw_phase_line_term(field, path, particle, quad)
    theta = float(params.theta)
    need_corr = theta != 0 or params.alpha != 1
    ints = _correction_integrals(field, path, particle, quad) if need_corr else None

    zero = Term(0.0, 0.0)
    if theta != 0:
        ncs_vel, ncs_vort = _ncs_terms(ints, particle, theta)
    else:
        ncs_vel = ncs_vort = zero
    if params.alpha != 1:
        area = _integrate(path, _area_integrand, quad)
        ncps = _ncps_terms(ints, area, particle, params)
    else:
        ncps = NCPSTerms(zero, zero, zero)

    ncs = ncs_vel + ncs_vort
    ncps_total = ncps.total
    flux = hmw_phase_flux(field, path, particle)
    n = winding_number(path, field.center, field.singularity_epsilon)
    evaluations = hmw.evaluations
    if ints is not None:
        evaluations += ints.velocity.evaluations + ints.vortex.evaluations
    evaluations += ncps.area.evaluations
    return PhaseBreakdown(
        phi_hmw=hmw.value,
        delta_ncs=ncs.value,
        delta_ncps=ncps_total.value,
        total=hmw.value + ncs.value + ncps_total.value,
        terms={
            "ncs_velocity": ncs_vel.value,
            "ncs_vortex": ncs_vort.value,
            "ncps_area": ncps.area.value,
            "ncps_velocity": ncps.velocity.value,
            "ncps_vortex": ncps.vortex.value,
        },
        errors={
            "phi_hmw": hmw.error,
            "delta_ncs": ncs.error,
            "delta_ncps": ncps_total.error,
            "total": hmw.error + ncs.error + ncps_total.error,
        },
        flux_phase=flux,
        winding=n,
        evaluations=evaluations,
    )


def wrap_phase(phi: float) -> float:
    """Reduce a phase to (-pi, pi] for fringe comparisons."""
    r = math.remainder(phi, 2 * math.pi)
    return math.pi if r == -math.pi else r
