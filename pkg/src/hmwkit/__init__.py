"""Toolkit for the He-McKellar-Wilkens phase of spin-one neutral particles,
with noncommutative-space and noncommutative-phase-space corrections."""

__version__ = "0.1.0"

from .exact import ExactComplex, ExactMatrix, commutator
from .fields import FieldSample, FilamentField, SingularPoint, dual_tensor, eval_field, shifted_dual_tensor
from .kemmer import beta, kemmer_residual, spin_tensor, xi, xi3_spectrum
from .nc_algebra import CanonicalPolynomial, NCParams, bopp_shift, deformed_commutators
from .paths import LoopPath, circle, polygon, winding_number
from .phase import (ParticleState, PhaseBreakdown, delta_ncps, delta_ncps_terms, delta_ncs,
                    hmw_phase_flux, hmw_phase_line, nc_vector_potential, total_phase,
                    vector_potential_a, wrap_phase)
from .quadrature import QuadratureConfig, QuadResult, ToleranceNotMet, line_integral

__all__ = [
    "ExactComplex", "ExactMatrix", "commutator",
    "FieldSample", "FilamentField", "SingularPoint", "dual_tensor", "eval_field",
    "shifted_dual_tensor",
    "beta", "kemmer_residual", "spin_tensor", "xi", "xi3_spectrum",
    "CanonicalPolynomial", "NCParams", "bopp_shift", "deformed_commutators",
    "LoopPath", "circle", "polygon", "winding_number",
    "ParticleState", "PhaseBreakdown", "delta_ncps", "delta_ncps_terms", "delta_ncs",
    "hmw_phase_flux", "hmw_phase_line", "nc_vector_potential", "total_phase",
    "vector_potential_a", "wrap_phase",
    "QuadratureConfig", "QuadResult", "ToleranceNotMet", "line_integral",
]
