"""Scenario config: JSON with field / path / particle / nc / quadrature blocks.

Example::

    {
      "field": {"lambda_m": 1.0, "center": [0, 0]},
      "path": {"kind": "circle", "center": [0, 0], "radius": 1.0,
               "orientation": "ccw", "turns": 1},
      "particle": {"mu_e": 1.0, "s3": 1, "mass": 1.0, "k": [0.5, 0.0]},
      "nc": {"theta": 0.01, "alpha": 0.95},
      "quadrature": {"abs_tol": 1e-12}
    }

A polygon path uses {"kind": "polygon", "vertices": [[x, y], ...]}.
The particle may give "speed" and "k_mode" instead of "k"; then
|k| = mass * speed, along "direction" in constant mode.
"""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Annotated, Literal, Optional, Union

from pydantic import (BaseModel, ConfigDict, Field, ValidationError, field_validator,
                      model_validator)

from .fields import FilamentField
from .nc_algebra import InvalidParams, NCParams
from .paths import LoopPath, circle, polygon
from .phase import ParticleState
from .quadrature import QuadratureConfig

Point = tuple[float, float]


class ConfigError(ValueError):
    """Invalid scenario; the message starts with the offending key path."""


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class FieldSpec(_Strict):
    lambda_m: float = Field(allow_inf_nan=False)
    center: Point = (0.0, 0.0)


class CirclePath(_Strict):
    kind: Literal["circle"]
    center: Point = (0.0, 0.0)
    radius: float = Field(gt=0, allow_inf_nan=False)
    orientation: Literal["ccw", "cw"] = "ccw"
    turns: int = Field(default=1, ge=1)


class PolygonPath(_Strict):
    kind: Literal["polygon"]
    vertices: list[Point] = Field(min_length=3)
    orientation: Optional[Literal["ccw", "cw"]] = None
    turns: int = Field(default=1, ge=1)


PathSpec = Annotated[Union[CirclePath, PolygonPath], Field(discriminator="kind")]


class ParticleSpec(_Strict):
    mu_e: float = Field(allow_inf_nan=False)
    s3: Literal[-1, 0, 1]
    mass: float = Field(default=1.0, gt=0, allow_inf_nan=False)
    k: Optional[Point] = None
    speed: Optional[float] = Field(default=None, ge=0, allow_inf_nan=False)
    k_mode: Literal["constant", "tangential"] = "constant"
    direction: Optional[Point] = None

    @model_validator(mode="after")
    def _k_or_speed(self):
        if self.k is not None and self.speed is not None:
            raise ValueError("give either k or speed, not both")
        if self.direction is not None and math.hypot(*self.direction) == 0:
            raise ValueError("direction must be nonzero")
        return self

    def wave_vector(self) -> Point:
        if self.k is not None:
            return self.k
        if self.speed is None:
            return (0.0, 0.0)
        kn = self.mass * self.speed
        d = self.direction or (1.0, 0.0)
        n = math.hypot(*d)
        return (kn * d[0] / n, kn * d[1] / n)


class NCSpec(_Strict):
    theta: float = Field(default=0.0, allow_inf_nan=False)
    alpha: Optional[float] = Field(default=None, allow_inf_nan=False)
    theta_bar: Optional[float] = Field(default=None, allow_inf_nan=False)

    @field_validator("alpha")
    @classmethod
    def _nonzero(cls, v):
        if v is not None and v == 0:
            raise ValueError("alpha must be nonzero")
        return v

    @model_validator(mode="after")
    def _one_of(self):
        if self.alpha is not None and self.theta_bar is not None:
            raise ValueError("give alpha or theta_bar, not both")
        return self

    def params(self) -> NCParams:
        if self.theta_bar is not None:
            return NCParams.from_theta_bar(self.theta, self.theta_bar)
        return NCParams(self.theta, 1.0 if self.alpha is None else self.alpha)


class QuadSpec(_Strict):
    order: int = Field(default=16, ge=2, le=128)
    abs_tol: float = Field(default=1e-12, ge=0)
    rel_tol: float = Field(default=1e-10, ge=0)
    max_evaluations: int = Field(default=1_000_000, ge=1)


class ScenarioConfig(_Strict):
    field: FieldSpec
    path: PathSpec
    particle: ParticleSpec
    nc: NCSpec = NCSpec()
    quadrature: QuadSpec = QuadSpec()

    def build(self) -> "Scenario":
        """Convert to domain objects; domain errors come back as ConfigError."""
        try:
            fld = FilamentField(self.field.lambda_m, tuple(self.field.center))
        except ValueError as exc:
            raise ConfigError(f"field: {exc}") from exc
        try:
            if isinstance(self.path, CirclePath):
                loop = circle(self.path.center, self.path.radius, self.path.orientation,
                              self.path.turns)
            else:
                loop = polygon(self.path.vertices, self.path.orientation, self.path.turns)
        except ValueError as exc:
            raise ConfigError(f"path: {exc}") from exc
        try:
            particle = ParticleState(self.particle.mu_e, self.particle.s3, self.particle.mass,
                                     self.particle.wave_vector(), self.particle.k_mode)
        except ValueError as exc:
            raise ConfigError(f"particle: {exc}") from exc
        try:
            params = self.nc.params()
        except InvalidParams as exc:
            raise ConfigError(f"nc: {exc}") from exc
        try:
            quad = QuadratureConfig(**self.quadrature.model_dump())
        except ValueError as exc:
            raise ConfigError(f"quadrature: {exc}") from exc
        return Scenario(fld, loop, particle, params, quad)

    def echo(self) -> dict:
        """Normalized inputs; feeding this back reproduces the same scenario."""
        return self.model_dump(mode="json", exclude_none=True)


class Scenario:
    def __init__(self, field, path: LoopPath, particle, params, quad):
        self.field, self.path, self.particle, self.params, self.quad = (
            field, path, particle, params, quad)


def _format_validation(exc: ValidationError) -> str:
    lines = []
    for err in exc.errors():
        loc = ".".join(str(p) for p in err["loc"]) or "<root>"
        lines.append(f"{loc}: {err['msg']}")
    return "; ".join(lines)


def parse_config(data: dict) -> ScenarioConfig:
    try:
        return ScenarioConfig.model_validate(data)
    except ValidationError as exc:
        raise ConfigError(_format_validation(exc)) from None


def load_config(path: str | Path) -> ScenarioConfig:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise ConfigError("<root>: config must be a JSON object")
    return parse_config(data)
