"""Closed oriented planar loops made of parametric segments on t in [0, 1]."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .fields import SINGULARITY_EPSILON, SingularPoint

CLOSURE_TOL = 1e-12


class Segment:
    """Parametric piece r(t), t in [0, 1]. Subclasses vectorize over t."""

    def point(self, t) -> np.ndarray:
        raise NotImplementedError

    def tangent(self, t) -> np.ndarray:
        """dr/dt."""
        raise NotImplementedError

    def min_distance(self, about) -> float:
        """Lower bound on the distance from `about` to the segment."""
        t = np.linspace(0.0, 1.0, 4097)
        pts = self.point(t)
        d = np.hypot(pts[:, 0] - about[0], pts[:, 1] - about[1])
        speed = np.hypot(*self.tangent(t).T).max()
        return float(max(d.min() - speed / 4096 / 2, 0.0))

    def start(self) -> np.ndarray:
        return self.point(np.array([0.0]))[0]

    def end(self) -> np.ndarray:
        return self.point(np.array([1.0]))[0]

    def sub(self, t0: float, t1: float) -> "Segment":
        return Reparametrized(self, lambda s: t0 + (t1 - t0) * s, lambda s: (t1 - t0) + 0 * s)


@dataclass(frozen=True)
class LineSegment(Segment):
    p0: tuple[float, float]
    p1: tuple[float, float]

    def point(self, t):
        t = np.asarray(t, dtype=float)[..., None]
        a, b = np.asarray(self.p0, float), np.asarray(self.p1, float)
        return a + t * (b - a)

    def tangent(self, t):
        t = np.asarray(t, dtype=float)
        d = np.asarray(self.p1, float) - np.asarray(self.p0, float)
        return np.broadcast_to(d, t.shape + (2,)).copy()

    def sub(self, t0: float, t1: float) -> "LineSegment":
        a, b = self.point(np.array([t0, t1]))
        return LineSegment(tuple(a), tuple(b))

    def min_distance(self, about) -> float:
        a, b, c = (np.asarray(v, float) for v in (self.p0, self.p1, about))
        d = b - a
        L2 = float(d @ d)
        s = 0.0 if L2 == 0 else min(max(float((c - a) @ d) / L2, 0.0), 1.0)
        return float(np.hypot(*(a + s * d - c)))


@dataclass(frozen=True)
class ArcSegment(Segment):
    """Circular arc at angle phi0 + t*(phi1 - phi0); phi1 < phi0 runs clockwise."""

    center: tuple[float, float]
    radius: float
    phi0: float
    phi1: float

    def point(self, t):
        t = np.asarray(t, dtype=float)
        phi = self.phi0 + t * (self.phi1 - self.phi0)
        c = np.asarray(self.center, float)
        return c + self.radius * np.stack([np.cos(phi), np.sin(phi)], axis=-1)

    def tangent(self, t):
        t = np.asarray(t, dtype=float)
        phi = self.phi0 + t * (self.phi1 - self.phi0)
        w = self.radius * (self.phi1 - self.phi0)
        return w * np.stack([-np.sin(phi), np.cos(phi)], axis=-1)

    def sub(self, t0: float, t1: float) -> "ArcSegment":
        span = self.phi1 - self.phi0
        return ArcSegment(self.center, self.radius, self.phi0 + t0 * span, self.phi0 + t1 * span)

    def min_distance(self, about) -> float:
        c = np.asarray(self.center, float)
        rel = np.asarray(about, float) - c
        dist_c = float(np.hypot(*rel))
        lo, hi = sorted((self.phi0, self.phi1))
        if dist_c > 0:
            ang = math.atan2(rel[1], rel[0])
            k = math.ceil((lo - ang) / (2 * math.pi))
            if ang + 2 * math.pi * k <= hi:
                return abs(dist_c - self.radius)
        ends = [self.start(), self.end()]
        return float(min(np.hypot(*(e - np.asarray(about, float))) for e in ends))


class Reparametrized(Segment):
    """Segment traversed as r(w(s)); tangent picks up the chain-rule factor w'(s)."""

    def __init__(self, base: Segment, warp: Callable, dwarp: Callable):
        self.base, self.warp, self.dwarp = base, warp, dwarp

    def point(self, t):
        return self.base.point(self.warp(np.asarray(t, dtype=float)))

    def tangent(self, t):
        t = np.asarray(t, dtype=float)
        return self.base.tangent(self.warp(t)) * np.asarray(self.dwarp(t))[..., None]

    def min_distance(self, about) -> float:
        return self.base.min_distance(about) if self._covers_base() else super().min_distance(about)

    def _covers_base(self) -> bool:
        w = self.warp(np.array([0.0, 1.0]))
        return bool(np.allclose(sorted(w), [0.0, 1.0]))


class ParametricSegment(Segment):
    """Arbitrary smooth curve given by vectorized callables (internal use)."""

    def __init__(self, point: Callable, tangent: Callable):
        self._point, self._tangent = point, tangent

    def point(self, t):
        return np.asarray(self._point(np.asarray(t, dtype=float)), dtype=float)

    def tangent(self, t):
        return np.asarray(self._tangent(np.asarray(t, dtype=float)), dtype=float)


class LoopPath:
    """Ordered segments forming a closed oriented loop."""

    def __init__(self, segments: Sequence[Segment], closed: bool = True):
        if not segments:
            raise ValueError("a path needs at least one segment")
        self.segments = tuple(segments)
        self.closed = closed
        for k, seg in enumerate(self.segments):
            nxt = self.segments[(k + 1) % len(self.segments)]
            if k == len(self.segments) - 1 and not closed:
                break
            gap = float(np.hypot(*(seg.end() - nxt.start())))
            scale = max(1.0, float(np.abs(seg.end()).max()))
            if gap > CLOSURE_TOL * scale:
                raise ValueError(f"segment {k} ends {gap:.3g} away from the start of the next")

    def reversed(self) -> "LoopPath":
        segs = [Reparametrized(s, lambda t: 1.0 - t, lambda t: -1.0 + 0 * t)
                for s in reversed(self.segments)]
        return LoopPath(segs, self.closed)

    def split(self, pieces: int) -> "LoopPath":
        """Same loop with every segment cut into `pieces` equal-parameter parts."""
        edges = np.linspace(0.0, 1.0, pieces + 1)
        return LoopPath([s.sub(a, b) for s in self.segments for a, b in zip(edges[:-1], edges[1:])],
                        self.closed)

    def reparametrized(self, warp: Callable, dwarp: Callable) -> "LoopPath":
        """Apply a monotone map [0,1] -> [0,1] to every segment."""
        return LoopPath([Reparametrized(s, warp, dwarp) for s in self.segments], self.closed)

    def min_distance(self, about) -> float:
        return min(s.min_distance(about) for s in self.segments)

    def check_clearance(self, about, epsilon: float = SINGULARITY_EPSILON) -> None:
        d = self.min_distance(about)
        if d <= epsilon:
            raise SingularPoint(
                f"path passes within {d:.3g} of the singular point "
                f"({about[0]:.6g}, {about[1]:.6g})", np.asarray(about, float))

    def __len__(self) -> int:
        return len(self.segments)


def circle(center=(0.0, 0.0), radius: float = 1.0, orientation: str = "ccw",
           turns: int = 1) -> LoopPath:
    """Circle traversed `turns` times; one arc segment per turn."""
    if radius <= 0:
        raise ValueError("radius must be positive")
    if turns < 1:
        raise ValueError("turns must be >= 1")
    sign = _orientation_sign(orientation)
    segs = [ArcSegment(tuple(center), float(radius), 0.0, sign * 2 * math.pi) for _ in range(turns)]
    return LoopPath(segs)


def polygon(vertices, orientation: str | None = None, turns: int = 1) -> LoopPath:
    """Closed polygon; with `orientation` given, vertex order is flipped if needed."""
    v = [tuple(map(float, p)) for p in vertices]
    if len(v) >= 2 and v[0] == v[-1]:
        v = v[:-1]
    if len(v) < 3:
        raise ValueError("a polygon needs at least 3 distinct vertices")
    if turns < 1:
        raise ValueError("turns must be >= 1")
    if orientation is not None:
        area = signed_area(v)
        if area == 0:
            raise ValueError("degenerate polygon (zero signed area)")
        if (area > 0) != (_orientation_sign(orientation) > 0):
            v = v[::-1]
    edges = [LineSegment(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]
    return LoopPath(edges * turns)


def signed_area(vertices) -> float:
    """Shoelace formula; positive for counter-clockwise vertex order."""
    v = np.asarray(vertices, dtype=float)
    x, y = v[:, 0], v[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y))


def _orientation_sign(orientation: str) -> int:
    o = orientation.lower()
    if o in ("ccw", "counterclockwise", "counter-clockwise", "+"):
        return 1
    if o in ("cw", "clockwise", "-"):
        return -1
    raise ValueError(f"unknown orientation {orientation!r}")


def _segment_angle(seg: Segment, c: np.ndarray, epsilon: float, depth: int = 0,
                   t0: float = 0.0, t1: float = 1.0) -> float:
    """Angle swept about c along seg restricted to [t0, t1], by safe subdivision.

    A piece shorter than its distance to c stays inside a disc that excludes
    c, so the wrapped endpoint angle difference is the true swept angle.
    """
    ts = np.linspace(t0, t1, 9)
    pts = seg.point(ts) - c
    dist = np.hypot(pts[:, 0], pts[:, 1])
    if dist.min() <= epsilon:
        raise SingularPoint("path passes through the winding centre", c)
    length = 1.1 * float(np.hypot(*np.diff(pts, axis=0).T).sum())
    if length < 0.5 * dist.min() or depth > 40:
        a, b = pts[0], pts[-1]
        return math.atan2(a[0] * b[1] - a[1] * b[0], a[0] * b[0] + a[1] * b[1])
    mid = 0.5 * (t0 + t1)
    return (_segment_angle(seg, c, epsilon, depth + 1, t0, mid)
            + _segment_angle(seg, c, epsilon, depth + 1, mid, t1))


def winding_number(path: LoopPath, about=(0.0, 0.0),
                   epsilon: float = SINGULARITY_EPSILON) -> int:
    """Signed number of turns of a closed path about a point (CCW positive)."""
    if not path.closed:
        raise ValueError("winding number needs a closed path")
    c = np.asarray(about, dtype=float)
    path.check_clearance(c, epsilon)
    total = 0.0
    for seg in path.segments:
        if isinstance(seg, LineSegment):
            a = np.asarray(seg.p0, float) - c
            b = np.asarray(seg.p1, float) - c
            total += math.atan2(a[0] * b[1] - a[1] * b[0], a[0] * b[0] + a[1] * b[1])
        else:
            total += _segment_angle(seg, c, epsilon)
    return int(round(total / (2 * math.pi)))
