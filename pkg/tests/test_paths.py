import math

import numpy as np
import pytest

from hmwkit import SingularPoint, circle, polygon, winding_number
from hmwkit.paths import LoopPath, ParametricSegment, signed_area

from oracles import brute_angle_winding, shoelace


def ellipse(center, a, b, rot=0.0, turns=1):
    cx, cy = center
    c, s = math.cos(rot), math.sin(rot)
    w = 2 * math.pi * turns

    def point(t):
        x, y = a * np.cos(w * t), b * np.sin(w * t)
        return np.stack([cx + c * x - s * y, cy + s * x + c * y], axis=-1)

    def tangent(t):
        dx, dy = -a * w * np.sin(w * t), b * w * np.cos(w * t)
        return np.stack([c * dx - s * dy, s * dx + c * dy], axis=-1)

    return LoopPath([ParametricSegment(point, tangent)])


def test_basic_windings():
    assert winding_number(circle(), (0, 0)) == 1
    assert winding_number(circle((3, 0), 1), (0, 0)) == 0
    assert winding_number(circle(turns=2), (0, 0)) == 2
    assert winding_number(circle(orientation="cw"), (0, 0)) == -1


def test_polygon_winding_and_orientation():
    sq = [(-1, -1), (1, -1), (1, 1), (-1, 1)]
    assert winding_number(polygon(sq), (0, 0)) == 1
    assert winding_number(polygon(sq, "cw"), (0, 0)) == -1
    assert winding_number(polygon(sq[::-1], "ccw", turns=2), (0, 0)) == 2
    assert winding_number(polygon(sq), (5, 5)) == 0


def test_singular_winding():
    with pytest.raises(SingularPoint):
        winding_number(circle(), (1.0, 0.0))
    with pytest.raises(SingularPoint):
        winding_number(polygon([(-1, 0), (1, 0), (0, 1)]), (0, 0))


def test_winding_against_brute_force(rng):
    for _ in range(30):
        c = rng.uniform(-2, 2, 2)
        r = rng.uniform(0.3, 3)
        turns = int(rng.integers(1, 3))
        orient = rng.choice(["ccw", "cw"])
        about = rng.uniform(-3, 3, 2)
        if abs(np.hypot(*(about - c)) - r) < 1e-3:
            continue
        path = circle(tuple(c), r, orient, turns)
        assert winding_number(path, about) == brute_angle_winding(path, about)


def test_winding_parametric_curves(rng):
    for _ in range(10):
        a, b = rng.uniform(0.5, 2, 2)
        path = ellipse((0.1, -0.2), a, b, rng.uniform(0, math.pi), turns=2)
        assert winding_number(path, (0.1, -0.2)) == 2
        assert winding_number(path, (10.0, 0.0)) == 0


def test_winding_invariant_under_split_and_reparam():
    warp = lambda t: t ** 2
    dwarp = lambda t: 2 * t
    for path, about, n in [(circle((0.5, 0), 1.0, turns=2), (0.2, 0.1), 2),
                           (polygon([(-1, -1), (2, -1), (0, 3)], "cw"), (0.1, 0.2), -1),
                           (ellipse((0, 0), 2, 1), (1.5, 0.0), 1)]:
        assert winding_number(path, about) == n
        assert winding_number(path.split(5), about) == n
        assert winding_number(path.reparametrized(warp, dwarp), about) == n
        assert winding_number(path.reversed(), about) == -n


def test_closure_enforced():
    from hmwkit.paths import LineSegment
    with pytest.raises(ValueError):
        LoopPath([LineSegment((0, 0), (1, 0)), LineSegment((1, 0), (0, 1))])


def test_signed_area_matches_shoelace():
    v = [(0, 0), (3, 0), (2, 2), (0, 1)]
    assert signed_area(v) == pytest.approx(shoelace(v))
    assert signed_area(v) > 0


def test_min_distance():
    assert circle((0, 0), 2.0).min_distance((0.5, 0)) == pytest.approx(1.5)
    assert polygon([(-1, -1), (1, -1), (1, 1), (-1, 1)]).min_distance((0, 0)) == pytest.approx(1.0)
