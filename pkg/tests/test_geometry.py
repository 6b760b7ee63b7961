import numpy as np
import pytest

from surfmono.algebra import random_polynomial, restrict_to_line
from surfmono.geometry import (
    GeometryError,
    ProjectivePoint,
    fiber_line,
    frame_for_center,
    line_through,
    point,
    project,
)


def test_line_through_examples():
    ln = line_through(point(0, 0, 0, 1), point(1, 0, 0, 0))
    assert ln.contains(point(2, 0, 0, 5))
    assert not ln.contains(point(0, 1, 0, 0))
    ln = line_through(point(0, 0, 0, 1), point(1, -1, 0, 0))
    assert ln.contains(point(3, -3, 0, 1))
    with pytest.raises(GeometryError):
        line_through(point(1, 2, 3, 4), point(2, 4, 6, 8))


def test_frames():
    F = frame_for_center(point(0, 0, 0, 1))
    np.testing.assert_allclose(F.matrix, np.eye(4), atol=1e-15)
    F = frame_for_center(point(1, 0, 0, 0))
    assert ProjectivePoint(F.to_frame([1, 0, 0, 0])).same_as(point(0, 0, 0, 1))
    rng = np.random.default_rng(3)
    for _ in range(20):
        L = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        F = frame_for_center(L)
        y = F.to_frame(L)
        e4 = y / y[3]
        assert np.linalg.norm(e4 - [0, 0, 0, 1]) < 1e-12
        np.testing.assert_allclose(F.matrix @ F.matrix.conj().T, np.eye(4), atol=1e-12)
        x = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        assert ProjectivePoint(F.from_frame(F.to_frame(x))).same_as(ProjectivePoint(x), 1e-10)


def test_project():
    F = frame_for_center(point(0, 0, 0, 1))
    assert project(F, point(1, 2, 3, 4)).same_as(point(1, 2, 3))
    with pytest.raises(GeometryError):
        project(F, point(0, 0, 0, 1))


def test_fiber_line_examples():
    F = frame_for_center(point(0, 0, 0, 1))
    ln = fiber_line(F, point(1, 0, 0))
    assert ln.contains(point(1, 0, 0, 0)) and ln.contains(point(0, 0, 0, 1))
    ln = fiber_line(F, point(1, -1, 0))
    assert ln.contains(point(2, -2, 0, 7))


def test_fiber_section_property():
    rng = np.random.default_rng(11)
    L = rng.standard_normal(4)
    F = frame_for_center(L)
    for _ in range(100):
        y = rng.standard_normal(3) + 1j * rng.standard_normal(3)
        ln = fiber_line(F, y)
        assert ln.contains(L)
        for t in (0.3, -2.0 + 1j):
            assert project(F, ln.point_at(t)).same_as(ProjectivePoint(y), 1e-9)


def test_degree_invariance_on_random_frames():
    rng = np.random.default_rng(5)
    for d in (2, 3, 4):
        f = random_polynomial(4, d, rng)
        F = frame_for_center(rng.standard_normal(4))
        g = F.pushforward(f)
        y = rng.standard_normal(3)
        q = restrict_to_line(g, np.concatenate([y, [0]]), [0, 0, 0, 1])
        assert q.degree == d
        ln = fiber_line(F, y)
        assert restrict_to_line(f, ln.base, ln.direction).degree == d


def test_point_json_roundtrip():
    p = point(1, 2j, -3, 0.5)
    assert ProjectivePoint.from_json(p.to_json()).same_as(p)
    with pytest.raises(GeometryError):
        point(0, 0, 0, 0)
