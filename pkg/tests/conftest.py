import math

import numpy as np
import pytest

from isoperim import geometry as geo


def make_cube(lo=0.0, hi=1.0):
    return geo.convex_hull(
        [(x, y, z) for x in (lo, hi) for y in (lo, hi) for z in (lo, hi)])


def make_octahedron(a=1.0, b=1.0, c=1.0):
    return geo.convex_hull(
        [(a, 0, 0), (-a, 0, 0), (0, b, 0), (0, -b, 0), (0, 0, c), (0, 0, -c)])


def make_regular_tetrahedron():
    return geo.convex_hull([(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)])


def thm2_bipyramid():
    """Double pyramid over the regular triangle of inradius sqrt(2) with unit
    apices: S = 18 sqrt2, V = 4 sqrt3, ratio 243 sqrt2."""
    R = 2.0 * math.sqrt(2.0)
    base = [(R * math.cos(t), R * math.sin(t), 0.0)
            for t in (0.0, 2.0 * math.pi / 3.0, 4.0 * math.pi / 3.0)]
    return geo.convex_hull(base + [(0, 0, 1), (0, 0, -1)])


def random_polytope(rng, n_points, radius=6.5):
    """Hull of n_points random points in the ball of the given radius;
    retries until nondegenerate."""
    while True:
        pts = rng.normal(size=(n_points, 3))
        pts /= np.linalg.norm(pts, axis=1, keepdims=True)
        pts *= radius * rng.uniform(0.3, 1.0, size=(n_points, 1)) ** (1 / 3)
        try:
            return geo.convex_hull([tuple(p) for p in pts])
        except Exception:
            continue


def random_rotation(rng):
    q = rng.normal(size=4)
    q /= np.linalg.norm(q)
    w, x, y, z = q
    return np.array([
        [1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)],
        [2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)],
        [2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)],
    ])


def transform(P, R=None, t=(0.0, 0.0, 0.0), scale=1.0):
    pts = np.array([v.as_tuple() for v in P.vertices]) * scale
    if R is not None:
        pts = pts @ R.T
    pts = pts + np.asarray(t)
    return geo.convex_hull([tuple(p) for p in pts])


def random_octahedral_type(rng, spread=0.35):
    """Random hexatope whose triangulated boundary has all degrees 4."""
    from isoperim.geometry import triangulate_boundary, vertex_degrees
    base = np.array([[1, 0, 0], [-1, 0, 0], [0, 1, 0],
                     [0, -1, 0], [0, 0, 1], [0, 0, -1]], dtype=float)
    while True:
        pts = base * rng.uniform(0.6, 2.0, size=(6, 1)) + rng.normal(
            scale=spread, size=(6, 3))
        try:
            P = geo.convex_hull([tuple(p) for p in pts])
        except Exception:
            continue
        if P.n_vertices != 6:
            continue
        if all(d == 4 for d in vertex_degrees(triangulate_boundary(P))):
            return P


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
