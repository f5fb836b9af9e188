import math

import numpy as np
import pytest

from isoperim import geometry as geo
from isoperim.errors import DegenerateInput

from conftest import (
    make_cube,
    make_octahedron,
    make_regular_tetrahedron,
    random_polytope,
    random_rotation,
    thm2_bipyramid,
    transform,
)

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)


class TestConvexHull:
    def test_cube_corners(self):
        P = make_cube(-1, 1)
        assert P.n_vertices == 8
        assert P.n_facets == 6

    def test_cross_polytope(self):
        P = make_octahedron()
        assert P.n_vertices == 6
        assert P.n_facets == 8

    def test_interior_point_eliminated(self):
        pts = [(x, y, z) for x in (-1, 1) for y in (-1, 1) for z in (-1, 1)]
        P = geo.convex_hull(pts + [(0, 0, 0)])
        assert P.n_vertices == 8
        assert all(v.as_tuple() != (0.0, 0.0, 0.0) for v in P.vertices)

    def test_edge_and_face_points_eliminated(self):
        pts = [(x, y, z) for x in (-1, 1) for y in (-1, 1) for z in (-1, 1)]
        P = geo.convex_hull(pts + [(1.0, 0.0, 0.0), (1.0, 1.0, 0.0)])
        assert P.n_vertices == 8

    def test_degenerate_inputs_rejected(self):
        with pytest.raises(DegenerateInput):
            geo.convex_hull([(0, 0, 0), (1, 0, 0), (2, 0, 0), (3, 0, 0)])
        with pytest.raises(DegenerateInput):
            geo.convex_hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)])
        with pytest.raises(DegenerateInput):
            geo.convex_hull([(0, 0, 0), (1, 0, 0), (0, 1, 0)])

    def test_hull_idempotent(self, rng):
        for k in (5, 8, 12):
            P = random_polytope(rng, k)
            Q = geo.convex_hull([v.as_tuple() for v in P.vertices])
            assert {v.as_tuple() for v in Q.vertices} == {
                v.as_tuple() for v in P.vertices}

    def test_facets_closed_and_outward(self, rng):
        for k in (5, 7, 10):
            P = random_polytope(rng, k)
            g = np.mean([v.as_tuple() for v in P.vertices], axis=0)
            for f in P.facets:
                assert f.normal.dot(geo.Vec3(*g)) < f.offset
            # every edge of the facet complex is shared by exactly two facets
            count = {}
            for f in P.facets:
                idx = f.indices
                for i in range(len(idx)):
                    e = tuple(sorted((idx[i], idx[(i + 1) % len(idx)])))
                    count[e] = count.get(e, 0) + 1
            assert set(count.values()) == {2}


class TestMeasures:
    def test_unit_cube(self):
        P = make_cube()
        assert geo.volume(P) == pytest.approx(1.0, rel=1e-12)
        assert geo.surface_area(P) == pytest.approx(6.0, rel=1e-12)

    def test_octahedron_volume_and_area(self):
        P = make_octahedron()
        # analytic cross-polytope values, cross-checked by a tetrahedra fan
        assert geo.volume(P) == pytest.approx(4.0 / 3.0, rel=1e-12)
        assert geo.surface_area(P) == pytest.approx(4.0 * SQRT3, rel=1e-12)
        fan = 0.0
        vs = [np.array(v.as_tuple()) for v in P.vertices]
        T = geo.triangulate_boundary(P)
        for (a, b, c) in T.triangles:
            fan += abs(np.linalg.det(np.stack([vs[a], vs[b], vs[c]]))) / 6.0
        assert fan == pytest.approx(geo.volume(P), rel=1e-12)

    def test_regular_tetrahedron(self):
        P = make_regular_tetrahedron()
        a = 2.0 * SQRT2  # edge length
        assert geo.volume(P) == pytest.approx(a**3 / (6.0 * SQRT2), rel=1e-12)
        assert geo.surface_area(P) == pytest.approx(SQRT3 * a**2, rel=1e-12)

    def test_ratio_constants(self):
        assert geo.isoperimetric_ratio(make_octahedron()) == pytest.approx(
            108.0 * SQRT3, rel=1e-12)
        assert geo.isoperimetric_ratio(make_regular_tetrahedron()) == pytest.approx(
            216.0 * SQRT3, rel=1e-12)
        bp = thm2_bipyramid()
        assert geo.surface_area(bp) == pytest.approx(18.0 * SQRT2, rel=1e-12)
        assert geo.volume(bp) == pytest.approx(4.0 * SQRT3, rel=1e-12)
        assert geo.isoperimetric_ratio(bp) == pytest.approx(243.0 * SQRT2, rel=1e-12)

    def test_rigid_motion_invariance(self, rng):
        for _ in range(20):
            P = random_polytope(rng, rng.integers(4, 11))
            Q = transform(P, random_rotation(rng), t=rng.normal(size=3))
            assert geo.volume(Q) == pytest.approx(geo.volume(P), rel=1e-9)
            assert geo.surface_area(Q) == pytest.approx(
                geo.surface_area(P), rel=1e-9)
            assert geo.isoperimetric_ratio(Q) == pytest.approx(
                geo.isoperimetric_ratio(P), rel=1e-9)

    def test_scaling_covariance(self, rng):
        for _ in range(20):
            P = random_polytope(rng, rng.integers(4, 11))
            lam = float(rng.uniform(0.1, 10.0))
            Q = transform(P, scale=lam)
            assert geo.volume(Q) == pytest.approx(lam**3 * geo.volume(P), rel=1e-9)
            assert geo.surface_area(Q) == pytest.approx(
                lam**2 * geo.surface_area(P), rel=1e-9)
            assert geo.isoperimetric_ratio(Q) == pytest.approx(
                geo.isoperimetric_ratio(P), rel=1e-9)


class TestTriangulation:
    def test_octahedron(self):
        T = geo.triangulate_boundary(make_octahedron())
        assert len(T.triangles) == 8
        assert geo.vertex_degrees(T) == [4] * 6

    def test_cube(self):
        T = geo.triangulate_boundary(make_cube())
        assert len(T.triangles) == 12
        assert sum(geo.vertex_degrees(T)) == 6 * 8 - 12

    def test_tetrahedron(self):
        T = geo.triangulate_boundary(make_regular_tetrahedron())
        assert len(T.triangles) == 4
        assert geo.vertex_degrees(T) == [3, 3, 3, 3]

    def test_bipyramid_degree_pattern(self):
        # triangle bipyramid: two apices of degree 3, three equator degree 4
        P = geo.convex_hull(
            [(2, 0, 0), (-1, 1.6, 0), (-1, -1.6, 0), (0, 0, 1), (0, 0, -1)])
        deg = sorted(geo.vertex_degrees(geo.triangulate_boundary(P)))
        assert deg == [3, 3, 4, 4, 4]

    def test_degree_identity_random(self, rng):
        for _ in range(30):
            P = random_polytope(rng, rng.integers(4, 11))
            T = geo.triangulate_boundary(P)
            deg = geo.vertex_degrees(T)
            n = P.n_vertices
            assert sum(deg) == 6 * n - 12
            assert all(3 <= d <= n - 1 for d in deg)
            # triangles tile the boundary: every edge in exactly two of them
            count = {}
            for t in T.triangles:
                for e in ((t[0], t[1]), (t[1], t[2]), (t[0], t[2])):
                    e = tuple(sorted(e))
                    count[e] = count.get(e, 0) + 1
            assert set(count.values()) == {2}


class TestInsphere:
    def test_unit_cube(self):
        ins = geo.insphere(make_cube())
        assert ins.center.as_tuple() == pytest.approx((0.5, 0.5, 0.5), abs=1e-12)
        assert ins.radius == pytest.approx(0.5, abs=1e-12)
        assert len(ins.touching) == 6

    def test_octahedron_identity(self):
        P = make_octahedron()
        ins = geo.insphere(P)
        assert ins.radius == pytest.approx(1.0 / SQRT3, rel=1e-12)
        assert len(ins.touching) == 8
        assert 27.0 * geo.volume(P) / ins.radius**3 == pytest.approx(
            geo.isoperimetric_ratio(P), rel=1e-12)

    def test_thm2_bipyramid(self):
        P = thm2_bipyramid()
        ins = geo.insphere(P)
        assert ins.radius == pytest.approx(SQRT2 / SQRT3, rel=1e-12)
        assert len(ins.touching) == 6
        assert 27.0 * geo.volume(P) / ins.radius**3 == pytest.approx(
            243.0 * SQRT2, rel=1e-9)

    def test_identity_whenever_all_facets_touch(self, rng):
        hits = 0
        for _ in range(40):
            P = random_polytope(rng, rng.integers(4, 9))
            ins = geo.insphere(P)
            assert ins.radius > 0.0
            assert P.contains(ins.center)
            for f in P.facets:
                assert f.offset - f.normal.dot(ins.center) >= ins.radius - 1e-7
            if len(ins.touching) == P.n_facets:
                hits += 1
                ratio = geo.isoperimetric_ratio(P)
                assert abs(ratio - 27.0 * geo.volume(P) / ins.radius**3) \
                    <= 1e-9 * ratio
        # simplices always touch all four facets, so the identity was exercised
        assert hits >= 1

    def test_ball_bound(self, rng):
        for _ in range(20):
            R = 6.5
            P = random_polytope(rng, rng.integers(4, 11), radius=R)
            ins = geo.insphere(P)
            assert ins.radius <= R + 1e-9
            vs = np.array([v.as_tuple() for v in P.vertices])
            assert np.linalg.norm(vs, axis=1).max() <= 2 * R + 1e-9


class TestProjection:
    def test_cube_shadow(self):
        sq = geo.project(make_cube(-1, 1), geo.Vec3(0, 0, 1))
        assert sq.area == pytest.approx(4.0, abs=1e-12)
        assert len(sq.vertices) == 4

    def test_octahedron_shadow(self):
        sq = geo.project(make_octahedron(), geo.Vec3(0, 0, 1))
        assert len(sq.vertices) == 4
        assert sq.area == pytest.approx(2.0, abs=1e-12)

    def test_tetrahedron_shadow(self):
        sq = geo.project(make_regular_tetrahedron(), geo.Vec3(0, 0, 1))
        assert sq.area == pytest.approx(4.0, abs=1e-12)
        assert len(sq.vertices) == 4

    def test_frame_is_deterministic_and_right_handed(self, rng):
        for _ in range(20):
            n = geo.Vec3(*rng.normal(size=3))
            u, v, w = geo.projection_frame(n)
            assert u.dot(v) == pytest.approx(0.0, abs=1e-12)
            assert u.dot(w) == pytest.approx(0.0, abs=1e-12)
            assert u.cross(v).dot(w) == pytest.approx(1.0, abs=1e-9)

    def test_shadow_area_never_exceeds_half_surface(self, rng):
        # Cauchy: the shadow is at most half the surface area
        for _ in range(10):
            P = random_polytope(rng, 8)
            n = geo.Vec3(*rng.normal(size=3))
            assert geo.project(P, n).area <= 0.5 * geo.surface_area(P) + 1e-9
