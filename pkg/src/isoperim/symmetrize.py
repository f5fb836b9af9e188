"""Steiner symmetrization of convex polytopes.

Given a direction u, symmetrization replaces every chord of the body parallel
to u with the chord of equal length centered on the plane u-perp through the
origin.  For a polytope the upper and lower boundary graphs over the shadow
are piecewise linear, so the symmetral is again a polytope: its vertices
project onto vertices of the overlay of the upper and lower subdivisions.
The construction here hulls the centered chords over all overlay vertices
(projected vertices plus crossings of projected upper facet edges with
projected lower facet edges); extra non-extreme candidates are harmless.

Also provides the combinatorial-type-preserving special case (apex pairs and
double-pyramid symmetrals), the three-step reduction of octahedral-type
bodies to coordinate form +-t_i u_i with its closed-form ratio bound, and the
rounding-based lower bound for double pyramids with unit apices.

Everything is pure and operates on immutable values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateInput, InvalidApexPair, NotOctahedralType
from .geometry import (
    Polygon2,
    Polytope3,
    TriangulatedBoundary,
    Vec3,
    convex_hull,
    projection_frame,
    project,
    triangulate_boundary,
    vertex_degrees,
)

__all__ = [
    "PiecewiseLinearEnvelope",
    "ApexPair",
    "envelopes",
    "steiner_symmetral",
    "find_apex_pair",
    "bipyramid_symmetral",
    "octahedral_pipeline",
    "jensen_bound",
    "schwarz_lower_bound",
    "triangulations_isomorphic",
]


@dataclass(frozen=True)
class PiecewiseLinearEnvelope:
    """One boundary graph (upper or lower) of a polytope over its shadow.

    ``pieces`` maps each contributing facet to (cell, coeffs) where cell is
    the facet's projected polygon and coeffs = (a, b, c) gives the affine
    height t = a*px + b*py + c on that cell.  The upper envelope is concave
    and equals the pointwise minimum of its facet planes; the lower envelope
    is convex and equals the maximum of its planes -- so evaluation never
    needs point location.
    """

    domain: Polygon2
    pieces: tuple
    concave: bool  # True for the upper envelope f, False for the lower graph

    def value(self, px: float, py: float) -> float:
        vals = [a * px + b * py + c for (_, (a, b, c)) in self.pieces]
        return min(vals) if self.concave else max(vals)


@dataclass(frozen=True)
class ApexPair:
    """Vertex pair (i, j) such that each is joined by a triangulation edge to
    every other vertex and every triangle contains one of them."""

    i: int
    j: int


def _facet_classes(P: Polytope3, u: Vec3, eps: float):
    """Split facets into upper (normal . u > eps), lower, and vertical."""
    upper, lower, vertical = [], [], []
    for f in P.facets:
        s = f.normal.dot(u)
        if s > eps:
            upper.append(f)
        elif s < -eps:
            lower.append(f)
        else:
            vertical.append(f)
    return upper, lower, vertical


def envelopes(P: Polytope3, normal: Vec3):
    """Upper and lower height functions (f, g) of P in direction ``normal``.

    f(x) = max{t : x + t*u in P} and g(x) = -min{t : x + t*u in P} over the
    shadow, so the body is the set of x + t*u with -g(x) <= t <= f(x).  Both
    are concave piecewise-linear; g's pieces carry the negated coefficients of
    the lower facet planes so that both evaluate as a minimum of affines."""
    if normal.norm() == 0.0:
        raise DegenerateInput("zero direction")
    u1, u2, n = projection_frame(normal)
    dom = project(P, normal)
    upper, lower, _ = _facet_classes(P, n, 1e-12)

    def cell_and_coeffs(f, sign):
        # facet plane: normal . (px*u1 + py*u2 + t*n) = offset
        s = f.normal.dot(n)
        a = sign * (-f.normal.dot(u1) / s)
        b = sign * (-f.normal.dot(u2) / s)
        c = sign * (f.offset / s)
        cell = tuple(
            (P.vertices[i].dot(u1), P.vertices[i].dot(u2)) for i in f.indices
        )
        return Polygon2(cell), (a, b, c)

    f_env = PiecewiseLinearEnvelope(
        dom, tuple(cell_and_coeffs(f, 1.0) for f in upper), True)
    g_env = PiecewiseLinearEnvelope(
        dom, tuple(cell_and_coeffs(f, -1.0) for f in lower), True)
    return f_env, g_env


def _seg_intersections(segs_a, segs_b, tol):
    """Pairwise proper intersections of two 2D segment families."""
    out = []
    for (p1, p2) in segs_a:
        d1 = (p2[0] - p1[0], p2[1] - p1[1])
        for (q1, q2) in segs_b:
            d2 = (q2[0] - q1[0], q2[1] - q1[1])
            den = d1[0] * d2[1] - d1[1] * d2[0]
            la = math.hypot(*d1) * math.hypot(*d2)
            if abs(den) <= 1e-12 * (la + 1e-300):
                continue  # parallel or degenerate: endpoints are vertices anyway
            rx, ry = q1[0] - p1[0], q1[1] - p1[1]
            t = (rx * d2[1] - ry * d2[0]) / den
            s = (rx * d1[1] - ry * d1[0]) / den
            if -tol <= t <= 1.0 + tol and -tol <= s <= 1.0 + tol:
                out.append((p1[0] + t * d1[0], p1[1] + t * d1[1]))
    return out


def steiner_symmetral(P: Polytope3, normal: Vec3) -> Polytope3:
    """Steiner symmetral of P with respect to the plane through the origin
    orthogonal to ``normal``.

    Volume is preserved and surface area never increases; the result is
    mirror symmetric through the plane.  Candidate vertices are the centered
    chords over all overlay vertices of the two boundary subdivisions."""
    if normal.norm() == 0.0:
        raise DegenerateInput("zero direction")
    u1, u2, n = projection_frame(normal)
    eps = 1e-12
    upper, lower, vertical = _facet_classes(P, n, eps)
    if not upper or not lower:
        raise DegenerateInput("polytope has empty shadow in this direction")

    def proj2(i):
        v = P.vertices[i]
        return (v.dot(u1), v.dot(u2))

    def facet_segments(facets):
        segs = []
        for f in facets:
            idx = f.indices
            for k in range(len(idx)):
                segs.append((proj2(idx[k]), proj2(idx[(k + 1) % len(idx)])))
        return segs

    cands = [proj2(i) for i in range(P.n_vertices)]
    # silhouette (vertical facet) edges bound both subdivisions
    up_segs = facet_segments(upper) + facet_segments(vertical)
    lo_segs = facet_segments(lower) + facet_segments(vertical)
    diam = max(max(abs(c[0]), abs(c[1])) for c in cands) or 1.0
    cands += _seg_intersections(up_segs, lo_segs, 1e-9)

    # dedup with a relative snap
    snap = 1e-9 * diam
    uniq = []
    for c in cands:
        if all((c[0] - q[0]) ** 2 + (c[1] - q[1]) ** 2 > snap * snap for q in uniq):
            uniq.append(c)

    # chord length from the facet planes: f(x) = min over upper planes,
    # -g(x) = max over lower planes (valid globally on the shadow by convexity)
    def plane_t(f, px, py):
        s = f.normal.dot(n)
        return (f.offset - f.normal.dot(u1.scale(px) + u2.scale(py))) / s

    new_pts = []
    for (px, py) in uniq:
        fv = min(plane_t(f, px, py) for f in upper)
        gv = -max(plane_t(f, px, py) for f in lower)
        half = 0.5 * (fv + gv)
        if half < -snap:
            continue  # outside the shadow within tolerance
        half = max(half, 0.0)
        base = u1.scale(px) + u2.scale(py)
        new_pts.append(base + n.scale(half))
        new_pts.append(base - n.scale(half))
    return convex_hull(new_pts)


def find_apex_pair(T: TriangulatedBoundary):
    """Scan all vertex pairs (lexicographic order) for an apex pair; returns
    the first match or None.

    Pair condition: both vertices are joined by a triangulation edge to every
    *other* vertex (adjacency between the pair itself is not required), and
    every triangle contains at least one of the pair."""
    nv = T.base.n_vertices
    edges = T.edges()
    for i in range(nv):
        for j in range(i + 1, nv):
            ok = True
            for k in range(nv):
                if k == i or k == j:
                    continue
                if (min(i, k), max(i, k)) not in edges or (min(j, k), max(j, k)) not in edges:
                    ok = False
                    break
            if not ok:
                continue
            if all(i in t or j in t for t in T.triangles):
                return ApexPair(i, j)
    return None


def _check_apex_pair(T: TriangulatedBoundary, pair: ApexPair) -> None:
    nv = T.base.n_vertices
    i, j = pair.i, pair.j
    if not (0 <= i < nv and 0 <= j < nv) or i == j:
        raise InvalidApexPair(f"indices out of range or equal: {pair}")
    edges = T.edges()
    for k in range(nv):
        if k in (i, j):
            continue
        if (min(i, k), max(i, k)) not in edges or (min(j, k), max(j, k)) not in edges:
            raise InvalidApexPair(f"vertex {k} not adjacent to both of {pair}")
    for t in T.triangles:
        if i not in t and j not in t:
            raise InvalidApexPair(f"triangle {t} avoids both of {pair}")


def bipyramid_symmetral(T: TriangulatedBoundary, pair: ApexPair):
    """Symmetral with respect to (v_j - v_i)-perp for a valid apex pair.

    The result is a double pyramid whose equator is the projection of the
    remaining vertices and whose apices sit at half the pair distance on
    either side; the induced triangulation is combinatorially isomorphic to
    the input.  Returns (polytope, triangulation, vertex_map) where
    vertex_map[old_index] = new_index."""
    _check_apex_pair(T, pair)
    P = T.base
    vi, vj = P.vertices[pair.i], P.vertices[pair.j]
    axis = vj - vi
    if axis.norm() == 0.0:
        raise InvalidApexPair("apex pair vertices coincide")
    u = axis.unit()
    h = 0.5 * axis.norm()

    def proj(v: Vec3) -> Vec3:
        return v - u.scale(v.dot(u))

    base_pt = proj(vi)  # = proj(vj)
    new_vertices = []
    for k, v in enumerate(P.vertices):
        if k == pair.i:
            new_vertices.append(base_pt - u.scale(h))
        elif k == pair.j:
            new_vertices.append(base_pt + u.scale(h))
        else:
            new_vertices.append(proj(v))

    Q = convex_hull(new_vertices)
    if Q.n_vertices != P.n_vertices:
        raise DegenerateInput(
            f"symmetral collapsed: {Q.n_vertices} vertices from {P.n_vertices}"
        )
    # identify each constructed point with its hull vertex
    tolm = 1e-7 * max(1.0, axis.norm())
    vmap = []
    for v in new_vertices:
        hits = [k for k, w in enumerate(Q.vertices) if (v - w).norm() <= tolm]
        if len(hits) != 1:
            raise DegenerateInput("vertex correspondence is ambiguous")
        vmap.append(hits[0])
    new_tris = tuple(
        tuple(sorted((vmap[a], vmap[b], vmap[c]))) for (a, b, c) in T.triangles
    )
    TQ = TriangulatedBoundary(Q, new_tris)
    if not triangulations_isomorphic(T, TQ):
        raise DegenerateInput("combinatorial type was not preserved")
    return Q, TQ, tuple(vmap)


def triangulations_isomorphic(T1: TriangulatedBoundary, T2: TriangulatedBoundary) -> bool:
    """Graph isomorphism of triangulation 1-skeletons (degree filter plus
    backtracking; vertex counts here are tiny)."""
    n1, n2 = T1.base.n_vertices, T2.base.n_vertices
    if n1 != n2:
        return False
    e1, e2 = T1.edges(), T2.edges()
    if len(e1) != len(e2):
        return False
    d1 = vertex_degrees(T1)
    d2 = vertex_degrees(T2)
    if sorted(d1) != sorted(d2):
        return False

    adj1 = [set() for _ in range(n1)]
    adj2 = [set() for _ in range(n1)]
    for (a, b) in e1:
        adj1[a].add(b)
        adj1[b].add(a)
    for (a, b) in e2:
        adj2[a].add(b)
        adj2[b].add(a)

    assign = [-1] * n1
    used = [False] * n1

    def backtrack(i):
        if i == n1:
            return True
        for j in range(n1):
            if used[j] or d1[i] != d2[j]:
                continue
            ok = True
            for k in range(i):
                if (k in adj1[i]) != (assign[k] in adj2[j]):
                    ok = False
                    break
            if ok:
                assign[i] = j
                used[j] = True
                if backtrack(i + 1):
                    return True
                used[j] = False
                assign[i] = -1
        return False

    return backtrack(0)


def octahedral_pipeline(P: Polytope3):
    """Three successive apex-pair symmetrizations of an octahedral-type body.

    Requires every vertex of the triangulated boundary to have degree 4 (the
    octahedron type).  Symmetrizes along the three opposite (non-adjacent)
    vertex pairs in turn; the final body has vertices +-t_i u_i on three
    orthogonal axes.  Returns (t1, t2, t3), positive half-diagonal lengths.
    Volume is preserved, surface area never increases."""
    T = triangulate_boundary(P)
    if P.n_vertices != 6 or any(d != 4 for d in vertex_degrees(T)):
        raise NotOctahedralType(
            f"need 6 vertices of degree 4, got n={P.n_vertices}"
        )

    def opposite(T, i):
        edges = T.edges()
        others = [k for k in range(6) if k != i
                  and (min(i, k), max(i, k)) not in edges]
        if len(others) != 1:
            raise NotOctahedralType(f"vertex {i} has {len(others)} non-neighbors")
        return others[0]

    ts = []
    # track an original-label pairing through the three symmetrizations
    labels = list(range(6))  # labels[current_index] = original vertex label
    done_labels = set()
    cur_T = T
    for _step in range(3):
        # lowest unprocessed original label and its opposite
        start = min(l for l in labels if l not in done_labels)
        i = labels.index(start)
        j = opposite(cur_T, i)
        done_labels.add(labels[i])
        done_labels.add(labels[j])
        Q, TQ, vmap = bipyramid_symmetral(cur_T, ApexPair(min(i, j), max(i, j)))
        apex_a = Q.vertices[vmap[i]]
        apex_b = Q.vertices[vmap[j]]
        ts.append(0.5 * (apex_a - apex_b).norm())
        new_labels = [0] * 6
        for old_idx, new_idx in enumerate(vmap):
            new_labels[new_idx] = labels[old_idx]
        labels = new_labels
        cur_T = TQ
    t1, t2, t3 = ts
    # sanity: the final body must be centered with vertices +-t_i u_i
    c = cur_T.base.vertices
    mx = max(v.norm() for v in c)
    for v in c:
        m = min((v + w).norm() for w in c)
        if m > 1e-7 * max(mx, 1.0):
            raise DegenerateInput("pipeline did not reach centered coordinate form")
    return t1, t2, t3


def jensen_bound(t1: float, t2: float, t3: float) -> float:
    """Isoperimetric ratio of the hull of +-t_i e_i in closed form:
    27 V (sum 1/t_i^2)^(3/2) with V = (4/3) t1 t2 t3.

    Always at least 108*sqrt(3), with equality exactly at t1 = t2 = t3."""
    if t1 <= 0.0 or t2 <= 0.0 or t3 <= 0.0:
        raise DegenerateInput("half-diagonals must be positive")
    V = (4.0 / 3.0) * t1 * t2 * t3
    s = 1.0 / t1**2 + 1.0 / t2**2 + 1.0 / t3**2
    return 27.0 * V * s**1.5


def schwarz_lower_bound(q: float) -> float:
    """Isoperimetric ratio of the axially rounded double pyramid with unit
    apices over base area q: 18*sqrt((pi+q)^3/q).

    Rounding each horizontal cross-section to a centered disk preserves
    volume and never increases surface area, so this is a valid lower bound
    for the ratio of any such double pyramid with base area q."""
    from .errors import DomainError

    if q <= 0.0:
        raise DomainError(f"base area must be positive, got {q}")
    return 18.0 * math.sqrt((math.pi + q) ** 3 / q)
