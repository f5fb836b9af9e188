"""3D convex polytope kernel.

Vertices-only convex hulls, exact-as-practical measures (volume, surface
area, isoperimetric ratio), boundary triangulations, inscribed spheres and
planar projections, for the tiny polytopes (a handful of vertices) this
package works with.  Robustness strategy: plain double arithmetic with a
plane-distance tolerance of 1e-9 times the bounding-box diagonal; coplanar
triangles are merged into facets by plane matching.  No general-position
assumptions, no symbolic perturbation.

All types are immutable after construction and every operation is pure, so
values can be shared freely across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .errors import DegenerateInput

__all__ = [
    "Vec3",
    "Facet",
    "Polytope3",
    "TriangulatedBoundary",
    "Insphere",
    "Polygon2",
    "convex_hull",
    "volume",
    "surface_area",
    "isoperimetric_ratio",
    "triangulate_boundary",
    "vertex_degrees",
    "insphere",
    "project",
]

# relative plane-distance tolerance (times the bounding-box diagonal)
GEOM_EPS = 1e-9


@dataclass(frozen=True)
class Vec3:
    """Point or vector in R^3; components must be finite."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y) and math.isfinite(self.z)):
            raise DegenerateInput(f"non-finite coordinate: {self!r}")

    def __add__(self, o: "Vec3") -> "Vec3":
        return Vec3(self.x + o.x, self.y + o.y, self.z + o.z)

    def __sub__(self, o: "Vec3") -> "Vec3":
        return Vec3(self.x - o.x, self.y - o.y, self.z - o.z)

    def scale(self, t: float) -> "Vec3":
        return Vec3(t * self.x, t * self.y, t * self.z)

    def dot(self, o: "Vec3") -> float:
        return self.x * o.x + self.y * o.y + self.z * o.z

    def cross(self, o: "Vec3") -> "Vec3":
        return Vec3(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )

    def norm(self) -> float:
        return math.sqrt(self.dot(self))

    def unit(self) -> "Vec3":
        n = self.norm()
        if n == 0.0:
            raise DegenerateInput("cannot normalize zero vector")
        return Vec3(self.x / n, self.y / n, self.z / n)

    def as_tuple(self):
        return (self.x, self.y, self.z)


@dataclass(frozen=True)
class Facet:
    """A facet: vertex-index cycle, counterclockwise seen from outside,
    with the outward unit normal and plane offset (normal . x = offset)."""

    indices: tuple
    normal: Vec3
    offset: float


@dataclass(frozen=True)
class Polytope3:
    """Convex polytope: extreme points plus facet cycles with outward
    normals.  Construct through :func:`convex_hull`, which canonicalizes
    vertex order (lexicographic) and guarantees the invariants."""

    vertices: tuple
    facets: tuple

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_facets(self) -> int:
        return len(self.facets)

    def scale_tolerance(self) -> float:
        return GEOM_EPS * _bbox_diag(self.vertices)

    def contains(self, p: Vec3, tol: float | None = None) -> bool:
        if tol is None:
            tol = self.scale_tolerance()
        return all(f.normal.dot(p) <= f.offset + tol for f in self.facets)


@dataclass(frozen=True)
class TriangulatedBoundary:
    """Triangulation of the boundary using only polytope vertices."""

    base: Polytope3
    triangles: tuple

    def edges(self) -> set:
        es = set()
        for (a, b, c) in self.triangles:
            es.add((min(a, b), max(a, b)))
            es.add((min(b, c), max(b, c)))
            es.add((min(a, c), max(a, c)))
        return es


@dataclass(frozen=True)
class Insphere:
    """Largest inscribed ball: center, radius, and the facets it touches."""

    center: Vec3
    radius: float
    touching: tuple


@dataclass(frozen=True)
class Polygon2:
    """Convex polygon in the plane, vertices counterclockwise starting from
    the lexicographically smallest."""

    vertices: tuple

    @property
    def area(self) -> float:
        vs = self.vertices
        s = 0.0
        for i in range(len(vs)):
            x0, y0 = vs[i]
            x1, y1 = vs[(i + 1) % len(vs)]
            s += x0 * y1 - x1 * y0
        return 0.5 * s

    def contains(self, p, tol: float = 1e-9) -> bool:
        vs = self.vertices
        for i in range(len(vs)):
            x0, y0 = vs[i]
            x1, y1 = vs[(i + 1) % len(vs)]
            if (x1 - x0) * (p[1] - y0) - (y1 - y0) * (p[0] - x0) < -tol:
                return False
        return True


def _bbox_diag(points) -> float:
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    zs = [p.z for p in points]
    return math.sqrt(
        (max(xs) - min(xs)) ** 2 + (max(ys) - min(ys)) ** 2 + (max(zs) - min(zs)) ** 2
    )


def _dedup(points, tol):
    out = []
    for p in points:
        if all((p - q).norm() > tol for q in out):
            out.append(p)
    return out


def _seed_tetrahedron(pts, eps):
    """Indices of four affinely independent points, or raise."""
    i0 = 0
    i1 = max(range(len(pts)), key=lambda i: (pts[i] - pts[i0]).norm())
    if (pts[i1] - pts[i0]).norm() <= eps:
        raise DegenerateInput("all points coincide")
    d = pts[i1] - pts[i0]
    i2 = max(range(len(pts)), key=lambda i: d.cross(pts[i] - pts[i0]).norm())
    if d.cross(pts[i2] - pts[i0]).norm() <= eps * d.norm():
        raise DegenerateInput("points are collinear")
    n = d.cross(pts[i2] - pts[i0])
    i3 = max(range(len(pts)), key=lambda i: abs(n.dot(pts[i] - pts[i0])))
    if abs(n.dot(pts[i3] - pts[i0])) <= eps * n.norm():
        raise DegenerateInput("points are coplanar")
    return i0, i1, i2, i3


def _tri_plane(pts, tri):
    a, b, c = (pts[tri[0]], pts[tri[1]], pts[tri[2]])
    n = (b - a).cross(c - a)
    nn = n.norm()
    if nn == 0.0:
        return None
    n = Vec3(n.x / nn, n.y / nn, n.z / nn)
    return n, n.dot(a)


def convex_hull(points) -> Polytope3:
    """Convex hull of >= 4 points, incremental insertion.

    The result's vertex set is exactly the extreme points of the input,
    sorted lexicographically.  Raises DegenerateInput when the points are
    affinely dependent within tolerance.
    """
    pts = [p if isinstance(p, Vec3) else Vec3(*p) for p in points]
    if len(pts) < 4:
        raise DegenerateInput(f"need at least 4 points, got {len(pts)}")
    eps = GEOM_EPS * max(_bbox_diag(pts), 1e-300)
    pts = _dedup(pts, eps)
    if len(pts) < 4:
        raise DegenerateInput("fewer than 4 distinct points")
    i0, i1, i2, i3 = _seed_tetrahedron(pts, eps)

    # orient the seed so all normals point away from its centroid
    g = (pts[i0] + pts[i1] + pts[i2] + pts[i3]).scale(0.25)
    tris = []
    for tri in ((i0, i1, i2), (i0, i1, i3), (i0, i2, i3), (i1, i2, i3)):
        pl = _tri_plane(pts, tri)
        n, d = pl
        if n.dot(g) > d:
            tri = (tri[0], tri[2], tri[1])
            pl = _tri_plane(pts, tri)
        tris.append(tri)

    seeded = {i0, i1, i2, i3}
    for ip in range(len(pts)):
        if ip in seeded:
            continue
        p = pts[ip]
        visible = []
        for t, tri in enumerate(tris):
            n, d = _tri_plane(pts, tri)
            if n.dot(p) - d > eps:
                visible.append(t)
        if not visible:
            continue  # interior or on the surface: not an extreme point
        # horizon = edges of the visible region that border a hidden triangle
        vis = set(visible)
        edge_count = {}
        for t in visible:
            a, b, c = tris[t]
            for e in ((a, b), (b, c), (c, a)):
                key = (min(e), max(e))
                edge_count[key] = edge_count.get(key, 0) + 1
        horizon = []
        for t in visible:
            a, b, c = tris[t]
            for e in ((a, b), (b, c), (c, a)):
                if edge_count[(min(e), max(e))] == 1:
                    horizon.append(e)  # directed as in the visible triangle
        tris = [tri for t, tri in enumerate(tris) if t not in vis]
        for (a, b) in horizon:
            # keeping the visible triangle's edge direction keeps the fan
            # outward-oriented
            tris.append((a, b, ip))

    # merge coplanar adjacent triangles into facets (normal + offset match)
    planes = [_tri_plane(pts, tri) for tri in tris]
    parent = list(range(len(tris)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    edge_to_tris = {}
    for t, tri in enumerate(tris):
        a, b, c = tri
        for e in ((a, b), (b, c), (c, a)):
            edge_to_tris.setdefault((min(e), max(e)), []).append(t)
    for ts in edge_to_tris.values():
        if len(ts) != 2:
            raise DegenerateInput("hull surface is not closed")
        t0, t1 = ts
        (n0, d0), (n1, d1) = planes[t0], planes[t1]
        if n0.dot(n1) > 0.0 and all(
            abs(n0.dot(pts[v]) - d0) <= eps for v in tris[t1]
        ):
            parent[find(t0)] = find(t1)

    groups = {}
    for t in range(len(tris)):
        groups.setdefault(find(t), []).append(t)

    raw_facets = []
    for members in groups.values():
        # boundary edges of the merged group, directed
        dir_edges = {}
        for t in members:
            a, b, c = tris[t]
            for e in ((a, b), (b, c), (c, a)):
                key = (min(e), max(e))
                if key in dir_edges:
                    del dir_edges[key]
                else:
                    dir_edges[key] = e
        succ = {e[0]: e[1] for e in dir_edges.values()}
        start = min(succ)
        cycle = [start]
        while True:
            nxt = succ[cycle[-1]]
            if nxt == start:
                break
            cycle.append(nxt)
            if len(cycle) > len(succ):
                raise DegenerateInput("facet boundary is not a single cycle")
        # drop collinear cycle points (interior points of hull edges); a real
        # polytope vertex turns strictly in every facet containing it
        kept = []
        m = len(cycle)
        for k in range(m):
            p = pts[cycle[(k - 1) % m]]
            v = pts[cycle[k]]
            q = pts[cycle[(k + 1) % m]]
            edge = q - p
            dist = (v - p).cross(edge).norm() / max(edge.norm(), 1e-300)
            if dist > eps:
                kept.append(cycle[k])
        if len(kept) < 3:
            raise DegenerateInput("facet degenerated to a segment")
        raw_facets.append((tuple(kept), planes[members[0]]))

    used = sorted({v for cyc, _ in raw_facets for v in cyc},
                  key=lambda i: pts[i].as_tuple())
    remap = {old: new for new, old in enumerate(used)}
    vertices = tuple(pts[i] for i in used)
    facets = [
        Facet(tuple(remap[v] for v in cyc), n, d) for cyc, (n, d) in raw_facets
    ]

    # canonical facet order and cycle rotation (start at the least index)
    canon = []
    for f in facets:
        idx = f.indices
        k = idx.index(min(idx))
        idx = idx[k:] + idx[:k]
        canon.append(Facet(idx, f.normal, f.offset))
    canon.sort(key=lambda f: (len(f.indices), f.indices))

    poly = Polytope3(vertices, tuple(canon))
    if volume(poly) <= eps * _bbox_diag(vertices) ** 2:
        raise DegenerateInput("zero-volume hull")
    return poly


def _facet_fan(poly: Polytope3, f: Facet):
    idx = f.indices
    for k in range(1, len(idx) - 1):
        yield idx[0], idx[k], idx[k + 1]


def volume(P: Polytope3) -> float:
    """Volume by signed tetrahedra from the vertex centroid (always interior
    for a convex polytope)."""
    vs = P.vertices
    g = Vec3(
        sum(v.x for v in vs) / len(vs),
        sum(v.y for v in vs) / len(vs),
        sum(v.z for v in vs) / len(vs),
    )
    total = 0.0
    for f in P.facets:
        for (a, b, c) in _facet_fan(P, f):
            va, vb, vc = vs[a] - g, vs[b] - g, vs[c] - g
            total += va.dot(vb.cross(vc))
    return total / 6.0


def surface_area(P: Polytope3) -> float:
    """Sum of facet areas (each by the cross-product shoelace in its plane)."""
    vs = P.vertices
    total = 0.0
    for f in P.facets:
        acc = Vec3(0.0, 0.0, 0.0)
        idx = f.indices
        for i in range(len(idx)):
            a = vs[idx[i]]
            b = vs[idx[(i + 1) % len(idx)]]
            acc = acc + a.cross(b)
        total += 0.5 * abs(acc.dot(f.normal))
    return total


def isoperimetric_ratio(P: Polytope3) -> float:
    """S(P)^3 / V(P)^2, the scale-invariant isoperimetric ratio."""
    V = volume(P)
    if V <= GEOM_EPS * _bbox_diag(P.vertices) ** 3:
        raise DegenerateInput("volume vanishes within tolerance")
    S = surface_area(P)
    return S**3 / V**2


def triangulate_boundary(P: Polytope3) -> TriangulatedBoundary:
    """Fan-triangulates every non-triangular facet from its least-index
    vertex.  The result uses only polytope vertices and satisfies the
    closed-surface degree identity (sum of degrees = 6n - 12)."""
    tris = []
    for f in P.facets:
        idx = f.indices
        k = idx.index(min(idx))
        idx = idx[k:] + idx[:k]
        for t in range(1, len(idx) - 1):
            tris.append((idx[0], idx[t], idx[t + 1]))
    return TriangulatedBoundary(P, tuple(tris))


def vertex_degrees(T: TriangulatedBoundary) -> list:
    """Edge count at each vertex of the triangulation."""
    deg = [0] * T.base.n_vertices
    for (a, b) in T.edges():
        deg[a] += 1
        deg[b] += 1
    return deg


def insphere(P: Polytope3) -> Insphere:
    """Chebyshev center: maximize r subject to (normal_i . c) + r <= offset_i.

    The LP is solved by enumerating basic solutions (all quadruples of facet
    planes); with at most a few dozen facets this is both trivial and immune
    to cycling/degeneracy.  ``touching`` lists the facets whose plane lies at
    distance r from the center, within tolerance."""
    m = P.n_facets
    rows = [(f.normal.x, f.normal.y, f.normal.z, 1.0, f.offset) for f in P.facets]
    scale = _bbox_diag(P.vertices)
    tol = GEOM_EPS * scale
    best = None
    for quad in combinations(range(m), 4):
        sol = _solve4(tuple(rows[i] for i in quad))
        if sol is None:
            continue
        cx, cy, cz, r = sol
        if r <= 0.0:
            continue
        if all(
            rows[i][0] * cx + rows[i][1] * cy + rows[i][2] * cz + r <= rows[i][4] + tol
            for i in range(m)
        ):
            if best is None or r > best[3]:
                best = (cx, cy, cz, r)
    if best is None:
        raise DegenerateInput("no inscribed ball found (degenerate polytope)")
    cx, cy, cz, r = best
    center = Vec3(cx, cy, cz)
    touch_tol = 1e-7 * max(scale, 1.0)
    touching = tuple(
        i
        for i, f in enumerate(P.facets)
        if abs(f.offset - f.normal.dot(center) - r) <= touch_tol
    )
    return Insphere(center, r, touching)


def _solve4(rows):
    """Gaussian elimination with partial pivoting on a 4x4 system."""
    a = [list(r) for r in rows]
    n = 4
    for col in range(n):
        piv = max(range(col, n), key=lambda r: abs(a[r][col]))
        if abs(a[piv][col]) < 1e-12:
            return None
        a[col], a[piv] = a[piv], a[col]
        for r in range(n):
            if r != col:
                f = a[r][col] / a[col][col]
                for c in range(col, n + 1):
                    a[r][c] -= f * a[col][c]
    try:
        return tuple(a[i][4] / a[i][i] for i in range(n))
    except ZeroDivisionError:
        return None


def projection_frame(normal: Vec3):
    """Deterministic orthonormal frame (u, v, n) of the projection plane.

    u comes from Gram-Schmidt on the coordinate axis least parallel to the
    normal (ties to the lower axis index); v = n x u makes the frame
    right-handed."""
    n = normal.unit()
    axes = (Vec3(1.0, 0.0, 0.0), Vec3(0.0, 1.0, 0.0), Vec3(0.0, 0.0, 1.0))
    k = min(range(3), key=lambda i: (abs(axes[i].dot(n)), i))
    e = axes[k]
    u = (e - n.scale(e.dot(n))).unit()
    v = n.cross(u)
    return u, v, n


def _hull2d(points, tol):
    """Andrew monotone chain; strictly convex turns only (collinear dropped)."""
    pts = sorted(set(points))
    if len(pts) == 1:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= tol:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= tol:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def project(P: Polytope3, normal: Vec3) -> Polygon2:
    """Orthogonal projection (shadow) of the polytope onto the plane through
    the origin orthogonal to ``normal``, in the deterministic frame of
    :func:`projection_frame`."""
    if normal.norm() == 0.0:
        raise DegenerateInput("zero projection normal")
    u, v, _ = projection_frame(normal)
    pts = [(p.dot(u), p.dot(v)) for p in P.vertices]
    scale = max(max(abs(x), abs(y)) for x, y in pts) or 1.0
    hull = _hull2d(pts, (GEOM_EPS * scale) ** 2)
    if len(hull) < 3:
        raise DegenerateInput("projection degenerates to a segment")
    # counterclockwise, starting at the lexicographic minimum
    area2 = sum(
        hull[i][0] * hull[(i + 1) % len(hull)][1] - hull[(i + 1) % len(hull)][0] * hull[i][1]
        for i in range(len(hull))
    )
    if area2 < 0.0:
        hull.reverse()
    k = hull.index(min(hull))
    return Polygon2(tuple(hull[k:] + hull[:k]))
