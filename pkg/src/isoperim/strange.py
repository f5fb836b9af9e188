"""Double pyramids with unit apices over a pentagon-like base through the
origin: the normal form that non-octahedral 5- and 6-vertex polytopes reduce
to under symmetrization.

The family is parametrized by five nonnegative scalars (x1, x2, x3, y1, y2):
apices sit at (0, 0, +-1) and the base polygon in the z = 0 plane is the hull
of the origin together with

    w1 = (x1,  y1, 0),  w2 = (x2,  y2, 0),  w3 = (x3, 0, 0),
    w4 = (x2, -y2, 0),  w5 = (x1, -y1, 0),

mirror symmetric in y.  Closed forms for surface area and volume avoid any
hull computation; ``realize`` builds the actual polytope for cross-checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DegenerateInput, DomainError
from .geometry import Polytope3, Vec3, convex_hull

__all__ = [
    "StrangeParams",
    "StrangeBody",
    "FeasibilityProfile",
    "SIX_VERTEX",
    "FIVE_VERTEX_WIDE",
    "FIVE_VERTEX_NARROW",
    "strange_V",
    "strange_S",
    "feasible",
    "realize",
    "strange5_ratio",
    "regular_bipyramid",
]

# Family constants, each named for the bound it enforces:
#: minimum base area below which the 6-vertex ratio bound already exceeds 188
AREA_MIN_188 = 0.411
#: base-vertex distance beyond which the 6-vertex ratio bound exceeds 188
COORD_MAX_188 = 6.5
#: minimum base area below which the 5-vertex ratio bound already exceeds 344
AREA_MIN_344 = 0.09
#: maximum base area above which the 5-vertex ratio bound exceeds 344
AREA_MAX_344 = 15.0
#: base-vertex distance beyond which the 5-vertex ratio bound exceeds 344
COORD_MAX_344 = 17.0
#: alternate 5-vertex constants quoted in the final minimization argument
AREA_MIN_ALT = 0.18
COORD_MAX_ALT = 11.0


@dataclass(frozen=True)
class StrangeParams:
    """The five base coordinates; see the module docstring."""

    x1: float
    x2: float
    x3: float
    y1: float
    y2: float

    def as_tuple(self):
        return (self.x1, self.x2, self.x3, self.y1, self.y2)

    def ordered(self) -> bool:
        """0 <= x1 <= x2 <= x3 and y1, y2 >= 0."""
        return (
            0.0 <= self.x1 <= self.x2 <= self.x3
            and self.y1 >= 0.0
            and self.y2 >= 0.0
        )

    def convex_position(self) -> bool:
        """w1, w2, w3 appear in convex position along the base boundary:
        x2*y1 - x1*y2 >= 0 and (x3-x1)*y2 - (x3-x2)*y1 >= 0."""
        return (
            self.x2 * self.y1 - self.x1 * self.y2 >= 0.0
            and (self.x3 - self.x1) * self.y2 - (self.x3 - self.x2) * self.y1 >= 0.0
        )

    @property
    def base_area(self) -> float:
        """Area of the base polygon (shoelace in closed form)."""
        return self.x2 * self.y1 - self.x1 * self.y2 + self.x3 * self.y2


@dataclass(frozen=True)
class FeasibilityProfile:
    """Thresholds for the constrained family; two stock profiles below."""

    area_min: float
    coord_max: float
    area_max: float | None = None


#: 6-vertex profile (the branch-and-bound domain)
SIX_VERTEX = FeasibilityProfile(AREA_MIN_188, COORD_MAX_188)
#: 5-vertex profile from the two threshold bounds (area 0.09..15, coords <= 17)
FIVE_VERTEX_WIDE = FeasibilityProfile(AREA_MIN_344, COORD_MAX_344, AREA_MAX_344)
#: 5-vertex profile as quoted in the final minimization (area >= 0.18, <= 11)
FIVE_VERTEX_NARROW = FeasibilityProfile(AREA_MIN_ALT, COORD_MAX_ALT)


@dataclass(frozen=True)
class StrangeBody:
    """A realized member of the family.

    ``merged`` names input points that the hull absorbed (non-extreme), e.g.
    the origin when it lies inside a base edge, or w3 when collinear with its
    neighbors."""

    params: StrangeParams
    polytope: Polytope3
    merged: tuple = field(default_factory=tuple)


def strange_V(p: StrangeParams) -> float:
    """Volume closed form: (2/3) (x2 y1 - x1 y2 + x3 y2), i.e. 2/3 of the
    base area (each pyramid has unit height)."""
    return (2.0 / 3.0) * (p.x2 * p.y1 - p.x1 * p.y2 + p.x3 * p.y2)


def strange_S(p: StrangeParams) -> float:
    """Surface area closed form.

    Each of the three distinct lateral faces appears four times (two apices,
    mirror symmetry); the cross products collapse to:

      2 sqrt(x1^2 + y1^2)
    + 2 sqrt((x1-x2)^2 + (y1-y2)^2 + (x2 y1 - x1 y2)^2)
    + 2 sqrt(y2^2 + (x3-x2)^2 + x3^2 y2^2)
    """
    a = p.x2 * p.y1 - p.x1 * p.y2
    return (
        2.0 * math.sqrt(p.x1**2 + p.y1**2)
        + 2.0 * math.sqrt((p.x1 - p.x2) ** 2 + (p.y1 - p.y2) ** 2 + a**2)
        + 2.0 * math.sqrt(p.y2**2 + (p.x3 - p.x2) ** 2 + (p.x3 * p.y2) ** 2)
    )


def feasible(p: StrangeParams, profile: FeasibilityProfile = SIX_VERTEX) -> bool:
    """All family constraints at once: ordering, convex position, minimum
    base area, coordinate cap (and the profile's area cap when present)."""
    if not p.ordered() or not p.convex_position():
        return False
    if p.base_area < profile.area_min:
        return False
    if profile.area_max is not None and p.base_area > profile.area_max:
        return False
    return max(p.x3, p.y1, p.y2) <= profile.coord_max


def realize(p: StrangeParams) -> StrangeBody:
    """Hull of the seven defining points (origin, w1..w5, both apices).

    The origin and any base point in degenerate position are absorbed by the
    hull; their names are reported in ``merged``.  Raises DegenerateInput when
    the volume vanishes."""
    if not p.ordered():
        raise DegenerateInput(f"parameters violate the ordering constraints: {p}")
    if not p.convex_position():
        raise DegenerateInput(f"base points out of convex position: {p}")
    if strange_V(p) <= 0.0:
        raise DegenerateInput(f"zero volume: {p}")
    named = (
        ("o", Vec3(0.0, 0.0, 0.0)),
        ("w1", Vec3(p.x1, p.y1, 0.0)),
        ("w2", Vec3(p.x2, p.y2, 0.0)),
        ("w3", Vec3(p.x3, 0.0, 0.0)),
        ("w4", Vec3(p.x2, -p.y2, 0.0)),
        ("w5", Vec3(p.x1, -p.y1, 0.0)),
        ("apex+", Vec3(0.0, 0.0, 1.0)),
        ("apex-", Vec3(0.0, 0.0, -1.0)),
    )
    body = convex_hull([v for (_, v) in named])
    tol = 1e-9 * max(1.0, p.x3, p.y1, p.y2)
    merged = []
    for name, v in named:
        if not any((v - w).norm() <= tol for w in body.vertices):
            merged.append(name)
    return StrangeBody(p, body, tuple(merged))


def strange5_ratio(rho: float) -> float:
    """Isoperimetric ratio of the double pyramid with unit apices over a
    regular triangle of inradius rho centered at the origin:

        54 sqrt(3) (1 + rho^2)^(3/2) / rho
    """
    if rho <= 0.0:
        raise DomainError(f"inradius must be positive, got {rho}")
    return 54.0 * math.sqrt(3.0) * (1.0 + rho * rho) ** 1.5 / rho


def regular_bipyramid(rho: float) -> Polytope3:
    """The polytope behind :func:`strange5_ratio`: regular triangle of
    inradius rho in the z = 0 plane (circumradius 2 rho, one vertex on the
    positive x-axis) with apices (0, 0, +-1)."""
    if rho <= 0.0:
        raise DomainError(f"inradius must be positive, got {rho}")
    R = 2.0 * rho
    pts = [
        Vec3(R * math.cos(a), R * math.sin(a), 0.0)
        for a in (0.0, 2.0 * math.pi / 3.0, 4.0 * math.pi / 3.0)
    ]
    pts += [Vec3(0.0, 0.0, 1.0), Vec3(0.0, 0.0, -1.0)]
    return convex_hull(pts)
