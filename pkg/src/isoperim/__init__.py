"""isoperim: certified isoperimetric bounds for 3-polytopes.

A computational-geometry kernel (convex hulls, measures, Steiner
symmetrization, double-pyramid normal forms) plus an outward-rounded interval
branch-and-bound that re-certifies the numeric inequalities behind the
6-vertex isoperimetric optimum of the regular octahedron.
"""

from .errors import (
    BudgetExceeded,
    CertificationFailed,
    DegenerateInput,
    DomainError,
    IntervalOverflow,
    InvalidApexPair,
    NotOctahedralType,
)
from .geometry import (
    Insphere,
    Polygon2,
    Polytope3,
    TriangulatedBoundary,
    Vec3,
    convex_hull,
    insphere,
    isoperimetric_ratio,
    project,
    surface_area,
    triangulate_boundary,
    vertex_degrees,
    volume,
)
from .interval import PI, Box5, Interval, eval_G, eval_S, eval_V
from .kernel import BACKEND as KERNEL_BACKEND
from .strange import (
    StrangeBody,
    StrangeParams,
    feasible,
    realize,
    regular_bipyramid,
    strange5_ratio,
    strange_S,
    strange_V,
)
from .symmetrize import (
    ApexPair,
    bipyramid_symmetral,
    envelopes,
    find_apex_pair,
    jensen_bound,
    octahedral_pipeline,
    schwarz_lower_bound,
    steiner_symmetral,
)

__version__ = "0.1.0"
