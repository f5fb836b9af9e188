"""Certified verification of the package's numeric claims.

* :func:`branch_and_bound` -- rigorous subdivision proof that
  G = S^3 - 188 V^2 exceeds a threshold over the constrained 5-parameter
  family, producing a machine-checkable :class:`Certificate`.
* :func:`certify_min_1d` -- certified global minimum of a 1-D function given
  a sound interval extension (bisection with incumbent pruning only).
* :func:`certify_threshold_bounds` / :func:`certify_distance_bounds` -- strict
  interval enclosures of the fixed scalar inequalities used by the area and
  distance pruning arguments.

Certificates record the rounding strategy in force and can be re-validated
leaf by leaf.  All runs are deterministic for fixed box/depth budgets,
independent of the worker count.
"""

from __future__ import annotations

import heapq
import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import kernel
from ._roundops import ROUNDING_TAG
from .errors import BudgetExceeded, CertificationFailed, DomainError
from .interval import PI, Box5, Interval, iadd, idiv, imul, ipow, isqrt, isub

__all__ = [
    "ConstraintSet",
    "Budget",
    "Certificate",
    "branch_and_bound",
    "certify_min_1d",
    "Min1DResult",
    "mean_value_extension",
    "strange5_ratio_extension",
    "schwarz_profile_extension",
    "certify_threshold_bounds",
    "certify_distance_bounds",
    "quasirandom_feasible",
    "MU_STAR",
]

#: Multiplier of the active base-area constraint at the family minimizer,
#: used by the penalized curvature bound.  Any nonnegative value is sound;
#: this one makes the bound sharp where the margin is thinnest.
MU_STAR = 4.9499

#: subtree count for the deterministic work split (independent of jobs)
_SUBTREES = 64
_CHUNK = 1 << 15

_COND_NAMES = (
    "x1 <= x2",
    "x2 <= x3",
    "x2*y1 - x1*y2 >= 0",
    "(x3-x1)*y2 - (x3-x2)*y1 >= 0",
    "base area >= area_min",
)


@dataclass(frozen=True)
class ConstraintSet:
    """The five feasibility conditions of the constrained family.

    The two ordering constraints and the two convex-position constraints are
    fixed; the area floor and the coordinate cap are parameters.  The
    coordinate cap bounds the root box; the others prune during subdivision.
    """

    area_min: float = 0.411
    coord_max: float = 6.5

    def describe(self):
        return [
            _COND_NAMES[0],
            _COND_NAMES[1],
            _COND_NAMES[2],
            _COND_NAMES[3],
            f"x2*y1 - x1*y2 + x3*y2 >= {self.area_min}",
            f"0 <= x1, x2, x3, y1, y2 <= {self.coord_max}",
        ]

    def evaluate(self, box: Box5):
        """Each condition's enclosure and its status on the box:
        'true', 'false', or 'unknown'."""
        c = [
            isub(box.x2, box.x1),
            isub(box.x3, box.x2),
            isub(imul(box.x2, box.y1), imul(box.x1, box.y2)),
            isub(
                imul(isub(box.x3, box.x1), box.y2),
                imul(isub(box.x3, box.x2), box.y1),
            ),
            iadd(
                isub(imul(box.x2, box.y1), imul(box.x1, box.y2)),
                imul(box.x3, box.y2),
            ),
        ]
        floors = [0.0, 0.0, 0.0, 0.0, self.area_min]
        out = []
        for name, iv, floor in zip(_COND_NAMES, c, floors):
            if iv.lo >= floor:
                status = "true"
            elif iv.hi < floor:
                status = "false"
            else:
                status = "unknown"
            out.append((name, iv, status))
        return out

    def root_box(self) -> Box5:
        return Box5.from_bounds((0.0,) * 5, (self.coord_max,) * 5)


@dataclass(frozen=True)
class Budget:
    """Resource limits for a certification run."""

    max_boxes: int = 50_000_000
    max_depth: int = 200
    max_seconds: float | None = None


@dataclass
class Certificate:
    """Result of a branch-and-bound run.

    ``leaves`` is an (n, 14) float64 array of records
    ``l1..l5, h1..h5, status, info, a, b`` (see the kernel module); it
    partitions the root box up to shared faces.  ``global_margin`` is the
    least certified lower bound over verified leaves; for incomplete runs
    ``min_unresolved_bound`` reports the weakest plain bound among boxes the
    budget left unresolved.
    """

    claim: str
    threshold: float
    constraints: ConstraintSet
    root_lo: tuple
    root_hi: tuple
    leaves: np.ndarray
    complete: bool
    global_margin: float | None
    min_unresolved_bound: float | None
    stats: dict
    rounding: str = ROUNDING_TAG

    # -- inspection -----------------------------------------------------

    def counts(self):
        s = self.leaves[:, 10]
        return {
            "infeasible": int((s == 0).sum()),
            "verified": int((s == 1).sum()),
            "unresolved": int((s == 2).sum()),
        }

    def partition_measure_error(self) -> float:
        """Relative gap between the leaf measures and the root measure."""
        widths = self.leaves[:, 5:10] - self.leaves[:, 0:5]
        total = float(np.prod(widths, axis=1).sum())
        root = float(np.prod(np.subtract(self.root_hi, self.root_lo)))
        return abs(total - root) / root

    def revalidate(self) -> bool:
        """Re-classify every leaf box and confirm the recorded statuses.

        Verified leaves must re-verify above the threshold, infeasible leaves
        must fail the same condition.  Raises CertificationFailed on any
        mismatch; returns True otherwise."""
        n = len(self.leaves)
        boxes = np.ascontiguousarray(self.leaves[:, :10])
        out = np.zeros((n, 4))
        for start in range(0, n, 1 << 16):
            stop = min(start + (1 << 16), n)
            kernel.classify_batch(
                boxes[start:stop],
                out[start:stop],
                self.constraints.area_min,
                self.threshold,
                MU_STAR,
                True,
            )
        rec = self.leaves
        ok_inf = (rec[:, 10] == 0) & (out[:, 0] == 0) & (out[:, 1] == rec[:, 11])
        ok_ver = (rec[:, 10] == 1) & (out[:, 0] == 1) & (out[:, 2] > self.threshold)
        ok_unr = (rec[:, 10] == 2) & (out[:, 0] == 2)
        bad = ~(ok_inf | ok_ver | ok_unr)
        if bad.any():
            i = int(np.nonzero(bad)[0][0])
            raise CertificationFailed(
                f"leaf {i} failed revalidation: recorded {rec[i, 10:]}, got {out[i]}"
            )
        return True

    # -- serialization ----------------------------------------------------

    def to_json_dict(self):
        leaves = []
        for row in self.leaves:
            box = [[row[i], row[5 + i]] for i in range(5)]
            status = int(row[10])
            if status == 0:
                entry = {
                    "box": box,
                    "status": "infeasible",
                    "bound_or_violation": {
                        "cond": int(row[11]),
                        "interval": [row[12], row[13]],
                    },
                }
            elif status == 1:
                entry = {
                    "box": box,
                    "status": "verified",
                    "bound_or_violation": row[12],
                }
            else:
                entry = {
                    "box": box,
                    "status": "unresolved",
                    "bound_or_violation": {"lower_bound": row[12], "depth": int(row[11])},
                }
            leaves.append(entry)
        return {
            "claim": self.claim,
            "threshold": self.threshold,
            "rounding": self.rounding,
            "root": [[l, h] for l, h in zip(self.root_lo, self.root_hi)],
            "constraints": self.constraints.describe(),
            "area_min": self.constraints.area_min,
            "coord_max": self.constraints.coord_max,
            "complete": self.complete,
            "global_margin": self.global_margin,
            "min_unresolved_bound": self.min_unresolved_bound,
            "stats": self.stats,
            "leaves": leaves,
        }

    def save(self, path) -> None:
        header = self.to_json_dict()
        leaves = header.pop("leaves")
        with open(path, "w") as fh:
            fh.write("{")
            for k, v in header.items():
                fh.write(json.dumps(k))
                fh.write(": ")
                fh.write(json.dumps(v))
                fh.write(", ")
            fh.write('"leaves": [\n')
            for i, entry in enumerate(leaves):
                fh.write(json.dumps(entry))
                fh.write(",\n" if i + 1 < len(leaves) else "\n")
            fh.write("]}\n")

    @classmethod
    def load(cls, path) -> "Certificate":
        with open(path) as fh:
            doc = json.load(fh)
        rows = []
        for entry in doc["leaves"]:
            box = entry["box"]
            row = [box[i][0] for i in range(5)] + [box[i][1] for i in range(5)]
            bv = entry["bound_or_violation"]
            if entry["status"] == "infeasible":
                row += [0.0, float(bv["cond"]), bv["interval"][0], bv["interval"][1]]
            elif entry["status"] == "verified":
                row += [1.0, 0.0, float(bv), float(bv)]
            else:
                row += [2.0, float(bv["depth"]), float(bv["lower_bound"]),
                        float(bv["lower_bound"])]
            rows.append(row)
        root = doc["root"]
        cs = ConstraintSet(
            area_min=float(doc.get("area_min", 0.411)),
            coord_max=float(doc.get("coord_max", root[0][1])),
        )
        return cls(
            claim=doc["claim"],
            threshold=float(doc["threshold"]),
            constraints=cs,
            root_lo=tuple(r[0] for r in root),
            root_hi=tuple(r[1] for r in root),
            leaves=np.array(rows, dtype=float).reshape(-1, 14),
            complete=bool(doc["complete"]),
            global_margin=doc.get("global_margin"),
            min_unresolved_bound=doc.get("min_unresolved_bound"),
            stats=doc["stats"],
            rounding=doc.get("rounding", ROUNDING_TAG),
        )


def _bfs_expand(cs: ConstraintSet, threshold: float, max_depth: int):
    """Breadth-first expansion of the root into work units (same classify and
    split rules as the depth-first cores), until at least _SUBTREES boxes are
    pending or everything resolved.  Returns (leaf_rows, pending)."""
    root = ((0.0,) * 5, (cs.coord_max,) * 5, 0)
    pending = [root]
    leaves = []
    while pending and len(pending) < _SUBTREES:
        nxt = []
        boxes = np.array([list(lo) + list(hi) for (lo, hi, _) in pending])
        out = np.zeros((len(pending), 4))
        kernel.classify_batch(boxes, out, cs.area_min, threshold, MU_STAR, True)
        for (lo, hi, depth), row in zip(pending, out):
            status = int(row[0])
            if status == kernel.STATUS_UNRESOLVED and depth < max_depth:
                widths = [h - l for l, h in zip(lo, hi)]
                dim = max(range(5), key=lambda i: (widths[i], -i))
                m = 0.5 * (lo[dim] + hi[dim])
                if lo[dim] < m < hi[dim]:
                    lo2 = list(lo)
                    hi2 = list(hi)
                    hi2[dim] = m
                    nxt.append((tuple(lo2), tuple(hi2), depth + 1))
                    lo3 = list(lo)
                    lo3[dim] = m
                    nxt.append((tuple(lo3), tuple(hi), depth + 1))
                    continue
            info = float(row[1]) if status != kernel.STATUS_UNRESOLVED else float(depth)
            leaves.append(list(lo) + list(hi) + [float(status), info, row[2], row[3]])
        pending = nxt
    return leaves, pending


def branch_and_bound(
    root: Box5 | None,
    cs: ConstraintSet,
    threshold: float,
    budget: Budget = Budget(),
    jobs: int = 1,
    claim: str = "six-vertex-excess",
) -> Certificate:
    """Prove G > threshold on the feasible part of the root box.

    Work-queue subdivision: boxes failing a constraint become infeasible
    leaves, boxes whose certified lower bound exceeds the threshold become
    verified leaves, the rest split at the midpoint of their widest side.
    The root is first expanded breadth-first into a fixed set of subtrees;
    ``jobs`` only controls how many subtrees run concurrently, never the
    result.  Raises BudgetExceeded (carrying the partial certificate) when a
    limit is hit."""
    t0 = time.monotonic()
    if root is not None:
        lo, hi = root.bounds()
        if lo != (0.0,) * 5 or hi != (cs.coord_max,) * 5:
            raise DomainError("root must be [0, coord_max]^5")
    deadline = None if budget.max_seconds is None else t0 + budget.max_seconds

    leaf_rows, pending = _bfs_expand(cs, threshold, budget.max_depth)
    chunks = [np.array(leaf_rows, dtype=float).reshape(-1, 14)]
    # classified boxes in the expansion: every leaf plus every split
    processed = max(2 * len(leaf_rows) + len(pending) - 1, 1)
    cores = [
        kernel.BnbCore(lo, hi, depth, cs.area_min, threshold, MU_STAR, True,
                       budget.max_depth)
        for (lo, hi, depth) in pending
    ]
    core_chunks: list = [[] for _ in cores]
    alive = list(range(len(cores)))
    remaining = budget.max_boxes - processed
    max_depth_seen = 0
    stopped = None

    def run_one(idx, quota):
        buf = np.empty((min(quota, _CHUNK * 4), 14))
        got, nproc, done = cores[idx].run_chunk(buf, quota)
        return idx, buf[:got].copy(), nproc, done

    pool = ThreadPoolExecutor(max_workers=max(1, jobs)) if jobs > 1 else None
    try:
        while alive:
            if remaining <= 0:
                stopped = "box budget exhausted"
                break
            if deadline is not None and time.monotonic() > deadline:
                stopped = "time budget exhausted"
                break
            quotas = []
            for idx in alive:
                q = min(_CHUNK, remaining)
                remaining -= q
                quotas.append((idx, q))
                if remaining <= 0:
                    break
            quota_of = dict(quotas)
            if pool is not None:
                results = list(pool.map(lambda a: run_one(*a), quotas))
            else:
                results = [run_one(*a) for a in quotas]
            still = set(alive)
            for idx, rows, nproc, done in results:
                core_chunks[idx].append(rows)
                remaining += quota_of[idx] - nproc
                if done:
                    still.discard(idx)
            alive = [i for i in alive if i in still]
    finally:
        if pool is not None:
            pool.shutdown(wait=True)

    # drain unfinished cores: their pending boxes become unresolved records
    for idx in alive:
        buf = np.empty((4096, 14))
        while True:
            got = cores[idx].drain(buf)
            if got == 0:
                break
            core_chunks[idx].append(buf[:got].copy())

    for per_core in core_chunks:
        chunks.extend(per_core)
    processed = (budget.max_boxes - remaining) if cores else processed
    leaves = np.concatenate([c for c in chunks if len(c)]) if chunks else np.empty((0, 14))
    order = np.lexsort(tuple(leaves[:, 9 - i] for i in range(10)))
    leaves = leaves[order]

    status = leaves[:, 10]
    verified = leaves[status == 1]
    unresolved = leaves[status == 2]
    margin = float(verified[:, 12].min()) if len(verified) else None
    min_unres = float(unresolved[:, 12].min()) if len(unresolved) else None
    complete = len(unresolved) == 0 and stopped is None
    for core in cores:
        max_depth_seen = max(max_depth_seen, core.max_depth_seen)
    cert = Certificate(
        claim=claim,
        threshold=threshold,
        constraints=cs,
        root_lo=(0.0,) * 5,
        root_hi=(cs.coord_max,) * 5,
        leaves=leaves,
        complete=complete,
        global_margin=margin,
        min_unresolved_bound=min_unres,
        stats={
            "leaves": int(len(leaves)),
            "boxes": int(processed),
            "max_depth": int(max_depth_seen),
            "seconds": round(time.monotonic() - t0, 3),
            "subtrees": len(cores),
            "jobs": jobs,
            "area_min": cs.area_min,
        },
    )
    if not complete:
        reason = stopped or "depth budget exhausted"
        raise BudgetExceeded(
            f"{reason}; min unresolved lower bound {min_unres}", cert
        )
    return cert


# ---------------------------------------------------------------------------
# certified 1-D minimization
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Min1DResult:
    argmin: Interval
    minimum: Interval
    evaluations: int


def certify_min_1d(f, domain: Interval, tol: float,
                   max_evals: int = 500_000) -> Min1DResult:
    """Certified global minimum of f over the domain.

    ``f`` must be a sound interval extension (Interval -> Interval).  Plain
    bisection with incumbent pruning: subintervals whose lower bound exceeds
    the best point evaluation are discarded; no derivatives are consulted.
    Returns enclosures for the minimizer set and the minimum value, each of
    width <= tol.  Raises BudgetExceeded if the evaluation budget runs out
    first (e.g. when the supplied extension is too loose for the tolerance).
    """
    evals = 0

    def ev(iv: Interval) -> Interval:
        nonlocal evals
        evals += 1
        return f(iv)

    def point_hi(x: float) -> float:
        return ev(Interval(x, x)).hi

    incumbent = min(point_hi(domain.lo), point_hi(domain.hi), point_hi(domain.mid))
    heap = []  # entries (f_lo, x_lo, x_hi)
    e0 = ev(domain)
    heapq.heappush(heap, (e0.lo, domain.lo, domain.hi))
    while True:
        # prune and measure the surviving hull
        live = [(fl, a, b) for (fl, a, b) in heap if fl <= incumbent]
        if not live:
            raise CertificationFailed("pruned everything; inconsistent extension")
        lo_hull = min(a for _, a, _ in live)
        hi_hull = max(b for _, _, b in live)
        min_lo = min(fl for fl, _, _ in live)
        if hi_hull - lo_hull <= tol and incumbent - min_lo <= tol:
            return Min1DResult(
                Interval(lo_hull, hi_hull), Interval(min_lo, incumbent), evals
            )
        if evals >= max_evals:
            raise BudgetExceeded(
                f"1-D minimization: {evals} evaluations, enclosures "
                f"[{lo_hull}, {hi_hull}] / [{min_lo}, {incumbent}]"
            )
        heap = live
        heapq.heapify(heap)
        fl, a, b = heapq.heappop(heap)
        m = 0.5 * (a + b)
        if not (a < m < b):
            # cannot split further; the hull width is at float resolution
            raise BudgetExceeded(
                f"1-D minimization stalled at float resolution on [{a}, {b}]"
            )
        incumbent = min(incumbent, point_hi(m))
        for (lo_, hi_) in ((a, m), (m, b)):
            e = ev(Interval(lo_, hi_))
            if e.lo <= incumbent:
                heapq.heappush(heap, (e.lo, lo_, hi_))


def mean_value_extension(f_nat, df_nat):
    """Tighter interval extension from a natural one plus a derivative
    enclosure: intersects f_nat(X) with f(mid) + f'(X) (X - mid).  Both
    factors enclose the true range, so the intersection does too."""

    def ext(X: Interval) -> Interval:
        nat = f_nat(X)
        if X.lo == X.hi:
            return nat
        m = Interval(X.mid)
        mv = iadd(f_nat(m), imul(df_nat(X), isub(X, m)))
        return Interval(max(nat.lo, mv.lo), min(nat.hi, mv.hi))

    return ext


def strange5_ratio_extension():
    """Certified extension of 54*sqrt(3)*(1+r^2)^(3/2)/r (positive r)."""
    C = imul(Interval(54.0), isqrt(Interval(3.0)))

    def nat(X: Interval) -> Interval:
        if X.lo <= 0.0:
            raise DomainError("inradius must be positive")
        t = iadd(Interval(1.0), ipow(X, 2))
        t32 = imul(t, isqrt(t))
        return idiv(imul(C, t32), X)

    def dnat(X: Interval) -> Interval:
        # d/dr: 54 sqrt3 * sqrt(1+r^2) (2 r^2 - 1) / r^2
        t = iadd(Interval(1.0), ipow(X, 2))
        num = imul(isqrt(t), isub(imul(Interval(2.0), ipow(X, 2)), Interval(1.0)))
        return idiv(imul(C, num), ipow(X, 2))

    return mean_value_extension(nat, dnat)


def schwarz_profile_extension():
    """Certified extension of f(s) = (pi + s)^3 / s (positive s)."""

    def nat(X: Interval) -> Interval:
        if X.lo <= 0.0:
            raise DomainError("area must be positive")
        return idiv(ipow(iadd(PI, X), 3), X)

    def dnat(X: Interval) -> Interval:
        # f'(s) = (s + pi)^2 (2s - pi) / s^2
        a = ipow(iadd(X, PI), 2)
        b = isub(imul(Interval(2.0), X), PI)
        return idiv(imul(a, b), ipow(X, 2))

    return mean_value_extension(nat, dnat)


def schwarz_ratio_interval(s: Interval) -> Interval:
    """Enclosure of 18*sqrt((pi+s)^3/s)."""
    if s.lo <= 0.0:
        raise DomainError("area must be positive")
    f = idiv(ipow(iadd(PI, s), 3), s)
    return imul(Interval(18.0), isqrt(f))


def schwarz_profile_derivative(s: Interval) -> Interval:
    """Enclosure of f'(s) in factored form (s+pi)^2 (2s-pi) / s^2."""
    a = ipow(iadd(s, PI), 2)
    b = isub(imul(Interval(2.0), s), PI)
    return idiv(imul(a, b), ipow(s, 2))


def _rational_interval(num: int, den: int) -> Interval:
    return idiv(Interval(float(num)), Interval(float(den)))


@dataclass(frozen=True)
class ThresholdCheck:
    label: str
    enclosure: Interval
    threshold: float
    strict: bool


@dataclass(frozen=True)
class ThresholdReport:
    checks: tuple
    monotone_pieces: int

    @property
    def all_strict(self) -> bool:
        return all(c.strict for c in self.checks)


def certify_threshold_bounds(pieces: int = 64) -> ThresholdReport:
    """Certify the four area-threshold inequalities for the rounded-body
    ratio R(s) = 18 sqrt((pi+s)^3/s):

        R(411/1000) > 188,  R(51/10) > 188,  R(9/100) > 344,  R(15) > 344,

    plus the sign of f'(s): negative on [1/100, pi/2 - 1/100] and positive on
    [pi/2 + 1/100, 20], certified on ``pieces`` subintervals each.  Raises
    CertificationFailed on any non-strict outcome."""
    claims = [
        ("R(0.411) > 188", _rational_interval(411, 1000), 188.0),
        ("R(5.1) > 188", _rational_interval(51, 10), 188.0),
        ("R(0.09) > 344", _rational_interval(9, 100), 344.0),
        ("R(15) > 344", Interval(15.0), 344.0),
    ]
    checks = []
    for label, s, thr in claims:
        enc = schwarz_ratio_interval(s)
        strict = enc.lo > thr
        checks.append(ThresholdCheck(label, enc, thr, strict))
        if not strict:
            raise CertificationFailed(f"{label} failed: enclosure {enc!r}", checks)

    half_pi = idiv(PI, Interval(2.0))
    # decreasing strictly left of pi/2: cover [0.01, pi/2 - 0.01] outward
    left = Interval(0.01, isub(half_pi, Interval(0.01)).hi)
    # increasing strictly right of pi/2: cover [pi/2 + 0.01, 20] outward
    right = Interval(iadd(half_pi, Interval(0.01)).lo, 20.0)
    for dom, want_neg, label in ((left, True, "f' < 0 before pi/2"),
                                 (right, False, "f' > 0 after pi/2")):
        step = (dom.hi - dom.lo) / pieces
        for k in range(pieces):
            a = dom.lo + k * step
            b = dom.hi if k == pieces - 1 else dom.lo + (k + 1) * step
            d = schwarz_profile_derivative(Interval(a, b))
            ok = d.hi < 0.0 if want_neg else d.lo > 0.0
            if not ok:
                raise CertificationFailed(
                    f"{label} failed on [{a}, {b}]: {d!r}", checks)
    return ThresholdReport(tuple(checks), pieces)


def certify_distance_bounds() -> ThresholdReport:
    """Certify the two distance-pruning inequalities exactly:

        8 * 6.5^3 / 3.4^2 > 188   and   8 * 17^3 / 10^2 > 344.

    Checked both in exact rational arithmetic and as interval enclosures."""
    claims = [
        ("8*6.5^3/3.4^2 > 188",
         Fraction(8) * Fraction(13, 2) ** 3 / Fraction(17, 5) ** 2,
         (8, (13, 2), (17, 5)), 188),
        ("8*17^3/10^2 > 344",
         Fraction(8) * Fraction(17) ** 3 / Fraction(10) ** 2,
         (8, (17, 1), (10, 1)), 344),
    ]
    checks = []
    for label, exact, (c, (an, ad), (bn, bd)), thr in claims:
        if not exact > thr:
            raise CertificationFailed(f"{label} failed exactly: {exact}", checks)
        enc = idiv(
            imul(Interval(float(c)), ipow(_rational_interval(an, ad), 3)),
            ipow(_rational_interval(bn, bd), 2),
        )
        if not (enc.lo > thr and enc.contains(float(exact))):
            raise CertificationFailed(f"{label} interval check failed: {enc!r}", checks)
        checks.append(ThresholdCheck(label, enc, float(thr), True))
    return ThresholdReport(tuple(checks), 0)


# ---------------------------------------------------------------------------
# quasi-random feasible sampling (soundness spot checks)
# ---------------------------------------------------------------------------


def _halton(n: int, skip: int = 0) -> np.ndarray:
    """First n points (after skip) of the 5-D Halton sequence."""
    primes = (2, 3, 5, 7, 11)
    idx = np.arange(skip + 1, skip + n + 1, dtype=np.int64)
    out = np.empty((n, 5))
    for d, p in enumerate(primes):
        i = idx.copy()
        r = np.zeros(n)
        f = 1.0 / p
        while i.max() > 0:
            r += f * (i % p)
            i //= p
            f /= p
        out[:, d] = r
    return out


def quasirandom_feasible(n: int, area_min: float = 0.411,
                         coord_max: float = 6.5) -> np.ndarray:
    """n quasi-random points satisfying all family constraints, as an
    (n, 5) array ordered by Halton index (deterministic)."""
    got = []
    total = 0
    skip = 0
    while total < n:
        m = max(4 * (n - total), 1 << 14)
        pts = _halton(m, skip) * coord_max
        skip += m
        x1, x2, x3, y1, y2 = pts.T
        keep = (
            (x1 <= x2)
            & (x2 <= x3)
            & (x2 * y1 - x1 * y2 >= 0.0)
            & ((x3 - x1) * y2 - (x3 - x2) * y1 >= 0.0)
            & (x2 * y1 - x1 * y2 + x3 * y2 >= area_min)
        )
        sel = pts[keep]
        got.append(sel)
        total += len(sel)
    return np.concatenate(got)[:n]
