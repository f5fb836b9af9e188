"""Polytope file formats.

JSON: ``{"vertices": [[x, y, z], ...]}``.  OFF: standard header; only the
vertex block is read.  Either way the convex hull is recomputed on load, so
files may list redundant points.
"""

from __future__ import annotations

import json

from .errors import DegenerateInput
from .geometry import Polytope3, convex_hull


def load_polytope(path) -> Polytope3:
    text = open(path).read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        doc = json.loads(text)
        if "vertices" not in doc:
            raise DegenerateInput(f"{path}: missing 'vertices' field")
        return convex_hull([tuple(map(float, v)) for v in doc["vertices"]])
    return _load_off(text, path)


def _load_off(text: str, path) -> Polytope3:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or not lines[0].upper().startswith("OFF"):
        raise DegenerateInput(f"{path}: not a JSON polytope or OFF file")
    head = lines[0][3:].split() or lines[1].split()
    body = lines[1:] if lines[0][3:].split() else lines[2:]
    nv = int(head[0])
    pts = []
    for ln in body[:nv]:
        x, y, z = map(float, ln.split()[:3])
        pts.append((x, y, z))
    if len(pts) != nv:
        raise DegenerateInput(f"{path}: expected {nv} vertices, found {len(pts)}")
    return convex_hull(pts)


def save_polytope(path, P: Polytope3) -> None:
    doc = {"vertices": [[v.x, v.y, v.z] for v in P.vertices]}
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")
