"""Rational polytopes: representations, faces to codimension two, volumes.

Polytopes are bounded, full-dimensional, with rational vertex data, in
ambient dimension at most four.  Construction from either vertices or
inequalities funnels through the same canonicalization: brute-force
supporting-hyperplane discovery at desk scale, primitive integer
normals, lexicographically sorted vertices.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from eak import linalg
from eak.exactval import format_rational, parse_rational, primitive_integer_vector
from eak.lattice import intersection_with_integer_lattice
from eak.linalg import Vec

MAX_DIM = 4


@dataclass(frozen=True)
class Face:
    """A face of a polytope, identified by its active inequalities."""

    tight_set: frozenset[int]
    vertex_ids: tuple[int, ...]
    dim: int
    codim: int


def _affine_rank(points: Sequence[Vec]) -> int:
    if len(points) < 2:
        return 0
    base = points[0]
    return linalg.rank([linalg.vec_sub(p, base) for p in points[1:]])


def hull_facets(points: Sequence[Vec], dim: int) -> list[tuple[tuple[int, ...], Fraction]]:
    """All supporting hyperplanes (primitive a, b) of a full-dimensional
    point set, with the convention <a, x> <= b inside."""
    facets: dict[tuple, tuple[tuple[int, ...], Fraction]] = {}
    for subset in itertools.combinations(range(len(points)), dim):
        pts = [points[i] for i in subset]
        diffs = [linalg.vec_sub(p, pts[0]) for p in pts[1:]]
        if linalg.rank(diffs) != dim - 1:
            continue
        normals = linalg.nullspace(diffs) if diffs else [
            tuple(Fraction(int(i == j)) for i in range(dim)) for j in range(dim)
        ]
        if len(normals) != 1:
            continue
        a = primitive_integer_vector(normals[0])
        b = linalg.dot(a, pts[0])
        side = {(-1 if linalg.dot(a, p) < b else (1 if linalg.dot(a, p) > b else 0))
                for p in points}
        if 1 in side and -1 in side:
            continue
        if 1 in side:
            a = tuple(-c for c in a)
            b = -b
        facets[(a, b)] = (a, b)
    return list(facets.values())


class Polytope:
    """Bounded, full-dimensional rational polytope in dimension <= 4."""

    def __init__(self, dim: int, vertices: Sequence[Sequence]):
        if not 1 <= dim <= MAX_DIM:
            raise ValueError(f"dimension {dim} outside [1, {MAX_DIM}]")
        pts = sorted({linalg.vec(v) for v in vertices})
        if any(len(p) != dim for p in pts):
            raise ValueError("vertex dimension mismatch")
        if _affine_rank(pts) != dim:
            raise ValueError("polytope is not full-dimensional")
        planes = hull_facets(pts, dim)
        # keep extreme points only: a point is a vertex iff its tight
        # normals span the ambient space
        verts = []
        for p in pts:
            tight = [a for a, b in planes if linalg.dot(a, p) == b]
            if len(tight) >= dim and linalg.rank(tight) == dim:
                verts.append(p)
        self.dim = dim
        self.vertices: tuple[Vec, ...] = tuple(sorted(verts))
        self.inequalities: tuple[tuple[tuple[int, ...], Fraction], ...] = tuple(
            sorted(planes)
        )
        self._facets: list[Face] | None = None
        self._codim2: list[Face] | None = None

    # -- constructors -----------------------------------------------------

    @staticmethod
    def from_vertices(dim: int, vertices: Sequence[Sequence]) -> "Polytope":
        return Polytope(dim, vertices)

    @staticmethod
    def from_inequalities(dim: int, rows: Sequence[tuple[Sequence[int], object]]) -> "Polytope":
        if not 1 <= dim <= MAX_DIM:
            raise ValueError(f"dimension {dim} outside [1, {MAX_DIM}]")
        norm_rows = []
        for a, b in rows:
            a_prim = primitive_integer_vector(a)
            scale = Fraction(next(x for x in a if x != 0), next(x for x in a_prim if x != 0))
            norm_rows.append((a_prim, Fraction(b) / scale))
        if linalg.rank([r[0] for r in norm_rows]) != dim:
            raise ValueError("unbounded polyhedron (normals do not span)")
        _check_bounded(norm_rows, dim)
        verts = _enumerate_vertices(norm_rows, dim)
        if not verts:
            raise ValueError("empty polytope")
        return Polytope(dim, verts)

    @staticmethod
    def from_json(data: dict) -> "Polytope":
        if "dim" not in data:
            raise ValueError("missing 'dim'")
        dim = int(data["dim"])
        has_v = "vertices" in data
        has_h = "inequalities" in data
        if has_v == has_h:
            raise ValueError("exactly one of 'vertices' or 'inequalities' required")
        if has_v:
            verts = [[_parse_rat(c) for c in v] for v in data["vertices"]]
            return Polytope.from_vertices(dim, verts)
        rows = []
        for row in data["inequalities"]:
            rows.append(([int(c) for c in row["a"]], _parse_rat(row["b"])))
        return Polytope.from_inequalities(dim, rows)

    @staticmethod
    def load(path: str) -> "Polytope":
        with open(path) as f:
            return Polytope.from_json(json.load(f))

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "vertices": [[format_rational(c) for c in v] for v in self.vertices],
        }

    # -- faces ------------------------------------------------------------

    def facets(self) -> list[Face]:
        if self._facets is None:
            faces = []
            for i, (a, b) in enumerate(self.inequalities):
                ids = tuple(
                    j for j, v in enumerate(self.vertices) if linalg.dot(a, v) == b
                )
                faces.append(Face(frozenset([i]), ids, self.dim - 1, 1))
            self._facets = faces
        return self._facets

    def codim2_faces(self) -> list[Face]:
        if self._codim2 is None:
            found: dict[frozenset[int], Face] = {}
            facets = self.facets()
            for i, j in itertools.combinations(range(len(facets)), 2):
                common = tuple(sorted(set(facets[i].vertex_ids) & set(facets[j].vertex_ids)))
                if not common:
                    continue
                pts = [self.vertices[k] for k in common]
                if _affine_rank(pts) != self.dim - 2:
                    continue
                key = frozenset(common)
                if key not in found:
                    tight = frozenset(
                        idx
                        for idx, (a, b) in enumerate(self.inequalities)
                        if all(linalg.dot(a, p) == b for p in pts)
                    )
                    found[key] = Face(tight, common, self.dim - 2, 2)
            self._codim2 = sorted(found.values(), key=lambda f: f.vertex_ids)
        return self._codim2

    def faces_of_codim(self, c: int) -> list[Face]:
        if c == 1:
            return self.facets()
        if c == 2:
            return self.codim2_faces()
        raise ValueError("only codimensions 1 and 2 are enumerated")

    def face_vertices(self, face: Face) -> list[Vec]:
        return [self.vertices[i] for i in face.vertex_ids]

    def incident_facets(self, face: Face) -> tuple[int, int]:
        """The exactly-two facets containing a codim-2 face."""
        if face.codim != 2:
            raise ValueError("codim-2 face required")
        pair = tuple(sorted(face.tight_set))
        if len(pair) != 2:
            raise ValueError(f"codim-2 face lies in {len(pair)} facets, expected 2")
        return pair  # type: ignore[return-value]

    # -- metric data ------------------------------------------------------

    def contains(self, x: Sequence, t=1) -> bool:
        """Exact membership of x in the dilate t*P."""
        t = Fraction(t)
        return all(linalg.dot(a, x) <= b * t for a, b in self.inequalities)

    def volume(self) -> Fraction:
        return convex_volume(list(self.vertices), self.dim)

    def denominator(self) -> int:
        return math.lcm(*(c.denominator for v in self.vertices for c in v))

    def relative_volume(self, face: Face) -> Fraction:
        """Face volume normalized to the induced integer lattice."""
        if face.dim < 1:
            raise ValueError("relative volume of a vertex is 1 by convention; not computed here")
        pts = self.face_vertices(face)
        base = pts[0]
        dirs = [linalg.vec_sub(p, base) for p in pts[1:]]
        lat = intersection_with_integer_lattice(dirs)
        coords = [tuple(Fraction(0) for _ in range(lat.rank))] + [
            lat.coordinates(d) for d in dirs
        ]
        return convex_volume(coords, face.dim)

    def __repr__(self) -> str:
        return f"Polytope(dim={self.dim}, vertices={len(self.vertices)})"


# ---------------------------------------------------------------------------
# construction helpers

def _check_bounded(rows: list[tuple[tuple[int, ...], Fraction]], dim: int) -> None:
    """Reject recession rays: a nonzero u with <a_i, u> <= 0 for all i."""
    normals = [r[0] for r in rows]
    for subset in itertools.combinations(range(len(normals)), dim - 1):
        sel = [normals[i] for i in subset]
        if dim > 1 and linalg.rank(sel) != dim - 1:
            continue
        kernel = linalg.nullspace(sel) if sel else [
            tuple(Fraction(int(i == j)) for i in range(dim)) for j in range(dim)
        ]
        for u in kernel:
            for cand in (u, tuple(-c for c in u)):
                if all(linalg.dot(a, cand) <= 0 for a in normals):
                    raise ValueError("unbounded polyhedron (recession ray)")


def _enumerate_vertices(rows, dim: int) -> list[Vec]:
    verts = set()
    for subset in itertools.combinations(range(len(rows)), dim):
        a_rows = [rows[i][0] for i in subset]
        if linalg.rank(a_rows) != dim:
            continue
        b = [rows[i][1] for i in subset]
        x = linalg.solve(a_rows, b)
        if x is None:
            continue
        if all(linalg.dot(a, x) <= bb for a, bb in rows):
            verts.add(x)
    return sorted(verts)


def _parse_rat(value) -> Fraction:
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, int):
        return Fraction(value)
    raise ValueError(f"rationals must be strings 'p/q' or integers, got {value!r}")


# ---------------------------------------------------------------------------
# exact volume via recursive boundary triangulation

def triangulate_convex(points: Sequence[Vec], dim: int) -> list[tuple[int, ...]]:
    """Triangulation of the hull of full-dimensional points: index tuples
    of (dim+1)-simplices, fanned from the first vertex."""
    points = [linalg.vec(p) for p in points]
    if dim == 0:
        return [(0,)]
    if dim == 1:
        lo = min(range(len(points)), key=lambda i: points[i])
        hi = max(range(len(points)), key=lambda i: points[i])
        return [(lo, hi)]
    apex = min(range(len(points)), key=lambda i: points[i])
    simplices = []
    for a, b in hull_facets(points, dim):
        if linalg.dot(a, points[apex]) == b:
            continue
        face_ids = [i for i, p in enumerate(points) if linalg.dot(a, p) == b]
        face_pts = [points[i] for i in face_ids]
        base = face_pts[0]
        span = [linalg.vec_sub(p, base) for p in face_pts[1:]]
        basis = _subspace_basis(span)
        local = [_coords_in_basis(basis, linalg.vec_sub(p, base)) for p in face_pts]
        for sub in triangulate_convex(local, dim - 1):
            simplices.append(tuple(sorted((apex, *(face_ids[i] for i in sub)))))
    return simplices


def _subspace_basis(span: list[Vec]) -> list[Vec]:
    basis: list[Vec] = []
    for v in span:
        if linalg.rank(basis + [v]) > len(basis):
            basis.append(v)
    return basis


def _coords_in_basis(basis: list[Vec], v: Vec) -> Vec:
    g = linalg.gram(basis)
    rhs = tuple(linalg.dot(b, v) for b in basis)
    coords = linalg.mat_vec(linalg.inverse(g), rhs)
    return coords


def convex_volume(points: Sequence[Vec], dim: int) -> Fraction:
    """Exact Euclidean dim-volume of the convex hull of the points,
    measured in their own coordinates."""
    points = [linalg.vec(p) for p in points]
    total = Fraction(0)
    fact = math.factorial(dim)
    for simplex in triangulate_convex(points, dim):
        base = points[simplex[0]]
        edges = [linalg.vec_sub(points[i], base) for i in simplex[1:]]
        total += abs(linalg.det(edges)) / fact
    return total
