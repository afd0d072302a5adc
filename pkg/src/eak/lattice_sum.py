"""Regularized lattice sums over linear-form products.

Three evaluators for the same family of sums: an exact finite form that
enumerates dual-lattice points in a fundamental parallelepiped with
solid-angle weights (rank <= 2), an exact residue form without angle
weights (valid when every exponent is at least two), and a truncated
Gaussian-damped series used as a numeric convergence oracle.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from eak import linalg
from eak.bernoulli import bernoulli_poly, frac_part, periodized
from eak.exactval import ExactValue, angle_of_cos_ratio
from eak.lattice import EmbeddedLattice
from eak.linalg import Vec


@dataclass(frozen=True)
class LatticeSumProblem:
    lattice: EmbeddedLattice
    w_columns: tuple[Vec, ...]  # independent columns in the dual lattice
    exponents: tuple[int, ...]
    x: Vec

    def __post_init__(self):
        w = tuple(linalg.vec(c) for c in self.w_columns)
        e = tuple(int(v) for v in self.exponents)
        x = linalg.vec(self.x)
        if len(w) != self.lattice.rank or len(e) != len(w):
            raise ValueError("need one linear form and exponent per lattice rank")
        if any(v < 1 for v in e):
            raise ValueError("exponents must be positive")
        if linalg.det(linalg.gram(list(w))) == 0:
            raise ValueError("dependent linear forms")
        dual = self.lattice.dual()
        for c in w:
            if not dual.contains(c):
                raise ValueError("linear-form columns must lie in the dual lattice")
        object.__setattr__(self, "w_columns", w)
        object.__setattr__(self, "exponents", e)
        object.__setattr__(self, "x", x)


def _pairing_matrix(p: LatticeSumProblem) -> list[list[int]]:
    """Integer matrix of pairings <w_j, b_i> with the lattice basis."""
    return [
        [int(linalg.dot(w, b)) for w in p.w_columns] for b in p.lattice.basis
    ]


def lattice_sum_finite(p: LatticeSumProblem) -> ExactValue:
    """Exact finite form: Bernoulli-weighted, solid-angle-weighted sum over
    dual-lattice points of the parallelepiped spanned by the linear forms."""
    k = p.lattice.rank
    if k > 2:
        raise ValueError("numeric mode required for rank above two")
    m = _pairing_matrix(p)
    det_m = abs(linalg.det(m))
    if det_m == 0:
        raise ValueError("degenerate pairing")
    dual = p.lattice.dual()
    # project x onto span(lattice): pairings with W see only that component
    w_mat = linalg.from_columns(list(p.w_columns))
    g_w = linalg.gram(list(p.w_columns))
    g_w_inv = linalg.inverse(g_w)

    def w_coords(v: Vec) -> Vec:
        return linalg.mat_vec(g_w_inv, linalg.mat_vec(linalg.transpose(w_mat), v))

    xbar = _project_to_span(p.x, p.lattice)
    # enumerate dual points n = D m with W-coordinates of n - x in [0,1]^k
    corners = []
    for eps in itertools.product((0, 1), repeat=k):
        corner = xbar
        for j, e in enumerate(eps):
            if e:
                corner = linalg.vec_add(corner, p.w_columns[j])
        corners.append(dual.coordinates(corner))
    lo = [math.floor(min(c[j] for c in corners)) for j in range(k)]
    hi = [math.ceil(max(c[j] for c in corners)) for j in range(k)]
    total = ExactValue.of(0)
    for mm in itertools.product(*[range(lo[j], hi[j] + 1) for j in range(k)]):
        n = dual.from_coordinates(mm)
        y = w_coords(linalg.vec_sub(n, xbar))
        if any(c < 0 or c > 1 for c in y):
            continue
        weight = _parallelepiped_angle(p.w_columns, y)
        b_val = Fraction(1)
        for j, e in enumerate(p.exponents):
            b_val *= bernoulli_poly(e, y[j])
        total = total + weight * b_val
    sign = -1 if k % 2 else 1
    fact = math.prod(math.factorial(e) for e in p.exponents)
    return total * Fraction(sign, fact * det_m)


def _project_to_span(x: Vec, lattice: EmbeddedLattice) -> Vec:
    proj = linalg.orthogonal_projection(list(lattice.basis))
    return linalg.mat_vec(proj, x)


def _parallelepiped_angle(w_columns: Sequence[Vec], y: Vec) -> ExactValue:
    """Solid angle of the parallelepiped W[0,1]^k at the point with
    W-coordinates y in [0,1]^k."""
    on_boundary = [j for j, c in enumerate(y) if c == 0 or c == 1]
    if not on_boundary:
        return ExactValue.of(1)
    if len(on_boundary) == 1:
        return ExactValue.of(Fraction(1, 2))
    # corner of a rank-2 parallelepiped: angle between the inward edges
    d1 = w_columns[0] if y[0] == 0 else linalg.vec_scale(-1, w_columns[0])
    d2 = w_columns[1] if y[1] == 0 else linalg.vec_scale(-1, w_columns[1])
    angle = angle_of_cos_ratio(
        linalg.dot(d1, d2), linalg.norm_sq(d1) * linalg.norm_sq(d2)
    )
    return ExactValue.angle_turn(angle)


def gunnels_sczech(W: Sequence[Sequence[int]], e: Sequence[int], x: Sequence) -> Fraction:
    """Residue form over Z^d / W Z^d with periodized Bernoulli weights;
    requires every exponent at least two (absolute convergence)."""
    W = [tuple(int(c) for c in row) for row in W]
    e = [int(v) for v in e]
    x = linalg.vec(x)
    d = len(W)
    if any(v < 2 for v in e):
        raise ValueError("conditionally convergent; use lattice_sum_finite")
    det_w = linalg.det(W)
    if det_w == 0:
        raise ValueError("singular matrix")
    w_inv = linalg.inverse(W)
    x_coords = linalg.mat_vec(w_inv, x)
    # residues of Z^d mod W Z^d, canonicalized by frac(W^{-1} n)
    residues: set[tuple] = set()
    L = abs(int(det_w))
    for n in itertools.product(range(L), repeat=d):
        residues.add(tuple(frac_part(c) for c in linalg.mat_vec(w_inv, n)))
        if len(residues) == L:
            break
    if len(residues) != L:
        raise AssertionError("residue enumeration incomplete")
    total = Fraction(0)
    for res in residues:
        term = Fraction(1)
        for j in range(d):
            term *= periodized(e[j], res[j] - x_coords[j])
        total += term
    sign = -1 if d % 2 else 1
    fact = math.prod(math.factorial(v) for v in e)
    return Fraction(sign, fact * L) * total


def lattice_sum_series(p: LatticeSumProblem, epsilon: float, radius: int) -> float:
    """Truncated damped series: (2 pi i)^(-|e|) times the sum over lattice
    points xi with |xi| <= radius of exp(-2 pi i <x, xi>) divided by
    prod <w_j, xi>^{e_j}, damped by exp(-pi epsilon |xi|^2); zeros of the
    linear forms are skipped.  The real part is returned."""
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    k = p.lattice.rank
    basis = np.array([[float(c) for c in col] for col in p.lattice.basis]).T  # d x k
    w = np.array([[float(c) for c in col] for col in p.w_columns]).T  # d x k
    x = np.array([float(c) for c in p.x])
    # integer coefficient box big enough to cover |xi| <= radius
    gram = basis.T @ basis
    lengths = np.sqrt(np.diag(np.linalg.inv(gram)))  # dual basis lengths
    caps = np.ceil(radius * lengths).astype(int) + 1
    axes = [np.arange(-c, c + 1) for c in caps]
    mesh = np.stack([g.ravel() for g in np.meshgrid(*axes, indexing="ij")], axis=1)
    xi = mesh @ basis.T  # (N, d)
    norm_sq = np.sum(xi * xi, axis=1)
    keep = norm_sq <= radius * radius
    xi = xi[keep]
    norm_sq = norm_sq[keep]
    pairings = xi @ w  # (N, k)
    nonzero = np.all(np.abs(pairings) > 1e-12, axis=1)
    xi = xi[nonzero]
    norm_sq = norm_sq[nonzero]
    pairings = pairings[nonzero]
    denom = np.prod(pairings ** np.array(p.exponents), axis=1)
    phase = np.exp(-2j * np.pi * (xi @ x))
    terms = phase / denom * np.exp(-np.pi * epsilon * norm_sq)
    # deterministic reduction order: sort by |xi| then lexicographically
    order = np.lexsort(tuple(xi[:, j] for j in range(xi.shape[1] - 1, -1, -1)) + (norm_sq,))
    total = np.sum(terms[order]) / (2j * np.pi) ** sum(p.exponents)
    return float(total.real)


def series_extrapolated(p: LatticeSumProblem, epsilons: Sequence[float], radius: int) -> float:
    """Richardson-style extrapolation of the damped series as the damping
    vanishes: fit value(eps) ~ v0 + c*eps on the last two epsilons."""
    values = [lattice_sum_series(p, eps, radius) for eps in epsilons]
    if len(values) == 1:
        return values[0]
    e1, e2 = epsilons[-2], epsilons[-1]
    v1, v2 = values[-2], values[-1]
    return v2 + (v2 - v1) * e2 / (e1 - e2)
