"""Small exact linear algebra over the rationals and the integers.

Vectors are tuples of Fractions (or ints), matrices are tuples of row
tuples.  Everything here is sized for ambient dimension at most four, so
plain Gaussian elimination with exact Fractions is the right tool; the
integer side provides a column-style Hermite normal form for lattice
basis extraction.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

Vec = tuple[Fraction, ...]
Mat = tuple[Vec, ...]


def vec(entries: Sequence) -> Vec:
    return tuple(Fraction(e) for e in entries)


def mat(rows: Sequence[Sequence]) -> Mat:
    return tuple(vec(r) for r in rows)


def dot(u: Sequence, v: Sequence) -> Fraction:
    if len(u) != len(v):
        raise ValueError("dimension mismatch")
    return sum((Fraction(a) * Fraction(b) for a, b in zip(u, v)), Fraction(0))


def norm_sq(v: Sequence) -> Fraction:
    return dot(v, v)


def vec_add(u: Sequence, v: Sequence) -> Vec:
    return tuple(Fraction(a) + Fraction(b) for a, b in zip(u, v))

def vec_sub(u: Sequence, v: Sequence) -> Vec:
    return tuple(Fraction(a) - Fraction(b) for a, b in zip(u, v))


def vec_scale(s, v: Sequence) -> Vec:
    s = Fraction(s)
    return tuple(s * Fraction(c) for c in v)


def transpose(m: Sequence[Sequence]) -> Mat:
    return tuple(zip(*[vec(r) for r in m])) if m else ()


def columns(m: Sequence[Sequence]) -> list[Vec]:
    return [vec(c) for c in zip(*m)] if m else []


def from_columns(cols: Sequence[Sequence]) -> Mat:
    return transpose([vec(c) for c in cols])


def identity(n: int) -> Mat:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Mat:
    bt = columns(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def mat_vec(a: Sequence[Sequence], v: Sequence) -> Vec:
    return tuple(dot(row, v) for row in a)


def gram(cols: Sequence[Sequence]) -> Mat:
    return tuple(tuple(dot(u, v) for v in cols) for u in cols)


def det(m: Sequence[Sequence]) -> Fraction:
    """Exact determinant by fraction Gaussian elimination."""
    a = [list(vec(r)) for r in m]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("determinant of non-square matrix")
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            result = -result
        result *= a[col][col]
        inv = Fraction(1) / a[col][col]
        for r in range(col + 1, n):
            if a[r][col] != 0:
                f = a[r][col] * inv
                for c in range(col, n):
                    a[r][c] -= f * a[col][c]
    return result


def rref(m: Sequence[Sequence]) -> tuple[Mat, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    a = [list(vec(r)) for r in m]
    rows = len(a)
    cols_n = len(a[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols_n):
        if r == rows:
            break
        pivot = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = Fraction(1) / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return tuple(tuple(row) for row in a), pivots


def rank(m: Sequence[Sequence]) -> int:
    return len(rref(m)[1])


def solve(a: Sequence[Sequence], b: Sequence) -> Vec | None:
    """One exact solution of A x = b, or None when inconsistent.

    Free variables (if any) are set to zero.
    """
    rows = [list(vec(r)) + [Fraction(b[i])] for i, r in enumerate(a)]
    red, pivots = rref(rows)
    n = len(a[0]) if a else 0
    x = [Fraction(0)] * n
    for r, c in enumerate(pivots):
        if c == n:
            return None
        x[c] = red[r][n]
    for r in range(len(pivots), len(red)):
        if red[r][n] != 0:
            return None
    return tuple(x)


def inverse(m: Sequence[Sequence]) -> Mat:
    n = len(m)
    aug = [list(vec(r)) + list(identity(n)[i]) for i, r in enumerate(m)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("singular matrix")
    return tuple(row[n:] for row in red)


def nullspace(m: Sequence[Sequence]) -> list[Vec]:
    """Basis of the rational kernel of m (acting on column vectors)."""
    red, pivots = rref(m)
    n = len(m[0]) if m else 0
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -red[r][f]
        basis.append(tuple(v))
    return basis


def orthogonal_projection(u_cols: Sequence[Sequence]) -> Mat:
    """Projection matrix U (U^T U)^(-1) U^T onto the span of the columns."""
    cols = [vec(c) for c in u_cols]
    g = gram(cols)
    if det(g) == 0:
        raise ValueError("dependent columns")
    u = from_columns(cols)
    return mat_mul(mat_mul(u, inverse(g)), transpose(u))


def dual_basis(cols: Sequence[Sequence]) -> list[Vec]:
    """Columns of B (B^T B)^(-1): the dual basis of the lattice with basis B,
    inside span(B)."""
    b = from_columns([vec(c) for c in cols])
    g = gram([vec(c) for c in cols])
    return columns(mat_mul(b, inverse(g)))


# ---------------------------------------------------------------------------
# integer lattice algorithms

def hnf_column_basis(int_cols: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Basis of the integer column lattice, by column-style Hermite reduction.

    Accepts any number of generator columns; returns r independent columns
    generating the same lattice (r = rank).
    """
    a = [list(map(int, c)) for c in int_cols]
    if not a:
        return []
    d = len(a[0])
    n = len(a)
    row = 0
    col = 0
    while row < d and col < n:
        live = [j for j in range(col, n) if a[j][row] != 0]
        if not live:
            row += 1
            continue
        while True:
            live.sort(key=lambda j: abs(a[j][row]))
            p = live[0]
            done = True
            for j in live[1:]:
                q = a[j][row] // a[p][row]
                if q:
                    for i in range(d):
                        a[j][i] -= q * a[p][i]
                    done = False
            live = [j for j in live if a[j][row] != 0]
            if done or len(live) <= 1:
                break
        p = live[0]
        a[col], a[p] = a[p], a[col]
        if a[col][row] < 0:
            a[col] = [-x for x in a[col]]
        col += 1
        row += 1
    return [tuple(a[j]) for j in range(col)]


def integer_kernel(m: Sequence[Sequence]) -> list[tuple[int, ...]]:
    """Basis of {x in Z^n : m x = 0} for a rational matrix m."""
    rational = nullspace(m)
    if not rational:
        return []
    n = len(rational[0])
    # Integer points of the rational kernel: scale each rational basis
    # vector to integers, then saturate by intersecting with Z^n via HNF of
    # the dual description.  For the sizes used here (n <= 4, rank <= 3) the
    # saturation is done by solving in the rational span.
    scaled = []
    for v in rational:
        den = math.lcm(*(c.denominator for c in v))
        scaled.append(tuple(int(c * den) for c in v))
    # The lattice generated by `scaled` may be a finite-index sublattice of
    # the full integer kernel; saturate by checking all coordinates of the
    # RREF-parametrized solution.  Parametrize integer kernel directly: x is
    # in ker(m) iff x = sum t_i * rational[i]; integrality of x is a linear
    # congruence condition on the t_i.  Use HNF on the projection instead:
    # the integer kernel equals Z^n intersected with the span, computed via
    # the kernel of the RREF pivot relations over Z.
    red, pivots = rref(m)
    rel_rows = []
    den_lcm = 1
    for r in range(len(pivots)):
        row = red[r]
        den_lcm = math.lcm(den_lcm, *(c.denominator for c in row))
    for r in range(len(pivots)):
        rel_rows.append(tuple(int(c * den_lcm) for c in red[r]))
    return _integer_kernel_of_integer_matrix(rel_rows, n)


def _integer_kernel_of_integer_matrix(rows: list[tuple[int, ...]], n: int) -> list[tuple[int, ...]]:
    """Kernel over Z of an integer matrix via column HNF with transform."""
    m = len(rows)
    # Column operations on A while mirroring them on an identity matrix U:
    # when a column of A becomes zero, the matching column of U is a kernel
    # vector; the collected columns form a basis.
    a = [[rows[i][j] for i in range(m)] for j in range(n)]  # columns of A
    u = [[int(i == j) for i in range(n)] for j in range(n)]  # columns of I
    row = 0
    col = 0
    while row < m and col < n:
        live = [j for j in range(col, n) if a[j][row] != 0]
        if not live:
            row += 1
            continue
        while True:
            live.sort(key=lambda j: abs(a[j][row]))
            p = live[0]
            done = True
            for j in live[1:]:
                q = a[j][row] // a[p][row]
                if q:
                    for i in range(m):
                        a[j][i] -= q * a[p][i]
                    for i in range(n):
                        u[j][i] -= q * u[p][i]
                    done = False
            live = [j for j in live if a[j][row] != 0]
            if done or len(live) <= 1:
                break
        p = live[0]
        a[col], a[p] = a[p], a[col]
        u[col], u[p] = u[p], u[col]
        col += 1
        row += 1
    return [tuple(u[j]) for j in range(col, n)]


def complete_primitive_2d(c: Sequence[int]) -> tuple[tuple[int, int], tuple[int, int]]:
    """Unimodular basis (c, u) of Z^2 extending the primitive vector c."""
    a, b = int(c[0]), int(c[1])
    g, s, t = _extended_gcd(a, b)
    if g != 1:
        raise ValueError("vector is not primitive")
    # det((a, -t), (b, s)) = a*s + b*t = 1
    return (a, b), (-t, s)


def _extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t
