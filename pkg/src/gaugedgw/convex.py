"""Exact convex geometry over the rationals.

Half-space descriptions of point hulls (facets plus affine-hull equalities),
membership and relative-interior tests, and metric-closest points, all in
exact arithmetic.  Dimensions one and two get direct cross-product paths (the
common case here, and fast even for large exhaustive test families); higher
dimensions fall back to Fraction Gaussian elimination.  Nothing in this module
ever touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import List, Optional, Sequence, Tuple

Vector = Tuple[Fraction, ...]
HalfSpace = Tuple[tuple, object]  # (integer normal, rational offset)


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def primitive(vec) -> tuple:
    """Scale a non-zero rational vector to coprime integers, same direction."""
    if all(type(x) is int for x in vec):
        ints = list(vec)
    else:
        fracs = [Fraction(x) for x in vec]
        den = 1
        for f in fracs:
            den = den * f.denominator // gcd(den, f.denominator)
        ints = [int(f * den) for f in fracs]
    g = 0
    for n in ints:
        g = gcd(g, abs(n))
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(n // g for n in ints)


# -- exact linear algebra ----------------------------------------------------


def _echelon(rows: List[List[Fraction]]):
    """Row-reduce in place; returns list of pivot column indices."""
    pivots = []
    row = 0
    width = len(rows[0]) if rows else 0
    for col in range(width):
        pivot = None
        for i in range(row, len(rows)):
            if rows[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[row], rows[pivot] = rows[pivot], rows[row]
        inv = Fraction(1) / rows[row][col]
        rows[row] = [x * inv for x in rows[row]]
        for i in range(len(rows)):
            if i != row and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[row])]
        pivots.append(col)
        row += 1
        if row == len(rows):
            break
    return pivots


def rank_rows(rows: Sequence[Sequence]) -> int:
    work = [[Fraction(x) for x in row] for row in rows]
    if not work:
        return 0
    return len(_echelon(work))


def solve_linear(rows: Sequence[Sequence], rhs: Sequence) -> Optional[List[Fraction]]:
    """One exact solution of A x = b, or None if inconsistent."""
    if not rows:
        return [] if all(Fraction(v) == 0 for v in rhs) else None
    width = len(rows[0])
    work = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    pivots = []
    row = 0
    for col in range(width):
        pivot = None
        for i in range(row, len(work)):
            if work[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        work[row], work[pivot] = work[pivot], work[row]
        inv = Fraction(1) / work[row][col]
        work[row] = [x * inv for x in work[row]]
        for i in range(len(work)):
            if i != row and work[i][col] != 0:
                factor = work[i][col]
                work[i] = [x - factor * y for x, y in zip(work[i], work[row])]
        pivots.append(col)
        row += 1
        if row == len(work):
            break
    for i in range(row, len(work)):
        if work[i][width] != 0:
            return None
    solution = [Fraction(0)] * width
    for r, col in enumerate(pivots):
        solution[col] = work[r][width]
    return solution


def nullspace_rows(rows: Sequence[Sequence], width: int) -> List[Vector]:
    """Deterministic basis of {x : A x = 0} via free variables of the RREF."""
    work = [[Fraction(x) for x in row] for row in rows]
    pivots = _echelon(work) if work else []
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * width
        vec[f] = Fraction(1)
        for r, col in enumerate(pivots):
            vec[col] = -work[r][f]
        basis.append(tuple(vec))
    return basis


def invert_matrix(rows: Sequence[Sequence]) -> List[List[Fraction]]:
    n = len(rows)
    work = [
        [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(rows)
    ]
    pivots = _echelon(work)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in work]


# -- hull descriptions -------------------------------------------------------


@dataclass(frozen=True)
class HullDescription:
    """H-description of conv(points): equalities cut the affine hull, facets
    bound the hull inside it.  Normals are primitive integer vectors."""

    ambient_dim: int
    affine_dim: int
    equalities: tuple
    facets: tuple
    base_point: tuple

    def contains(self, x) -> bool:
        return all(dot(n, x) == c for n, c in self.equalities) and all(
            dot(n, x) <= c for n, c in self.facets
        )

    def contains_relative_interior(self, x) -> bool:
        if not all(dot(n, x) == c for n, c in self.equalities):
            return False
        if self.affine_dim == 0:
            return tuple(x) == tuple(self.base_point)
        return all(dot(n, x) < c for n, c in self.facets)

    def candidate_normals(self) -> list:
        """Facet normals plus both signs of each affine-hull equality normal."""
        out = [n for n, _ in self.facets]
        for n, _ in self.equalities:
            out.append(n)
            out.append(tuple(-x for x in n))
        return out


def _hull_1d(points) -> HullDescription:
    values = [p[0] for p in points]
    lo, hi = min(values), max(values)
    if lo == hi:
        return HullDescription(1, 0, (((1,), lo),), (), (lo,))
    return HullDescription(1, 1, (), (((1,), hi), ((-1,), -lo)), (lo,))


def _cross(a, b):
    return a[0] * b[1] - a[1] * b[0]


def _hull_2d(points) -> HullDescription:
    pts = []
    seen = set()
    for p in points:
        t = (p[0], p[1])
        if t not in seen:
            seen.add(t)
            pts.append(t)
    p0 = pts[0]
    direction = None
    for p in pts[1:]:
        d = vsub(p, p0)
        if d != (0, 0):
            direction = d
            break
    if direction is None:
        eqs = (((1, 0), p0[0]), ((0, 1), p0[1]))
        return HullDescription(2, 0, eqs, (), p0)
    collinear = all(_cross(direction, vsub(p, p0)) == 0 for p in pts)
    if collinear:
        n = primitive((-direction[1], direction[0]))
        eqs = ((n, dot(n, p0)),)
        d = primitive(direction)
        values = [dot(d, p) for p in pts]
        facets = tuple(
            sorted([(d, max(values)), (tuple(-x for x in d), -min(values))])
        )
        return HullDescription(2, 1, eqs, facets, p0)
    facets = set()
    for i, j in combinations(range(len(pts)), 2):
        edge = vsub(pts[j], pts[i])
        for n in (
            (-edge[1], edge[0]),
            (edge[1], -edge[0]),
        ):
            if all(dot(n, vsub(p, pts[i])) <= 0 for p in pts):
                n_prim = primitive(n)
                facets.add((n_prim, dot(n_prim, pts[i])))
    return HullDescription(2, 2, (), tuple(sorted(facets)), p0)


def _hull_general(points) -> HullDescription:
    pts = [tuple(Fraction(x) for x in p) for p in points]
    r = len(pts[0])
    p0 = pts[0]
    dirs: list = []
    for p in pts[1:]:
        d = vsub(p, p0)
        if rank_rows(dirs + [d]) > len(dirs):
            dirs.append(d)
    m = len(dirs)
    equalities = []
    for n in nullspace_rows(dirs, r) if m < r else []:
        n_prim = primitive(n)
        equalities.append((n_prim, dot(n_prim, p0)))
    equalities.sort()
    if m == 0:
        return HullDescription(r, 0, tuple(equalities), (), p0)
    # Affine coordinates: s(x) = M (x - p0) with M = (D D^T)^{-1} D.
    ddt = [[dot(a, b) for b in dirs] for a in dirs]
    inv = invert_matrix(ddt)
    M = [
        tuple(sum(inv[i][k] * dirs[k][j] for k in range(m)) for j in range(r))
        for i in range(m)
    ]
    coords = [tuple(dot(row, vsub(p, p0)) for row in M) for p in pts]
    facets = set()
    if m == 1:
        values = [c[0] for c in coords]
        for sign, bound in ((1, max(values)), (-1, -min(values))):
            n_amb = primitive(tuple(sign * row for row in M[0]))
            anchor = pts[values.index(bound if sign == 1 else -bound)]
            facets.add((n_amb, dot(n_amb, anchor)))
    else:
        for subset in combinations(range(len(coords)), m):
            base = coords[subset[0]]
            diffs = [vsub(coords[i], base) for i in subset[1:]]
            if rank_rows(diffs) != m - 1:
                continue
            normals = nullspace_rows(diffs, m)
            if len(normals) != 1:
                continue
            n = normals[0]
            values = [dot(n, c) for c in coords]
            level = dot(n, base)
            if all(v <= level for v in values):
                oriented = n
            elif all(v >= level for v in values):
                oriented = tuple(-x for x in n)
            else:
                continue
            n_amb_raw = tuple(
                sum(oriented[i] * M[i][j] for i in range(m)) for j in range(r)
            )
            n_amb = primitive(n_amb_raw)
            anchor = pts[subset[0]]
            facets.add((n_amb, dot(n_amb, anchor)))
    return HullDescription(r, m, tuple(equalities), tuple(sorted(facets)), p0)


def hull_description(points: Sequence[Sequence]) -> HullDescription:
    """Exact H-description of the convex hull of finitely many points."""
    if not points:
        raise ValueError("need at least one point")
    r = len(points[0])
    if any(len(p) != r for p in points):
        raise ValueError("points have mixed dimensions")
    if r == 1:
        return _hull_1d(points)
    if r == 2:
        return _hull_2d(points)
    return _hull_general(points)


def affine_dimension(points: Sequence[Sequence]) -> int:
    p0 = points[0]
    return rank_rows([vsub(p, p0) for p in points[1:]])


# -- metric-closest point ----------------------------------------------------


def closest_point_to_origin(
    points: Sequence[Sequence], gram: Sequence[Sequence]
) -> Vector:
    """Closest point of conv(points) to the origin in the metric ``gram``.

    Solved exactly by projecting the origin onto the affine hull of every
    affinely independent subset of at most dim+1 points and keeping the best
    projection with non-negative barycentric coordinates (Caratheodory
    guarantees the true minimizer appears this way).
    """
    pts = []
    seen = set()
    for p in points:
        t = tuple(Fraction(x) for x in p)
        if t not in seen:
            seen.add(t)
            pts.append(t)
    r = len(pts[0])
    G = [[Fraction(x) for x in row] for row in gram]

    def gdot(a, b):
        return sum(a[i] * sum(G[i][j] * b[j] for j in range(r)) for i in range(r))

    best_norm = None
    best_vec = None
    max_size = min(len(pts), r + 1)
    for size in range(1, max_size + 1):
        for subset in combinations(range(len(pts)), size):
            p0 = pts[subset[0]]
            dirs = [vsub(pts[i], p0) for i in subset[1:]]
            if dirs and rank_rows(dirs) < len(dirs):
                continue
            if dirs:
                A = [[gdot(a, b) for b in dirs] for a in dirs]
                b = [-gdot(a, p0) for a in dirs]
                s = solve_linear(A, b)
                if s is None:
                    continue
                if any(x < 0 for x in s) or sum(s) > 1:
                    continue
                v = tuple(
                    p0[j] + sum(s[i] * dirs[i][j] for i in range(len(dirs)))
                    for j in range(r)
                )
            else:
                v = p0
            norm = gdot(v, v)
            if best_norm is None or norm < best_norm:
                best_norm = norm
                best_vec = v
    return best_vec
