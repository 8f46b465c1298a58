"""Generic PL maps K -> R^d and the r-fold intersection cocycle.

For a critical cell c = sigma_1 x ... x sigma_r (dimensions summing to
d(r-1)) the r-fold points of f are the zeros of

    Phi(x_1, ..., x_r) = (f x_2 - f x_1, ..., f x_r - f x_{r-1})

on the open cell. Phi is affine there, so a generic map has at most one
zero per cell; its sign is the sign of det(dPhi) in the product orientation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Mapping

import numpy as np

from . import exact
from .complex import SimplicialComplex
from .delprod import (
    Cell, DeletedProduct, act, all_perms, boundary, equivariance_sign, factor_dims,
)

GRID_BITS = 20
GRID_SCALE = 1 << 10
MAX_ATTEMPTS = 64

RationalVector = tuple[Fraction, ...]


class GenericityError(RuntimeError):
    """A map is not in general position with respect to a cell or vertex set."""


@dataclass(frozen=True)
class PLMap:
    images: Mapping[int, RationalVector]
    d: int

    def __post_init__(self):
        for v, y in self.images.items():
            if len(y) != self.d:
                raise ValueError(f"image of vertex {v} has {len(y)} coordinates, expected {self.d}")

    def __call__(self, v: int) -> RationalVector:
        return self.images[v]

    @classmethod
    def from_coords(cls, coords: Mapping[int, tuple], d: int | None = None) -> "PLMap":
        images = {v: tuple(Fraction(x) for x in y) for v, y in coords.items()}
        if d is None:
            d = len(next(iter(images.values())))
        return cls(images, d)


@dataclass(frozen=True)
class IntersectionPoint:
    location: RationalVector
    barycentric: tuple[tuple[Fraction, ...], ...]
    sign: int = 0


@dataclass
class IntersectionCocycle:
    values: dict[Cell, int]
    d: int
    r: int
    points: dict[Cell, IntersectionPoint] = field(default_factory=dict, repr=False)

    @property
    def dim(self) -> int:
        return self.d * (self.r - 1)

    def support(self) -> list[Cell]:
        return [c for c, v in self.values.items() if v]

    def __sub__(self, other: "IntersectionCocycle") -> "IntersectionCocycle":
        if (self.d, self.r) != (other.d, other.r) or self.values.keys() != other.values.keys():
            raise ValueError("cocycles live on different complexes")
        return IntersectionCocycle({c: v - other.values[c] for c, v in self.values.items()}, self.d, self.r)


def critical_dim(d: int, r: int) -> int:
    return d * (r - 1)


def _affinely_independent(points: list[RationalVector]) -> bool:
    if len(points) <= 1:
        return True
    base = points[0]
    diffs = [[a - b for a, b in zip(p, base)] for p in points[1:]]
    return exact.rank(diffs) == len(diffs)


def _vertices_independent(f: PLMap, vertices) -> bool:
    vertices = sorted(vertices)
    k = min(f.d + 1, len(vertices))
    return all(_affinely_independent([f(v) for v in sub]) for sub in combinations(vertices, k))


def _system(f: PLMap, c: Cell):
    """Rows of the square system in the barycentric unknowns of all factors."""
    r, d = len(c), f.d
    offsets = []
    n = 0
    for s in c:
        offsets.append(n)
        n += len(s)
    A = []
    b = []
    for i in range(r - 1):
        for axis in range(d):
            row = [Fraction(0)] * n
            for k, v in enumerate(c[i]):
                row[offsets[i] + k] = -f(v)[axis]
            for k, v in enumerate(c[i + 1]):
                row[offsets[i + 1] + k] = f(v)[axis]
            A.append(row)
            b.append(0)
    for i, s in enumerate(c):
        row = [Fraction(0)] * n
        for k in range(len(s)):
            row[offsets[i] + k] = Fraction(1)
        A.append(row)
        b.append(1)
    if len(A) != n:
        raise ValueError(f"cell of dimension {n - r} is not critical for d={d}, r={r}")
    return A, b, offsets


def jacobian(f: PLMap, c: Cell) -> list[list[Fraction]]:
    """Matrix of dPhi in the tangent frames (v_k - v_0) of each factor's ascending order."""
    r, d = len(c), f.d
    cols = []
    for i, s in enumerate(c):
        y0 = f(s[0])
        for v in s[1:]:
            w = [a - b for a, b in zip(f(v), y0)]
            col = [Fraction(0)] * (d * (r - 1))
            if i >= 1:
                for axis in range(d):
                    col[(i - 1) * d + axis] += w[axis]
            if i <= r - 2:
                for axis in range(d):
                    col[i * d + axis] -= w[axis]
            cols.append(col)
    n = d * (r - 1)
    if len(cols) != n:
        raise ValueError("jacobian needs a critical cell")
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def intersection_sign(f: PLMap, c: Cell, p: IntersectionPoint | None = None) -> int:
    """Sign of det(dPhi); ``p`` is accepted for symmetry but Phi is affine on the cell."""
    D = exact.det(jacobian(f, c))
    if D == 0:
        raise GenericityError(f"degenerate Jacobian on cell {c}")
    return 1 if D > 0 else -1


def intersect_r_simplices(f: PLMap, c: Cell) -> list[IntersectionPoint]:
    """The r-fold point of f on the open cell ``c`` (zero or one of them)."""
    A, b, offsets = _system(f, c)
    x = exact.solve(A, b)
    if x is None:
        # over-determined sub-configurations give singular but inconsistent systems
        augmented = [row + [rhs] for row, rhs in zip(A, b)]
        if exact.rank(augmented) > exact.rank(A):
            return []
        raise GenericityError(f"singular consistent intersection system on cell {c}")
    if any(t < 0 for t in x):
        return []
    if any(t == 0 for t in x):
        raise GenericityError(f"intersection on the boundary of cell {c}")
    bary = tuple(tuple(x[offsets[i]:offsets[i] + len(s)]) for i, s in enumerate(c))
    s0 = c[0]
    loc = tuple(sum((lam * f(v)[axis] for lam, v in zip(bary[0], s0)), Fraction(0)) for axis in range(f.d))
    point = IntersectionPoint(loc, bary)
    return [IntersectionPoint(loc, bary, intersection_sign(f, c, point))]


def check_general_position(f: PLMap, X: DeletedProduct | None = None) -> bool:
    """Affine independence of vertex images, plus transversality on every critical cell of X."""
    vertices = X.base.vertices if X is not None else tuple(f.images)
    if any(v not in f.images for v in vertices):
        return False
    if not _vertices_independent(f, vertices):
        return False
    if X is None:
        return True
    try:
        for c in X.cells(critical_dim(f.d, X.r)):
            intersect_r_simplices(f, c)
    except GenericityError:
        return False
    return True


def sample_map(K: SimplicialComplex, d: int, seed: int, X: DeletedProduct | None = None) -> PLMap:
    """Deterministic pseudorandom grid map, re-drawn until it is in general position.

    Coordinates are integers in [0, 2^20) divided by 2^10. Attempt ``k``
    uses substream ``k`` of the seed, so results depend only on (K, d, seed).
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    vertices = K.vertices
    for attempt in range(MAX_ATTEMPTS):
        ss = np.random.SeedSequence(entropy=seed % (1 << 64), spawn_key=(attempt,))
        grid = np.random.default_rng(ss).integers(0, 1 << GRID_BITS, size=(len(vertices), d))
        images = {
            v: tuple(Fraction(int(x), GRID_SCALE) for x in row)
            for v, row in zip(vertices, grid.tolist())
        }
        f = PLMap(images, d)
        if check_general_position(f, X):
            return f
    raise GenericityError(f"no generic map after {MAX_ATTEMPTS} attempts (seed={seed})")


def assemble_cocycle(f: PLMap, X: DeletedProduct) -> IntersectionCocycle:
    """Signed count of r-fold points on each critical cell of X."""
    n = critical_dim(f.d, X.r)
    values: dict[Cell, int] = {}
    points: dict[Cell, IntersectionPoint] = {}
    for c in X.cells(n):
        pts = intersect_r_simplices(f, c)
        values[c] = sum(p.sign for p in pts)
        if pts:
            points[c] = pts[0]
    return IntersectionCocycle(values, f.d, X.r, points)


def coboundary_value(values: Mapping[Cell, int], e: Cell) -> int:
    return sum(coef * values.get(F, 0) for F, coef in boundary(e))


def verify_cocycle(c: IntersectionCocycle, X: DeletedProduct) -> bool:
    """delta c == 0 on every cell one dimension above critical."""
    return all(coboundary_value(c.values, e) == 0 for e in X.cells(c.dim + 1))


def verify_equivariance(c: IntersectionCocycle) -> bool:
    """c(perm . e) == sgn(perm)^d * koszul(perm, dims e) * c(e) for every cell and permutation."""
    perms = all_perms(c.r)
    for e, v in c.values.items():
        dims = factor_dims(e)
        for perm in perms:
            if c.values.get(act(perm, e)) != equivariance_sign(perm, dims, c.d) * v:
                return False
    return True


def moment_curve_map(vertices, d: int) -> PLMap:
    """Vertex v_i -> (t, t^2, ..., t^d) with t = i + 1."""
    return PLMap({v: tuple(Fraction((i + 1) ** k) for k in range(1, d + 1)) for i, v in enumerate(vertices)}, d)
