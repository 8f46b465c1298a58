"""Deleted r-fold products: cells, signed boundary, and the free S_r action.

A cell is a tuple of r pairwise disjoint simplices. Its orientation is the
product orientation of the factors taken in order, each factor oriented by
ascending vertex order.

Permutations are tuples ``perm`` of 0-based indices with ``perm[i]`` the
position that factor ``i`` moves to, so ``act(perm, c)[perm[i]] == c[i]``.
"""

from __future__ import annotations

from itertools import permutations, product
from typing import Iterable, Iterator

from .complex import Simplex, SimplicialComplex, facets

Cell = tuple[Simplex, ...]
Perm = tuple[int, ...]


def cell_dim(c: Cell) -> int:
    return sum(len(s) for s in c) - len(c)


def factor_dims(c: Cell) -> tuple[int, ...]:
    return tuple(len(s) - 1 for s in c)


def is_cell(c: Cell) -> bool:
    seen: set[int] = set()
    for s in c:
        if not s or seen.intersection(s):
            return False
        seen.update(s)
    return True


def boundary(c: Cell) -> list[tuple[Cell, int]]:
    """Leibniz-rule boundary: sum_i (-1)^(s_1+..+s_{i-1}) c_1 x .. x d(c_i) x .. x c_r."""
    terms = []
    shift = 0
    for i, s in enumerate(c):
        sign = -1 if shift % 2 else 1
        for k, face in facets(s):
            terms.append((c[:i] + (face,) + c[i + 1:], sign * k))
        shift += len(s) - 1
    return terms


def act(perm: Perm, c: Cell) -> Cell:
    out: list = [None] * len(c)
    for i, s in enumerate(c):
        out[perm[i]] = s
    return tuple(out)


def compose(p: Perm, q: Perm) -> Perm:
    """``p`` after ``q``."""
    return tuple(p[q[i]] for i in range(len(q)))


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def identity(r: int) -> Perm:
    return tuple(range(r))


def perm_sign(p: Perm) -> int:
    inversions = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return -1 if inversions % 2 else 1


def koszul_sign(perm: Perm, dims: Iterable[int]) -> int:
    """Orientation change of a product when its factors are reordered by ``perm``.

    Each inverted pair i < j (perm[i] > perm[j]) contributes (-1)^(s_i * s_j).
    """
    dims = tuple(dims)
    odd = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                odd += dims[i] * dims[j]
    return -1 if odd % 2 else 1


def orbit_rep(c: Cell) -> tuple[Cell, Perm]:
    """Lexicographically minimal reordering of ``c`` and the permutation carrying it to ``c``."""
    rep = tuple(sorted(c))
    where = {s: i for i, s in enumerate(c)}
    return rep, tuple(where[s] for s in rep)


def format_cell(c: Cell) -> str:
    return "|".join(" ".join(map(str, s)) for s in c)


def parse_cell(text: str) -> Cell:
    return tuple(tuple(int(v) for v in part.split()) for part in text.strip().split("|"))


def _tuples_of_dim(by_dim: dict[int, tuple[Simplex, ...]], r: int, target: int,
                   used: frozenset) -> Iterator[Cell]:
    """Ordered r-tuples of pairwise disjoint simplices with dimensions summing to target."""
    if r == 1:
        for s in by_dim.get(target, ()):
            if not used.intersection(s):
                yield (s,)
        return
    for k in range(target + 1):
        for s in by_dim.get(k, ()):
            if used.intersection(s):
                continue
            for rest in _tuples_of_dim(by_dim, r - 1, target - k, used.union(s)):
                yield (s,) + rest


class DeletedProduct:
    """Deleted r-fold product of ``base``, materialised one dimension at a time.

    Cells of a dimension are built on first request and cached, so the
    obstruction pipeline only pays for the three dimensions it touches.
    """

    def __init__(self, base: SimplicialComplex, r: int):
        if r < 2:
            raise ValueError(f"r must be >= 2, got {r}")
        self.base = base
        self.r = r
        self._by_dim = {k: base.simplices_of_dim(k) for k in range(base.dim + 1)}
        self._cells: dict[int, tuple[Cell, ...]] = {}
        self._index: dict[int, dict[Cell, int]] = {}

    @property
    def max_dim(self) -> int:
        """Upper bound r * dim(base)."""
        return self.r * self.base.dim

    def cells(self, k: int) -> tuple[Cell, ...]:
        if k not in self._cells:
            if k < 0 or not self._by_dim:
                self._cells[k] = ()
            else:
                self._cells[k] = tuple(sorted(_tuples_of_dim(self._by_dim, self.r, k, frozenset())))
        return self._cells[k]

    def index(self, k: int) -> dict[Cell, int]:
        if k not in self._index:
            self._index[k] = {c: i for i, c in enumerate(self.cells(k))}
        return self._index[k]

    def all_cells(self) -> list[Cell]:
        return [c for k in range(self.max_dim + 1) for c in self.cells(k)]

    @property
    def dim(self) -> int:
        for k in range(self.max_dim, -1, -1):
            if self.cells(k):
                return k
        return -1

    def orbit_reps(self, k: int) -> tuple[Cell, ...]:
        return tuple(c for c in self.cells(k) if orbit_rep(c)[0] == c)

    def __contains__(self, c) -> bool:
        return len(c) == self.r and is_cell(c) and all(s in self.base for s in c)

    def __repr__(self) -> str:
        return f"DeletedProduct(r={self.r}, base={self.base!r})"


def build_deleted_product(K: SimplicialComplex, r: int, dims: Iterable[int] | None = None) -> DeletedProduct:
    """Deleted product of K; ``dims`` restricts which dimensions are built eagerly."""
    if len(K) == 0:
        raise ValueError("deleted product of the empty complex")
    X = DeletedProduct(K, r)
    for k in (range(X.max_dim + 1) if dims is None else dims):
        X.cells(k)
    return X


def brute_force_cells(K: SimplicialComplex, r: int) -> set[Cell]:
    """Naive r-nested loop over all simplices; independent check of the enumerator."""
    simplices = list(K.simplices)
    return {
        c for c in product(simplices, repeat=r)
        if all(not set(c[i]) & set(c[j]) for i in range(r) for j in range(i + 1, r))
    }


def all_perms(r: int) -> list[Perm]:
    return list(permutations(range(r)))


def equivariance_sign(perm: Perm, dims: Iterable[int], d: int) -> int:
    """sgn(perm)^d * koszul_sign(perm, dims): how cocycle values transform."""
    dims = tuple(dims)
    return (perm_sign(perm) if d % 2 else 1) * koszul_sign(perm, dims)


def count_by_dim(X: DeletedProduct) -> dict[int, int]:
    return {k: n for k in range(X.max_dim + 1) if (n := len(X.cells(k)))}


def total_cells(X: DeletedProduct) -> int:
    return sum(count_by_dim(X).values())

