"""Deleted joins and the equivariant retraction of the topological deleted join.

A point of the r-fold join K * ... * K is stored as r factor-terms, each a
map vertex -> non-negative rational, with all coefficients summing to 1.
The retraction removes the diagonal component: on the common support
of all factors, the per-vertex minimum over factors is subtracted from
every factor, and what remains is rescaled to total mass 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Mapping, Sequence

from .complex import Simplex, SimplicialComplex
from .delprod import Perm
from .exact import format_fraction


class DiagonalPointError(ValueError):
    """The point lies on the diagonal, where the retraction is undefined."""


class JoinPointError(ValueError):
    pass


Term = tuple[tuple[int, Fraction], ...]


def _term(coeffs: Mapping[int, Fraction]) -> Term:
    return tuple(sorted((int(v), Fraction(x)) for v, x in coeffs.items() if x))


@dataclass(frozen=True)
class JoinPoint:
    terms: tuple[Term, ...]

    @classmethod
    def make(cls, factors: Sequence[Mapping[int, Fraction]]) -> "JoinPoint":
        p = cls(tuple(_term(f) for f in factors))
        p.validate()
        return p

    @property
    def r(self) -> int:
        return len(self.terms)

    def factor(self, i: int) -> dict[int, Fraction]:
        return dict(self.terms[i])

    def supports(self) -> tuple[Simplex, ...]:
        return tuple(tuple(v for v, _ in t) for t in self.terms)

    def total(self) -> Fraction:
        return sum((x for t in self.terms for _, x in t), Fraction(0))

    def validate(self, K: SimplicialComplex | None = None) -> None:
        for t in self.terms:
            if any(x < 0 for _, x in t):
                raise JoinPointError("negative coefficient")
        if self.total() != 1:
            raise JoinPointError(f"coefficients sum to {self.total()}, not 1")
        if K is not None:
            for s in self.supports():
                if s and s not in K:
                    raise JoinPointError(f"support {s} is not a simplex of the complex")

    def act(self, perm: Perm) -> "JoinPoint":
        out: list = [None] * self.r
        for i, t in enumerate(self.terms):
            out[perm[i]] = t
        return JoinPoint(tuple(out))


def common_support(p: JoinPoint) -> set[int]:
    sets = [set(s) for s in p.supports()]
    return set.intersection(*sets) if sets else set()


def is_in_simplicial_deleted_join(p: JoinPoint) -> bool:
    return not common_support(p)


def is_diagonal(p: JoinPoint) -> bool:
    """All factors equal, each carrying mass 1/r."""
    return all(t == p.terms[0] for t in p.terms) and bool(p.terms[0])


def retract_point(p: JoinPoint) -> JoinPoint:
    """Equivariant retraction of the topological deleted join onto the simplicial one."""
    if is_diagonal(p):
        raise DiagonalPointError("retraction is undefined on the diagonal")
    factors = [p.factor(i) for i in range(p.r)]
    # one pass empties every shared vertex in at least one factor; the loop guards the invariant
    while True:
        shared = set.intersection(*(set(f) for f in factors))
        if not shared:
            break
        for j in shared:
            low = min(f[j] for f in factors)
            for f in factors:
                f[j] -= low
                if not f[j]:
                    del f[j]
        mass = sum((x for f in factors for x in f.values()), Fraction(0))
        if mass == 0:
            raise DiagonalPointError("retraction is undefined on the diagonal")
        factors = [{v: x / mass for v, x in f.items()} for f in factors]
    return JoinPoint(tuple(_term(f) for f in factors))


@dataclass(frozen=True)
class SimplicialDeletedJoin:
    base: SimplicialComplex
    r: int
    cells: frozenset[tuple[Simplex, ...]]

    def __contains__(self, cell) -> bool:
        return tuple(cell) in self.cells

    def __len__(self) -> int:
        return len(self.cells)

    def maximal_cells(self) -> list[tuple[Simplex, ...]]:
        def below(a, b):
            return a != b and all(set(x) <= set(y) for x, y in zip(a, b))
        return sorted(c for c in self.cells if not any(below(c, o) for o in self.cells))


def _join_tuples(simplices: list[Simplex], r: int, common: set[int] | None):
    if r == 0:
        if common is not None and not common:
            yield ()
        return
    for s in simplices:
        nxt = set(s) if common is None else common & set(s)
        for rest in _join_tuples(simplices, r - 1, nxt):
            yield (s,) + rest


def build_deleted_join(K: SimplicialComplex, r: int) -> SimplicialDeletedJoin:
    """All r-tuples (possibly empty factors) with empty r-wise intersection.

    The all-empty tuple, the empty simplex of the join, is left out.
    """
    if r < 2:
        raise ValueError(f"r must be >= 2, got {r}")
    simplices = [()] + K.sorted_simplices()
    cells = frozenset(c for c in _join_tuples(simplices, r, None) if any(c))
    return SimplicialDeletedJoin(K, r, cells)


def brute_force_join_cells(K: SimplicialComplex, r: int) -> set[tuple[Simplex, ...]]:
    simplices = [()] + list(K.simplices)
    return {c for c in product(simplices, repeat=r)
            if any(c) and not set.intersection(*(set(s) for s in c))}


def parse_point(line: str, r: int) -> JoinPoint:
    """``0 3:1/2 4:1/4 ; 1 5:1/4`` -> JoinPoint; unlisted factors are empty."""
    factors: list[dict[int, Fraction]] = [{} for _ in range(r)]
    for chunk in line.split(";"):
        toks = chunk.split()
        if not toks:
            continue
        i = int(toks[0])
        if not 0 <= i < r:
            raise JoinPointError(f"factor index {i} out of range for r={r}")
        for tok in toks[1:]:
            v, _, x = tok.partition(":")
            if not x:
                raise JoinPointError(f"expected vertex:coefficient, got {tok!r}")
            factors[i][int(v)] = factors[i].get(int(v), Fraction(0)) + Fraction(x)
    return JoinPoint.make(factors)


def format_point(p: JoinPoint) -> str:
    parts = []
    for i, t in enumerate(p.terms):
        if t:
            parts.append(" ".join([str(i)] + [f"{v}:{format_fraction(x)}" for v, x in t]))
    return " ; ".join(parts)


def random_point(rng, K: SimplicialComplex, r: int, max_den: int = 12) -> JoinPoint:
    """Random rational point of K^{*r} whose factors tend to share vertices."""
    simplices = K.sorted_simplices()
    factors = []
    for _ in range(r):
        if rng.random() < 0.15:
            factors.append({})
            continue
        s = rng.choice(simplices)
        factors.append({v: Fraction(rng.randint(1, max_den)) for v in s})
    total = sum((x for f in factors for x in f.values()), Fraction(0))
    if total == 0:
        factors[0] = {simplices[0][0]: Fraction(1)}
        total = Fraction(1)
    return JoinPoint.make([{v: x / total for v, x in f.items()} for f in factors])

