"""Finite abstract simplicial complexes.

Simplices are tuples of strictly ascending non-negative integers. That
ascending order is the orientation convention used everywhere downstream.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

Simplex = tuple[int, ...]


class MalformedSimplexError(ValueError):
    pass


class ComplexParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def canonical(vertices: Iterable[int]) -> Simplex:
    """Return the ascending tuple for ``vertices``; reject repeats and negatives."""
    vs = tuple(vertices)
    if not vs:
        raise MalformedSimplexError("empty simplex")
    for v in vs:
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise MalformedSimplexError(f"bad vertex id {v!r}")
    s = tuple(sorted(vs))
    if any(a == b for a, b in zip(s, s[1:])):
        raise MalformedSimplexError(f"repeated vertex in {vs}")
    return s


def dim(s: Simplex) -> int:
    return len(s) - 1


def are_disjoint(s: Simplex, t: Simplex) -> bool:
    return not set(s).intersection(t)


def faces(s: Simplex) -> Iterator[Simplex]:
    """All non-empty faces of ``s``, including ``s`` itself."""
    for k in range(1, len(s) + 1):
        yield from combinations(s, k)


def facets(s: Simplex) -> Iterator[tuple[int, Simplex]]:
    """Codimension-one faces with their boundary signs (-1)^k, k the removed position."""
    if len(s) == 1:
        return
    for k in range(len(s)):
        yield (-1) ** k, s[:k] + s[k + 1:]


class SimplicialComplex:
    """An immutable finite simplicial complex, closed under faces."""

    __slots__ = ("_simplices", "_by_dim", "_maximal")

    def __init__(self, simplices: Iterable[Simplex]):
        simplices = frozenset(simplices)
        for s in simplices:
            for t in faces(s):
                if t not in simplices:
                    raise ValueError(f"face {t} of {s} missing; use closure()")
        self._simplices = simplices
        by_dim: dict[int, list[Simplex]] = {}
        for s in simplices:
            by_dim.setdefault(dim(s), []).append(s)
        self._by_dim = {k: tuple(sorted(v)) for k, v in sorted(by_dim.items())}
        self._maximal = None

    @property
    def simplices(self) -> frozenset[Simplex]:
        return self._simplices

    @property
    def dim(self) -> int:
        """Maximal simplex dimension, -1 for the empty complex."""
        return max(self._by_dim, default=-1)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(s[0] for s in self._by_dim.get(0, ()))

    def simplices_of_dim(self, k: int) -> tuple[Simplex, ...]:
        return self._by_dim.get(k, ())

    def sorted_simplices(self) -> list[Simplex]:
        """Simplices ordered by dimension, then lexicographically."""
        return [s for k in self._by_dim for s in self._by_dim[k]]

    def maximal_simplices(self) -> tuple[Simplex, ...]:
        if self._maximal is None:
            covered = set()
            for s in self._simplices:
                for _, t in facets(s):
                    covered.add(t)
            self._maximal = tuple(sorted(s for s in self._simplices if s not in covered))
        return self._maximal

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(self._by_dim.get(k, ())) for k in range(self.dim + 1))

    def __contains__(self, s) -> bool:
        return tuple(s) in self._simplices

    def __len__(self) -> int:
        return len(self._simplices)

    def __iter__(self) -> Iterator[Simplex]:
        return iter(self.sorted_simplices())

    def __eq__(self, other) -> bool:
        return isinstance(other, SimplicialComplex) and self._simplices == other._simplices

    def __hash__(self) -> int:
        return hash(self._simplices)

    def __repr__(self) -> str:
        return f"SimplicialComplex(dim={self.dim}, f={self.f_vector()})"


def closure(generators: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Smallest complex containing every generator."""
    out: set[Simplex] = set()
    for g in generators:
        s = canonical(g)
        if s in out:
            continue
        out.update(faces(s))
    return SimplicialComplex(out)


def skeleton(K: SimplicialComplex, k: int) -> SimplicialComplex:
    if k < 0:
        raise ValueError("skeleton dimension must be >= 0")
    return SimplicialComplex(s for s in K.simplices if dim(s) <= k)


def simplex(n: int) -> SimplicialComplex:
    """The full n-simplex on vertices 0..n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return closure([range(n + 1)])


def simplex_skeleton(n: int, k: int) -> SimplicialComplex:
    """k-skeleton of the n-simplex, built directly without the full simplex."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be >= 0")
    return closure(combinations(range(n + 1), min(k, n) + 1))


def tverberg_complex(r: int, d: int) -> SimplicialComplex:
    """The N-simplex with N = (d+1)(r-1), the Tverberg-type test complex."""
    if r < 2 or d < 1:
        raise ValueError(f"need r >= 2 and d >= 1, got r={r}, d={d}")
    return simplex((d + 1) * (r - 1))


def complete_bipartite(a: int, b: int) -> SimplicialComplex:
    """K_{a,b} with parts 0..a-1 and a..a+b-1."""
    if a < 1 or b < 1:
        raise ValueError("both parts must be non-empty")
    return closure((i, a + j) for i in range(a) for j in range(b))


def complete_graph(n: int) -> SimplicialComplex:
    return simplex_skeleton(n - 1, 1)


def parse(text: str | bytes) -> SimplicialComplex:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    gens = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            vs = [int(tok) for tok in line.split()]
            gens.append(canonical(vs))
        except ValueError as exc:
            raise ComplexParseError(lineno, str(exc)) from None
    return closure(gens)


def serialize(K: SimplicialComplex) -> str:
    """One maximal simplex per line, lines sorted lexicographically."""
    return "".join(" ".join(map(str, s)) + "\n" for s in K.maximal_simplices())
