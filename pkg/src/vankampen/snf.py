"""Sparse Smith normal form over Z and integer linear systems.

The elimination works on dict-of-dict rows with a column index, choosing
pivots Markowitz-style (smallest fill-in estimate, ties broken toward
unit pivots).
Every row and column operation is unimodular and is mirrored into U and V,
so ``U @ A @ V == D`` holds exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with s*a + t*b == g == gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


class IntegerMatrix:
    """Sparse integer matrix; only non-zero entries are stored."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Mapping[tuple[int, int], int] | None = None):
        self.rows = rows
        self.cols = cols
        self.entries = {}
        for (i, j), v in (entries or {}).items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise IndexError(f"entry ({i}, {j}) outside {rows}x{cols}")
            if v:
                self.entries[(i, j)] = int(v)

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[int]], cols: int | None = None) -> "IntegerMatrix":
        rows = len(data)
        if cols is None:
            cols = len(data[0]) if rows else 0
        return cls(rows, cols, {(i, j): v for i, row in enumerate(data) for j, v in enumerate(row) if v})

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries.get(ij, 0)

    def row_dicts(self) -> list[dict[int, int]]:
        out: list[dict[int, int]] = [{} for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        right = other.row_dicts()
        acc: dict[tuple[int, int], int] = {}
        for (i, k), a in self.entries.items():
            for j, b in right[k].items():
                acc[(i, j)] = acc.get((i, j), 0) + a * b
        return IntegerMatrix(self.rows, other.cols, acc)

    def matvec(self, x: Sequence[int]) -> list[int]:
        if len(x) != self.cols:
            raise ValueError("shape mismatch")
        out = [0] * self.rows
        for (i, j), v in self.entries.items():
            out[i] += v * x[j]
        return out

    def vecmat(self, y: Sequence[int]) -> list[int]:
        if len(y) != self.rows:
            raise ValueError("shape mismatch")
        out = [0] * self.cols
        for (i, j), v in self.entries.items():
            out[j] += y[i] * v
        return out

    def is_diagonal(self) -> bool:
        return all(i == j for i, j in self.entries)

    def diagonal(self) -> list[int]:
        return [self[i, i] for i in range(min(self.rows, self.cols))]

    def __eq__(self, other) -> bool:
        return (isinstance(other, IntegerMatrix) and (self.rows, self.cols) == (other.rows, other.cols)
                and self.entries == other.entries)

    def __repr__(self) -> str:
        return f"IntegerMatrix({self.rows}x{self.cols}, nnz={len(self.entries)})"


@dataclass
class SNFResult:
    U: IntegerMatrix
    D: IntegerMatrix
    V: IntegerMatrix

    @property
    def invariants(self) -> list[int]:
        return [x for x in self.D.diagonal() if x]

    @property
    def rank(self) -> int:
        return len(self.invariants)


class _Eliminator:
    def __init__(self, A: IntegerMatrix):
        m, n = A.rows, A.cols
        self.R: list[dict[int, int]] = A.row_dicts()
        self.C: list[set[int]] = [set() for _ in range(n)]
        for (i, j) in A.entries:
            self.C[j].add(i)
        self.U: list[dict[int, int]] = [{i: 1} for i in range(m)]
        self.V: list[dict[int, int]] = [{j: 1} for j in range(n)]

    @staticmethod
    def _mix(x: dict[int, int], y: dict[int, int], a: int, b: int, c: int, d: int):
        nx, ny = {}, {}
        for k in x.keys() | y.keys():
            u, w = x.get(k, 0), y.get(k, 0)
            p, q = a * u + b * w, c * u + d * w
            if p:
                nx[k] = p
            if q:
                ny[k] = q
        return nx, ny

    def rows_mix(self, i: int, j: int, a: int, b: int, c: int, d: int) -> None:
        """row_i, row_j <- a row_i + b row_j, c row_i + d row_j."""
        R, C = self.R, self.C
        for k in R[i]:
            C[k].discard(i)
        for k in R[j]:
            C[k].discard(j)
        R[i], R[j] = self._mix(R[i], R[j], a, b, c, d)
        for k in R[i]:
            C[k].add(i)
        for k in R[j]:
            C[k].add(j)
        self.U[i], self.U[j] = self._mix(self.U[i], self.U[j], a, b, c, d)

    def cols_mix(self, p: int, q: int, a: int, b: int, c: int, d: int) -> None:
        """col_p, col_q <- a col_p + b col_q, c col_p + d col_q."""
        R, C = self.R, self.C
        for i in C[p] | C[q]:
            row = R[i]
            u, w = row.get(p, 0), row.get(q, 0)
            x, y = a * u + b * w, c * u + d * w
            for k, val in ((p, x), (q, y)):
                if val:
                    row[k] = val
                    C[k].add(i)
                else:
                    row.pop(k, None)
                    C[k].discard(i)
        self.V[p], self.V[q] = self._mix(self.V[p], self.V[q], a, b, c, d)

    def negate_row(self, i: int) -> None:
        self.R[i] = {k: -v for k, v in self.R[i].items()}
        self.U[i] = {k: -v for k, v in self.U[i].items()}

    def swap_rows(self, i: int, j: int) -> None:
        self.rows_mix(i, j, 0, 1, 1, 0)

    def swap_cols(self, p: int, q: int) -> None:
        self.cols_mix(p, q, 0, 1, 1, 0)

    def clear(self, p: int, q: int) -> None:
        """Reduce row p and column q to the single pivot entry at (p, q).

        Euclidean style: every entry is reduced by the nearest multiple of
        the pivot, and the smallest remainder, if any, becomes the new pivot.
        Rows are only ever shifted by multiples, never rescaled, which keeps
        coefficient growth additive.
        """
        R, C = self.R, self.C
        while True:
            a = R[p][q]
            rest = []
            for i in sorted(C[q] - {p}):
                k = _nearest_quotient(R[i][q], a)
                if k:
                    self.rows_mix(i, p, 1, -k, 0, 1)
                if q in R[i]:
                    rest.append(i)
            if rest:
                self.swap_rows(p, min(rest, key=lambda i: (abs(R[i][q]), i)))
                continue
            rest = []
            for j in sorted(set(R[p]) - {q}):
                k = _nearest_quotient(R[p][j], a)
                if k:
                    self.cols_mix(j, q, 1, -k, 0, 1)
                if j in R[p]:
                    rest.append(j)
            if rest:
                self.swap_cols(q, min(rest, key=lambda j: (abs(R[p][j]), j)))
                continue
            return


def _nearest_quotient(b: int, a: int) -> int:
    """k with |b - k a| <= |a| / 2."""
    k, r = divmod(b, a)
    if 2 * abs(r) > abs(a):
        k += 1
    return k


def _choose_pivot(R, C, active_rows) -> tuple[int, int] | None:
    best = None
    best_key = None
    for i in active_rows:
        row = R[i]
        if not row:
            continue
        ri = len(row) - 1
        for j, v in row.items():
            key = (ri * (len(C[j]) - 1), abs(v) != 1, abs(v), i, j)
            if best_key is None or key < best_key:
                best_key, best = key, (i, j)
    return best


def smith_normal_form(A: IntegerMatrix) -> SNFResult:
    """Unimodular U, V with U A V = D diagonal, d_1 | d_2 | ..., d_k > 0."""
    m, n = A.rows, A.cols
    E = _Eliminator(A)
    active = set(range(m))
    pivots: list[tuple[int, int]] = []
    while True:
        pv = _choose_pivot(E.R, E.C, active)
        if pv is None:
            break
        p, q = pv
        E.clear(p, q)
        active.discard(p)
        pivots.append((p, q))

    # divisibility chain
    k = len(pivots)
    for a_idx in range(k):
        pa, qa = pivots[a_idx]
        for b_idx in range(a_idx + 1, k):
            pb, qb = pivots[b_idx]
            a, b = E.R[pa][qa], E.R[pb][qb]
            if b % a == 0:
                continue
            E.cols_mix(qa, qb, 1, 1, 0, 1)
            g, s, t = xgcd(a, b)
            E.rows_mix(pa, pb, s, t, -(b // g), a // g)
            tb = E.R[pa].get(qb, 0)
            if tb:
                E.cols_mix(qb, qa, 1, -(tb // g), 0, 1)
    for p, q in pivots:
        if E.R[p][q] < 0:
            E.negate_row(p)

    pivot_rows = [p for p, _ in pivots]
    pivot_cols = [q for _, q in pivots]
    used_r, used_c = set(pivot_rows), set(pivot_cols)
    row_order = pivot_rows + [i for i in range(m) if i not in used_r]
    col_order = pivot_cols + [j for j in range(n) if j not in used_c]

    U = IntegerMatrix(m, m, {(new, k2): v for new, old in enumerate(row_order) for k2, v in E.U[old].items()})
    V = IntegerMatrix(n, n, {(k2, new): v for new, old in enumerate(col_order) for k2, v in E.V[old].items()})
    D = IntegerMatrix(m, n, {(t, t): E.R[p][q] for t, (p, q) in enumerate(pivots)})
    return SNFResult(U, D, V)


def check_snf(A: IntegerMatrix, res: SNFResult) -> bool:
    """Exact check of U A V == D, diagonal shape, positivity and divisibility."""
    if res.U @ A @ res.V != res.D or not res.D.is_diagonal():
        return False
    diag = res.invariants
    if any(x <= 0 for x in diag):
        return False
    if any(diag[i + 1] % diag[i] for i in range(len(diag) - 1)):
        return False
    # zeros only after the non-zero block
    return all(res.D[t, t] for t in range(len(diag)))


@dataclass
class DiophantineSolution:
    solvable: bool
    x: list[int] | None = None
    violation_row: int | None = None
    divisor: int | None = None
    residue: int | None = None
    certificate: dict[int, int] = field(default_factory=dict)

    def check(self, A: IntegerMatrix, b: Sequence[int]) -> bool:
        """Re-verify independently of the SNF: A x == b, or the certificate row refutes it.

        A refutation is a vector u with u.A == 0 (mod divisor) entrywise and
        u.b != 0 (mod divisor); divisor 0 means exact equality with 0.
        """
        if self.solvable:
            return self.x is not None and A.matvec(self.x) == list(b)
        u = [self.certificate.get(i, 0) for i in range(A.rows)]
        uA = A.vecmat(u)
        ub = sum(ui * bi for ui, bi in zip(u, b))
        if self.divisor == 0:
            return all(v == 0 for v in uA) and ub != 0
        return all(v % self.divisor == 0 for v in uA) and ub % self.divisor != 0


def solve_diophantine(A: IntegerMatrix, b: Sequence[int], snf: SNFResult | None = None) -> DiophantineSolution:
    """Integer solution of A x = b, or a divisibility certificate that none exists."""
    if len(b) != A.rows:
        raise ValueError("right-hand side length does not match the matrix")
    res = snf if snf is not None else smith_normal_form(A)
    Ub = res.U.matvec(list(b))
    diag = res.invariants
    y = [0] * A.cols
    for k, val in enumerate(Ub):
        dk = diag[k] if k < len(diag) else 0
        if (dk == 0 and val != 0) or (dk and val % dk):
            urow = {j: v for (i, j), v in res.U.entries.items() if i == k}
            return DiophantineSolution(False, violation_row=k, divisor=dk, residue=val % dk if dk else val,
                                       certificate=urow)
        if dk:
            y[k] = val // dk
    x = res.V.matvec(y)
    if A.matvec(x) != list(b):
        raise AssertionError("SNF back-substitution failed to reproduce b")
    return DiophantineSolution(True, x=x)


def solve_mod_p(A: IntegerMatrix, b: Sequence[int], p: int) -> bool:
    """Whether A x = b has a solution over Z/p (p prime)."""
    rows = A.row_dicts()
    aug = []
    for i, row in enumerate(rows):
        r = {j: v % p for j, v in row.items() if v % p}
        aug.append((r, b[i] % p))
    pivots: dict[int, tuple[dict[int, int], int]] = {}
    for r, rhs in aug:
        r = dict(r)
        while r:
            j = min(r)
            if j not in pivots:
                inv = pow(r[j], -1, p)
                pivots[j] = ({k: v * inv % p for k, v in r.items()}, rhs * inv % p)
                break
            prow, prhs = pivots[j]
            f = r[j]
            for k, v in prow.items():
                nv = (r.get(k, 0) - f * v) % p
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
            rhs = (rhs - f * prhs) % p
        else:
            if rhs:
                return False
    return True


def solve_mod2(A: IntegerMatrix, b: Sequence[int]) -> tuple[bool, list[int]]:
    """GF(2) solvability with rows packed into Python ints.

    On failure also returns the rows whose sum is 0 = 1 (mod 2); that set is
    an integer refutation with divisor 2.
    """
    pivots: dict[int, tuple[int, int]] = {}
    ncols = A.cols
    mask = (1 << ncols) - 1
    rows = [0] * A.rows
    for (i, j), v in A.entries.items():
        if v & 1:
            rows[i] |= 1 << j
    for i, bits in enumerate(rows):
        bits |= (b[i] & 1) << ncols
        combo = 1 << i
        while bits & mask:
            j = (bits & mask).bit_length() - 1
            if j not in pivots:
                pivots[j] = (bits, combo)
                break
            pbits, pcombo = pivots[j]
            bits ^= pbits
            combo ^= pcombo
        else:
            if bits >> ncols:
                return False, [k for k in range(A.rows) if combo >> k & 1]
    return True, []


def random_sparse(rows: int, cols: int, density: float, rng, lo: int = -3, hi: int = 3) -> IntegerMatrix:
    entries = {}
    for i in range(rows):
        for j in range(cols):
            if rng.random() < density:
                v = rng.randint(lo, hi)
                if v:
                    entries[(i, j)] = v
    return IntegerMatrix(rows, cols, entries)


def matrix_from_rows(rows: Iterable[Mapping[int, int]], cols: int) -> IntegerMatrix:
    rows = list(rows)
    return IntegerMatrix(len(rows), cols, {(i, j): v for i, row in enumerate(rows) for j, v in row.items()})
