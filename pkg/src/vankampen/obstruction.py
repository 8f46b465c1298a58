"""Does the intersection cocycle vanish in equivariant cohomology?

The S_r action on the deleted product is free, so an equivariant cochain on
(n-1)-cells is fixed by its values on orbit representatives, with

    x(perm . F) = sgn(perm)^d * koszul(perm, dims F) * x(F).

Writing delta x = c on the critical representatives gives one integer
system whose columns are the subcritical representatives.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .delprod import Cell, DeletedProduct, boundary, equivariance_sign, factor_dims, format_cell, orbit_rep
from .genmaps import IntersectionCocycle, coboundary_value, verify_equivariance
from .snf import DiophantineSolution, IntegerMatrix, solve_diophantine, solve_mod2


class InconsistentCocycleError(ValueError):
    pass


@dataclass
class EquivariantSystem:
    matrix: IntegerMatrix
    rhs: list[int]
    rows: tuple[Cell, ...]
    cols: tuple[Cell, ...]
    d: int
    r: int


@dataclass
class CoboundaryWitness:
    assignment: dict[Cell, int]
    d: int

    def extend(self, X: DeletedProduct, k: int) -> dict[Cell, int]:
        """Equivariant extension to every ordered cell of dimension k."""
        out = {}
        for F in X.cells(k):
            rep, perm = orbit_rep(F)
            v = self.assignment.get(rep, 0)
            if v:
                out[F] = equivariance_sign(perm, factor_dims(rep), self.d) * v
        return out

    def lines(self) -> list[str]:
        return [f"{format_cell(c)}\t{v}" for c, v in sorted(self.assignment.items()) if v]


@dataclass
class ObstructionResult:
    vanishes: bool
    system: EquivariantSystem
    witness: CoboundaryWitness | None = None
    proof: DiophantineSolution | None = None
    method: str = "snf"
    notes: list[str] = field(default_factory=list)

    def certificate(self) -> dict:
        if self.vanishes:
            return {
                "kind": "coboundary",
                "witness": {format_cell(c): v for c, v in sorted(self.witness.assignment.items()) if v},
            }
        p = self.proof
        return {
            "kind": "nonvanishing",
            "method": self.method,
            "row": p.violation_row,
            "divisor": p.divisor,
            "residue": p.residue,
            "combination": {format_cell(self.system.rows[i]): u for i, u in sorted(p.certificate.items())},
        }


def build_equivariant_system(X: DeletedProduct, c: IntersectionCocycle) -> EquivariantSystem:
    if X.r != c.r:
        raise ValueError("cocycle and deleted product disagree on r")
    if not verify_equivariance(c):
        raise InconsistentCocycleError("cocycle violates the equivariance law")
    n = c.dim
    rows = X.orbit_reps(n)
    cols = X.orbit_reps(n - 1)
    col_index = {f: j for j, f in enumerate(cols)}
    entries: dict[tuple[int, int], int] = {}
    for i, e in enumerate(rows):
        for F, coef in boundary(e):
            rep, perm = orbit_rep(F)
            j = col_index[rep]
            entries[(i, j)] = entries.get((i, j), 0) + coef * equivariance_sign(perm, factor_dims(rep), c.d)
    rhs = [c.values.get(e, 0) for e in rows]
    return EquivariantSystem(IntegerMatrix(len(rows), len(cols), entries), rhs, rows, cols, c.d, c.r)


def verify_witness(X: DeletedProduct, c: IntersectionCocycle, witness: CoboundaryWitness) -> bool:
    """delta(extended witness) == c on every ordered critical cell."""
    x = witness.extend(X, c.dim - 1)
    return all(coboundary_value(x, e) == c.values.get(e, 0) for e in X.cells(c.dim))


def class_vanishes(X: DeletedProduct, c: IntersectionCocycle, mod2_fast_path: bool = True) -> ObstructionResult:
    """Decide whether c is an equivariant coboundary, with a certificate either way."""
    system = build_equivariant_system(X, c)
    if mod2_fast_path and any(system.rhs):
        ok, rows = solve_mod2(system.matrix, system.rhs)
        if not ok:
            proof = DiophantineSolution(False, divisor=2, residue=1, certificate={i: 1 for i in rows})
            assert proof.check(system.matrix, system.rhs)
            return ObstructionResult(False, system, proof=proof, method="mod2")
    sol = solve_diophantine(system.matrix, system.rhs)
    if not sol.solvable:
        if not sol.check(system.matrix, system.rhs):
            raise AssertionError("SNF refutation failed its own check")
        return ObstructionResult(False, system, proof=sol, method="snf")
    witness = CoboundaryWitness({f: v for f, v in zip(system.cols, sol.x)}, c.d)
    if not verify_witness(X, c, witness):
        raise AssertionError("coboundary witness does not reproduce the cocycle")
    return ObstructionResult(True, system, witness=witness, method="snf")


def differ_by_coboundary(X: DeletedProduct, c1: IntersectionCocycle, c2: IntersectionCocycle) -> ObstructionResult:
    return class_vanishes(X, c1 - c2, mod2_fast_path=False)
