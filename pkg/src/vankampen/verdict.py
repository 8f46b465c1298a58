"""Parameter regimes and the end-to-end almost r-embeddability decision."""

from __future__ import annotations

import enum
import hashlib
import json
import time
from dataclasses import dataclass, field
from typing import Any

from .complex import SimplicialComplex, serialize
from .delprod import build_deleted_product
from .genmaps import (
    IntersectionCocycle, PLMap, assemble_cocycle, critical_dim, sample_map, verify_cocycle, verify_equivariance,
)
from .obstruction import ObstructionResult, class_vanishes

SCHEMA_VERSION = 1


class Regime(str, enum.Enum):
    NO_RFOLD_GENERIC = "NoRFoldGeneric"
    TRIVIAL_MAP_EXISTS = "TrivialMapExists"
    CRITICAL = "Critical"
    HIGHER_OBSTRUCTION = "HigherObstruction"


class Outcome(str, enum.Enum):
    EMBEDDABLE = "AlmostREmbeddable"
    NOT_EMBEDDABLE = "NotAlmostREmbeddable"
    UNDECIDED = "Undecided"


class DecisionError(RuntimeError):
    pass


def _check_params(m: int, d: int, r: int) -> None:
    if d < 1 or r < 2:
        raise ValueError(f"need d >= 1 and r >= 2, got d={d}, r={r}")


def check_metastable(m: int, d: int, r: int) -> bool:
    """r d >= (r + 1) m + 3."""
    _check_params(m, d, r)
    return r * d >= (r + 1) * m + 3


def no_rfold_generic(m: int, d: int, r: int) -> bool:
    return (r - 1) * d > r * m


def trivial_map_exists(m: int, d: int, r: int) -> bool:
    """dim of the deleted product (<= rm) is below the target sphere's dimension + 1."""
    return r * m <= d * (r - 1) - 1


def regime(m: int, d: int, r: int) -> Regime:
    """Classify (m, d, r).

    rm < d(r-1) is one inequality read two ways: generic maps have no r-fold
    points, and an equivariant map to S^{d(r-1)-1} exists for dimension
    reasons. Inside the metastable range it is reported as TrivialMapExists,
    outside as NoRFoldGeneric.
    """
    _check_params(m, d, r)
    if trivial_map_exists(m, d, r):
        return Regime.TRIVIAL_MAP_EXISTS if check_metastable(m, d, r) else Regime.NO_RFOLD_GENERIC
    if r * m == d * (r - 1):
        return Regime.CRITICAL
    return Regime.HIGHER_OBSTRUCTION


@dataclass
class Report:
    input: dict[str, Any]
    r: int
    d: int
    m: int
    seed: int
    regime: Regime
    checks: dict[str, bool]
    obstruction: dict[str, Any]
    verdict: Outcome
    reason: str
    timings_ms: dict[str, float] | None = None
    result: ObstructionResult | None = field(default=None, repr=False, compare=False)
    cocycle: IntersectionCocycle | None = field(default=None, repr=False, compare=False)
    pl_map: PLMap | None = field(default=None, repr=False, compare=False)

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema": SCHEMA_VERSION,
            "input": self.input,
            "r": self.r,
            "d": self.d,
            "m": self.m,
            "seed": self.seed,
            "regime": self.regime.value,
            "checks": self.checks,
            "obstruction": self.obstruction,
            "verdict": self.verdict.value,
            "reason": self.reason,
            "timings_ms": self.timings_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_text(self) -> str:
        """Tab-delimited key/value lines, then certificate lines."""
        lines = [
            f"verdict\t{self.verdict.value}",
            f"reason\t{self.reason}",
            f"regime\t{self.regime.value}",
            f"r\t{self.r}", f"d\t{self.d}", f"m\t{self.m}", f"seed\t{self.seed}",
            f"input\t{self.input['name']}\t{self.input['sha256']}",
        ]
        lines += [f"check.{k}\t{str(v).lower()}" for k, v in self.checks.items()]
        ob = self.obstruction
        for k in ("computed", "critical_orbits", "subcritical_orbits", "cocycle_support", "vanishes",
                  "equivariant_map_exists"):
            lines.append(f"obstruction.{k}\t{_text(ob.get(k))}")
        cert = ob.get("certificate")
        if cert and cert["kind"] == "coboundary":
            lines.append("certificate\tcoboundary")
            lines += [f"orbit\t{c}\t{v}" for c, v in cert["witness"].items()]
        elif cert:
            lines.append(f"certificate\tnonvanishing\t{cert['method']}")
            lines.append(f"violation\trow={_text(cert['row'])}\tdivisor={cert['divisor']}\tresidue={cert['residue']}")
            lines += [f"multiplier\t{c}\t{u}" for c, u in cert["combination"].items()]
        if self.timings_ms is not None:
            lines += [f"time_ms.{k}\t{v}" for k, v in self.timings_ms.items()]
        return "\n".join(lines) + "\n"


def _text(v) -> str:
    if v is None:
        return "null"
    if isinstance(v, bool):
        return str(v).lower()
    return str(v)


def describe_input(K: SimplicialComplex, name: str = "<stdin>") -> dict[str, Any]:
    return {
        "name": name,
        "f_vector": list(K.f_vector()),
        "sha256": hashlib.sha256(serialize(K).encode()).hexdigest(),
    }


def decide(K: SimplicialComplex, r: int, d: int, seed: int = 0, name: str = "<stdin>",
           timings: bool = False) -> Report:
    if len(K) == 0:
        raise ValueError("cannot decide on the empty complex")
    m = K.dim
    reg = regime(m, d, r)
    meta = check_metastable(m, d, r)
    checks = {
        "metastable": meta,
        "no_rfold_generic": no_rfold_generic(m, d, r),
        "trivial_map_exists": trivial_map_exists(m, d, r),
        "critical": reg is Regime.CRITICAL,
    }
    obstruction: dict[str, Any] = {
        "computed": False,
        "critical_orbits": None,
        "subcritical_orbits": None,
        "cocycle_support": None,
        "vanishes": None,
        "equivariant_map_exists": None,
        "certificate": None,
    }
    clock: dict[str, float] = {}
    t0 = time.perf_counter()

    def lap(key: str) -> None:
        nonlocal t0
        now = time.perf_counter()
        clock[key] = round((now - t0) * 1000, 3)
        t0 = now

    def report(outcome: Outcome, reason: str, result: ObstructionResult | None = None) -> Report:
        return Report(describe_input(K, name), r, d, m, seed, reg, checks, obstruction, outcome, reason,
                      clock if timings else None, result, state.get("c"), state.get("f"))

    state: dict[str, Any] = {}

    if reg is Regime.NO_RFOLD_GENERIC:
        obstruction["equivariant_map_exists"] = True
        return report(Outcome.EMBEDDABLE, "generic maps have no r-fold points since (r-1)d > rm")
    if reg is Regime.TRIVIAL_MAP_EXISTS:
        obstruction["equivariant_map_exists"] = True
        return report(Outcome.EMBEDDABLE,
                      "rm <= d(r-1)-1 gives an equivariant map for dimension reasons; metastable range holds")

    n = critical_dim(d, r)
    X = build_deleted_product(K, r, dims=[n - 1, n, n + 1])
    lap("deleted_product")
    f = sample_map(K, d, seed, X)
    lap("sample_map")
    c = assemble_cocycle(f, X)
    lap("cocycle")
    state.update(f=f, c=c)
    if not verify_cocycle(c, X):
        raise DecisionError("intersection cochain is not a cocycle")
    if not verify_equivariance(c):
        raise DecisionError("intersection cocycle violates the equivariance law")
    lap("verify")
    res = class_vanishes(X, c)
    lap("obstruction")
    obstruction.update({
        "computed": True,
        "critical_orbits": len(res.system.rows),
        "subcritical_orbits": len(res.system.cols),
        "cocycle_support": len(c.support()),
        "vanishes": res.vanishes,
        "certificate": res.certificate(),
    })

    if not res.vanishes:
        obstruction["equivariant_map_exists"] = False
        return report(Outcome.NOT_EMBEDDABLE,
                      "intersection class does not vanish, so no equivariant map and no almost r-embedding exist",
                      res)
    if reg is Regime.CRITICAL:
        obstruction["equivariant_map_exists"] = True
        if meta:
            return report(Outcome.EMBEDDABLE,
                          "intersection class vanishes in the critical dimension and the metastable range holds", res)
        return report(Outcome.UNDECIDED,
                      "equivariant map exists, but the parameters are outside the metastable range", res)
    return report(Outcome.UNDECIDED,
                  "primary obstruction vanishes; higher obstructions are needed since rm > d(r-1)", res)
