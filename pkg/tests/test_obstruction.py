import pytest

from vankampen import complex as cx
from vankampen.delprod import build_deleted_product
from vankampen.genmaps import IntersectionCocycle, assemble_cocycle, sample_map
from vankampen.obstruction import (
    CoboundaryWitness, InconsistentCocycleError, build_equivariant_system, class_vanishes, differ_by_coboundary,
    verify_witness,
)
from vankampen.snf import solve_mod_p


def _setup(K, r, d, seed=1):
    n = d * (r - 1)
    X = build_deleted_product(K, r, dims=[n - 1, n, n + 1])
    return X, assemble_cocycle(sample_map(K, d, seed, X), X)


def test_system_shapes(k5, sigma4):
    X, c = _setup(sigma4, 3, 1)
    sys = build_equivariant_system(X, c)
    assert (sys.matrix.rows, sys.matrix.cols) == (25, 30)
    X, c = _setup(k5, 2, 2)
    sys = build_equivariant_system(X, c)
    assert sys.matrix.rows == 15
    zero = IntersectionCocycle({e: 0 for e in c.values}, 2, 2)
    assert not any(build_equivariant_system(X, zero).rhs)


def test_k5_nonvanishing(k5):
    X, c = _setup(k5, 2, 2)
    res = class_vanishes(X, c)
    assert not res.vanishes
    assert res.proof.check(res.system.matrix, res.system.rhs)
    cert = res.certificate()
    assert cert["kind"] == "nonvanishing" and cert["divisor"] == 2


def test_k5_nonvanishing_without_fast_path(k5):
    X, c = _setup(k5, 2, 2)
    res = class_vanishes(X, c, mod2_fast_path=False)
    assert not res.vanishes and res.method == "snf"
    assert res.proof.check(res.system.matrix, res.system.rhs)


def test_sigma4_needs_odd_torsion(sigma4):
    X, c = _setup(sigma4, 3, 1)
    res = class_vanishes(X, c)
    assert not res.vanishes
    assert res.method == "snf"
    assert res.proof.divisor % 3 == 0
    assert res.proof.check(res.system.matrix, res.system.rhs)
    assert not solve_mod_p(res.system.matrix, res.system.rhs, 3)


def test_no_critical_cells_vanishes():
    K = cx.simplex(2)
    X, c = _setup(K, 2, 2)
    assert X.cells(2) == ()
    res = class_vanishes(X, c)
    assert res.vanishes
    assert res.witness.assignment == {} or not any(res.witness.assignment.values())
    assert res.certificate() == {"kind": "coboundary", "witness": {}}


def test_k4_vanishes_with_witness():
    K = cx.complete_graph(4)
    X, c = _setup(K, 2, 2)
    res = class_vanishes(X, c)
    assert res.vanishes
    assert verify_witness(X, c, res.witness)
    assert res.certificate()["kind"] == "coboundary"


def test_bad_witness_rejected():
    K = cx.complete_graph(4)
    X, c = _setup(K, 2, 2)
    if not c.support():
        pytest.skip("planar sample")
    assert not verify_witness(X, c, CoboundaryWitness({}, 2))


def test_inconsistent_cocycle_rejected(k5):
    X, c = _setup(k5, 2, 2)
    bad = IntersectionCocycle(dict(c.values), 2, 2)
    bad.values[next(iter(bad.values))] += 1
    with pytest.raises(InconsistentCocycleError):
        class_vanishes(X, bad)


@pytest.mark.parametrize("s1,s2", [(0, 1), (2, 9), (4, 17)])
def test_finger_moves_k5(k5, s1, s2):
    X, c1 = _setup(k5, 2, 2, s1)
    _, c2 = _setup(k5, 2, 2, s2)
    res = differ_by_coboundary(X, c1, c2)
    assert res.vanishes
    assert verify_witness(X, c1 - c2, res.witness)


def test_finger_moves_sigma4(sigma4):
    X, c1 = _setup(sigma4, 3, 1, 3)
    _, c2 = _setup(sigma4, 3, 1, 8)
    res = differ_by_coboundary(X, c1, c2)
    assert res.vanishes
    assert verify_witness(X, c1 - c2, res.witness)


def test_witness_lines_format():
    w = CoboundaryWitness({((0,), (1,)): 2, ((0,), (2,)): 0}, 2)
    assert w.lines() == ["0|1\t2"]
