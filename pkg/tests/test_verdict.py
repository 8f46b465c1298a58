import json

import pytest

from vankampen import complex as cx
from vankampen.verdict import Outcome, Regime, check_metastable, decide, no_rfold_generic, regime, trivial_map_exists


@pytest.mark.parametrize("m,d,r,expected", [(1, 3, 2, True), (1, 2, 2, False), (2, 5, 3, True), (3, 6, 2, True)])
def test_metastable_examples(m, d, r, expected):
    assert check_metastable(m, d, r) is expected


@pytest.mark.parametrize("m,d,r,expected", [
    (1, 2, 2, Regime.CRITICAL),
    (1, 3, 2, Regime.TRIVIAL_MAP_EXISTS),
    (3, 2, 2, Regime.HIGHER_OBSTRUCTION),
    (4, 2, 3, Regime.HIGHER_OBSTRUCTION),
    (2, 4, 2, Regime.CRITICAL),
    (6, 3, 3, Regime.HIGHER_OBSTRUCTION),
    (1, 2, 3, Regime.NO_RFOLD_GENERIC),
])
def test_regime_examples(m, d, r, expected):
    assert regime(m, d, r) is expected


def test_regime_is_a_partition():
    for m in range(0, 21):
        for d in range(1, 21):
            for r in range(2, 7):
                reg = regime(m, d, r)
                if r * m < d * (r - 1):
                    assert no_rfold_generic(m, d, r) and trivial_map_exists(m, d, r)
                    assert reg in (Regime.NO_RFOLD_GENERIC, Regime.TRIVIAL_MAP_EXISTS)
                    assert (reg is Regime.TRIVIAL_MAP_EXISTS) == check_metastable(m, d, r)
                elif r * m == d * (r - 1):
                    assert reg is Regime.CRITICAL
                else:
                    assert reg is Regime.HIGHER_OBSTRUCTION


@pytest.mark.parametrize("bad", [(1, 0, 2), (1, 2, 1)])
def test_bad_parameters(bad):
    with pytest.raises(ValueError):
        regime(*bad)


def test_k5_plane(k5):
    rep = decide(k5, 2, 2, seed=1)
    assert rep.verdict is Outcome.NOT_EMBEDDABLE
    assert rep.regime is Regime.CRITICAL
    assert rep.obstruction["critical_orbits"] == 15
    assert rep.obstruction["certificate"]["kind"] == "nonvanishing"


def test_k5_space(k5):
    rep = decide(k5, 2, 3)
    assert rep.verdict is Outcome.EMBEDDABLE
    assert rep.regime is Regime.TRIVIAL_MAP_EXISTS
    assert rep.checks["metastable"]
    assert not rep.obstruction["computed"]


def test_k5_three_fold_in_plane(k5):
    rep = decide(k5, 3, 2)
    assert rep.regime is Regime.NO_RFOLD_GENERIC
    assert rep.verdict is Outcome.EMBEDDABLE


@pytest.mark.parametrize("r,d", [(3, 1), (2, 2)])
def test_tverberg_small(r, d):
    rep = decide(cx.tverberg_complex(r, d), r, d, seed=3)
    assert rep.verdict is Outcome.NOT_EMBEDDABLE


def test_k4_outside_metastable_range():
    rep = decide(cx.complete_graph(4), 2, 2)
    assert rep.regime is Regime.CRITICAL
    assert rep.obstruction["vanishes"]
    assert rep.verdict is Outcome.UNDECIDED


def test_triangle_higher_obstruction():
    rep = decide(cx.simplex(2), 2, 2)
    assert rep.regime is Regime.HIGHER_OBSTRUCTION
    assert rep.verdict is Outcome.UNDECIDED


def test_van_kampen_flores_three_dimensional():
    rep = decide(cx.simplex_skeleton(8, 3), 2, 6, seed=1)
    assert rep.regime is Regime.CRITICAL and rep.checks["metastable"]
    assert rep.verdict is Outcome.NOT_EMBEDDABLE


def test_three_skeleton_of_seven_simplex_embeds():
    rep = decide(cx.simplex_skeleton(7, 3), 2, 6, seed=1)
    assert rep.obstruction["vanishes"]
    assert rep.obstruction["certificate"]["kind"] == "coboundary"
    assert rep.verdict is Outcome.EMBEDDABLE


def test_soundness_split():
    """YES answers come only from dimension counts or a vanishing class in the metastable range."""
    cases = [(cx.complete_graph(5), 2, 2), (cx.complete_graph(5), 2, 3), (cx.complete_graph(4), 2, 2),
             (cx.simplex(2), 2, 2), (cx.simplex_skeleton(7, 3), 2, 6), (cx.simplex(4), 3, 1)]
    for K, r, d in cases:
        rep = decide(K, r, d)
        if rep.verdict is Outcome.EMBEDDABLE:
            assert rep.regime in (Regime.NO_RFOLD_GENERIC, Regime.TRIVIAL_MAP_EXISTS) or (
                rep.regime is Regime.CRITICAL and rep.checks["metastable"] and rep.obstruction["vanishes"])
        if rep.verdict is Outcome.NOT_EMBEDDABLE:
            assert rep.obstruction["vanishes"] is False


def test_report_shapes(k5):
    rep = decide(k5, 2, 2, seed=1, name="k5.txt")
    data = json.loads(rep.to_json())
    assert set(data) == {"schema", "input", "r", "d", "m", "seed", "regime", "checks", "obstruction", "verdict",
                         "reason", "timings_ms"}
    assert data["input"]["name"] == "k5.txt"
    assert data["input"]["f_vector"] == [5, 10]
    assert data["timings_ms"] is None
    assert decide(k5, 2, 2, seed=1, timings=True).timings_ms
    text = rep.to_text()
    assert text.startswith("verdict\tNotAlmostREmbeddable\n")
    assert "certificate\tnonvanishing\tmod2" in text


def test_empty_complex_rejected():
    with pytest.raises(ValueError):
        decide(cx.closure([]), 2, 2)
