import random

import pytest

from conftest import load_fixture
from oracles import random_configuration
from wmideals.dual_complex import build_dual_complex
from wmideals.errors import DimensionMismatch, InsufficientHodgeData, InvalidInput, LcInconsistent
from wmideals.invariants import (
    CDimensionReport,
    c_dimensions,
    classify_lc_type,
    curve_branch_c2,
    surface_c_dims,
    transversal_rank,
)
from wmideals.mhs import SncConfiguration, hodge_0q_profile

FULL_DATA = [
    "example44",
    "elliptic_cone",
    "elliptic_cone_blownup",
    "cusp_cycle",
    "cycle4",
    "two_rational_two_points",
    "rational_chain",
    "two_cubics_nine_points",
]


def test_c_dimension_examples():
    report = c_dimensions(load_fixture("example44"), 3)
    assert report.dims == {2: 2, 3: 8} and report.total == 10
    assert c_dimensions(SncConfiguration.curves({"E": 1}, []), 3).dims == {2: 1, 3: 0}
    assert c_dimensions(load_fixture("cusp_cycle"), 3).dims == {2: 0, 3: 1}
    with pytest.raises(DimensionMismatch):
        c_dimensions(load_fixture("cusp_cycle"), 4)


def test_curve_branch_examples():
    assert curve_branch_c2(2) == 1
    assert curve_branch_c2(1) == 0
    assert curve_branch_c2(3) == 2
    with pytest.raises(InvalidInput):
        curve_branch_c2(0)


def test_surface_closed_form_examples():
    ex = load_fixture("example44")
    genera = [s.h(1) for s in ex.levels[0]]
    assert sorted(genera) == [0] * 9 + [1, 1]
    assert surface_c_dims(genera, build_dual_complex(ex)) == (2, 8)
    assert surface_c_dims([1], build_dual_complex(SncConfiguration.curves({"E": 1}, []))) == (1, 0)
    assert surface_c_dims([0, 0, 0], build_dual_complex(load_fixture("cusp_cycle"))) == (0, 1)
    with pytest.raises(InvalidInput):
        surface_c_dims([0, 0, 0], build_dual_complex(load_fixture("triple_point_surfaces")))


def test_surface_paths_agree_on_random_curve_configurations():
    rng = random.Random(21)
    checked = 0
    while checked < 40:
        cfg = random_configuration(rng, with_pullbacks=False)
        if cfg.dim_g != 1:
            continue
        genera = [s.h(1) for s in cfg.levels[0]]
        report = c_dimensions(cfg, 3)
        assert surface_c_dims(genera, build_dual_complex(cfg)) == (report.dims[2], report.dims[3])
        checked += 1


def test_classification_examples():
    lc = lambda dims: classify_lc_type(CDimensionReport(3, dims), True)
    assert lc({2: 1, 3: 0}).hodge_type == (0, 1)
    assert lc({2: 0, 3: 1}).hodge_type == (0, 0)
    with pytest.raises(LcInconsistent, match="inconsistent with log-canonical"):
        lc({2: 2, 3: 8})
    assert lc({2: 0, 3: 0}).kind == "rational-or-trivial"
    assert classify_lc_type(CDimensionReport(3, {2: 2, 3: 8}), False).kind == "unclassified"
    with pytest.raises(InsufficientHodgeData):
        classify_lc_type(CDimensionReport(4, {2: 0, 3: None, 4: 0}, {3: (0, 1)}), True)


def test_classification_only_for_a_single_one():
    for a in range(3):
        for b in range(3):
            report = CDimensionReport(3, {2: a, 3: b})
            try:
                t = classify_lc_type(report, True)
            except LcInconsistent:
                assert a + b > 1
                continue
            if t.hodge_type is not None:
                assert sorted((a, b)) == [0, 1]


def test_transversal_rank_examples():
    assert transversal_rank(SncConfiguration.curves({"E": 1}, []), 4, 1, 2) == 1
    assert transversal_rank(load_fixture("cusp_cycle"), 4, 1, 3) == 1
    assert transversal_rank(load_fixture("cusp_cycle"), 4, 1, 4) == 0
    with pytest.raises(DimensionMismatch):
        transversal_rank(load_fixture("cusp_cycle"), 3, 1, 2)
    with pytest.raises(InvalidInput):
        transversal_rank(load_fixture("cusp_cycle"), 4, 0, 2)


def test_transversal_rank_matches_slice_report():
    rng = random.Random(31)
    for _ in range(40):
        cfg = random_configuration(rng)
        for s in (1, 2):
            n = cfg.dim_g + 2 + s
            report = c_dimensions(cfg, n - s)
            for l in range(2, n - s + 1):
                assert transversal_rank(cfg, n, s, l) == report.dims[l]


def test_sum_identity_on_fixtures():
    for name in FULL_DATA:
        cfg = load_fixture(name)
        report = c_dimensions(cfg, 3)
        assert report.complete
        assert report.total == sum(e.dim for e in hodge_0q_profile(cfg, 1))


def test_incomplete_report():
    report = c_dimensions(load_fixture("elliptic_ruled_pair_nodata"), 4)
    assert report.dims[2] == 0 and report.dims[4] == 0
    assert report.dims[3] is None and report.bounds == {3: (0, 1)}
    assert report.total is None
    assert report.to_json()["bounds"] == {"3": {"lower": 0, "upper": 1}}


def test_resolution_independence():
    a = c_dimensions(load_fixture("elliptic_cone"), 3)
    b = c_dimensions(load_fixture("elliptic_cone_blownup"), 3)
    assert a.to_json() == b.to_json()
