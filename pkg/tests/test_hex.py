"""Hexagonal-grid transformation: points, runs, overlap removal, validation."""

import math

import pytest
from hypothesis import given, settings, strategies as st

from traintracks import (
    gen_dh_random,
    eliminate,
    trace_to_sequence,
    build_delta_tree,
    root_at_leaf,
    layout_upward_ortho,
    ortho_area,
    OrthoLayout,
    HexPoint,
    HexLayout,
    Run,
    UnresolvableOverlap,
    ortho_to_hex,
    expand_run,
    expand_all,
    resolve_overlaps,
    check_hex_valid,
    count_bends,
    hex_area,
    descriptor_field_count,
    hex_to_text,
    hex_from_text,
)


def hex_for(n, seed=0):
    g, trace = gen_dh_random(n, seed)
    t = build_delta_tree(g, trace_to_sequence(trace), validate=False)
    lay = layout_upward_ortho(root_at_leaf(t))
    return lay, resolve_overlaps(ortho_to_hex(lay))


def test_hexpoint_origin():
    assert HexPoint(0, 0).cartesian() == (0, 0)


def test_hexpoint_lattice_formula():
    assert HexPoint(u=2, v=1).cartesian() == (8, 4)
    assert HexPoint(u=2, v=1, slot="backup").cartesian() == (8, 5)


def test_ortho_to_hex_maps_nodes():
    lay = OrthoLayout({0: (0, 0), 1: (1, 2)}, [], 0)
    hx = ortho_to_hex(lay, validate=False)
    assert hx.nodes[0] == HexPoint(u=0, v=0)
    assert hx.nodes[1] == HexPoint(u=2, v=1)


def test_ortho_to_hex_run_kinds():
    lay = OrthoLayout({0: (0, 0), 1: (0, 1), 2: (1, 0)}, [(0, 1), (0, 2)], 0)
    hx = ortho_to_hex(lay, validate=False)
    kinds = {(r.a, r.b): r.kind for r in hx.runs}
    assert kinds == {(0, 1): "V", (0, 2): "U"}
    assert all(r.lane == "lower" for r in hx.runs)


def test_ortho_to_hex_rejects_invalid():
    bad = OrthoLayout({0: (0, 0), 1: (0, 0)}, [], 0)
    with pytest.raises(ValueError):
        ortho_to_hex(bad)


def test_expand_v_run_unit_step():
    hx = HexLayout({0: HexPoint(0, 0), 1: HexPoint(1, 0)}, [Run(0, 1, "V")], 0)
    assert expand_run(hx, hx.runs[0]) == [(0, 0), (0, 1), (2, 2)]


def test_expand_u_run_lower_unit_step():
    hx = HexLayout({0: HexPoint(0, 0), 1: HexPoint(0, 1)}, [Run(0, 1, "U")], 0)
    assert expand_run(hx, hx.runs[0]) == [(0, 0), (2, -1), (4, 0)]


def test_expand_u_run_upper_lane():
    hx = HexLayout({0: HexPoint(0, 0), 1: HexPoint(0, 1)}, [Run(0, 1, "U", "upper")], 0)
    pts = expand_run(hx, hx.runs[0])
    # Starts and ends at the nodes' primary points via vertical connectors.
    assert pts[0] == (0, 0) and pts[-1] == (4, 0)
    assert (2, 2) in pts


def test_expand_zero_length_run():
    hx = HexLayout({0: HexPoint(2, 3), 1: HexPoint(2, 3)}, [Run(0, 1, "V")], 0)
    assert expand_run(hx, hx.runs[0]) == [(16, 4)]


def test_expand_oriented_from_a_to_b():
    hx = HexLayout({0: HexPoint(2, 0), 1: HexPoint(0, 0)}, [Run(0, 1, "V")], 0)
    pts = expand_run(hx, hx.runs[0])
    assert pts[0] == hx.node_point(0) and pts[-1] == hx.node_point(1)


def test_expand_rejects_mismatched_curves():
    hx = HexLayout({0: HexPoint(0, 0), 1: HexPoint(1, 1)}, [Run(0, 1, "V")], 0)
    with pytest.raises(ValueError):
        expand_run(hx, hx.runs[0])


def test_expand_all_keys():
    _, hx = hex_for(12, seed=1)
    polys = expand_all(hx)
    assert set(polys) == {(r.a, r.b) for r in hx.runs}


def test_resolve_no_conflicts_is_identity():
    _, hx = hex_for(20, seed=2)
    again = resolve_overlaps(hx)
    assert again.nodes == hx.nodes and again.runs == hx.runs


def test_resolve_separates_conflicting_arrivals():
    # At node 2 a leftward u-curve run and an upward v-curve run arrive on
    # the same cell side; a lane flip separates them.
    hx = HexLayout(
        {0: HexPoint(1, 0), 1: HexPoint(0, 1), 2: HexPoint(1, 1), 3: HexPoint(1, 2)},
        [Run(0, 2, "U"), Run(1, 2, "V"), Run(2, 3, "U")],
        0,
    )
    assert any("edge overlap" in v for v in check_hex_valid(hx))
    fixed = resolve_overlaps(hx)
    assert check_hex_valid(fixed) == []
    assert {r.lane for r in fixed.runs} == {"lower", "upper"}


def test_resolve_reports_unresolvable():
    # Two v-curve runs out of node 0 share their first side; v-runs have no
    # alternate lane and the slot flip cannot separate them.
    hx = HexLayout(
        {0: HexPoint(0, 0), 1: HexPoint(1, 0), 2: HexPoint(2, 0)},
        [Run(0, 1, "V"), Run(0, 2, "V")],
        0,
    )
    with pytest.raises(UnresolvableOverlap):
        resolve_overlaps(hx)


def test_check_valid_on_pipeline():
    for seed in range(15):
        _, hx = hex_for(4 + seed * 7, seed)
        assert check_hex_valid(hx) == [], seed


def test_check_detects_planted_overlap():
    hx = HexLayout(
        {0: HexPoint(0, 0), 1: HexPoint(1, 0), 2: HexPoint(2, 0)},
        [Run(0, 2, "V"), Run(1, 2, "V")],
        0,
    )
    assert any("edge overlap" in v for v in check_hex_valid(hx))


def test_check_detects_illegal_slope():
    hx = HexLayout(
        {0: HexPoint(0, 0), 1: HexPoint(1, 0)},
        [Run(0, 1, "V")],
        0,
        polylines={(0, 1): [(0, 0), (2, 2)]},
    )
    assert any("illegal slope" in v for v in check_hex_valid(hx))


def test_check_detects_detached_polyline():
    hx = HexLayout(
        {0: HexPoint(0, 0), 1: HexPoint(1, 0)},
        [Run(0, 1, "V")],
        0,
        polylines={(0, 1): [(0, 0), (0, 1)]},
    )
    assert any("does not connect" in v for v in check_hex_valid(hx))


def test_check_detects_node_collision():
    hx = HexLayout({0: HexPoint(0, 0), 1: HexPoint(0, 0)}, [], 0)
    assert any("position collision" in v for v in check_hex_valid(hx))


def test_count_bends_examples():
    no_run = HexLayout({0: HexPoint(0, 0)}, [], 0)
    assert count_bends(no_run) == (0, 0)
    one_step = HexLayout({0: HexPoint(0, 0), 1: HexPoint(1, 0)}, [Run(0, 1, "V")], 0)
    assert count_bends(one_step) == (1, 1)
    zero_len = HexLayout({0: HexPoint(0, 0), 1: HexPoint(0, 0)}, [Run(0, 1, "V")], 0)
    assert count_bends(zero_len) == (0, 0)


def test_hex_area_single_node():
    assert hex_area(HexLayout({0: HexPoint(0, 0)}, [], 0)) == 1


def test_hex_area_k2_within_lattice_scaling():
    lay, hx = hex_for(2)
    assert ortho_area(lay) == 2
    assert hex_area(hx) <= 8 * ortho_area(lay)


def test_descriptor_fields_linear():
    for n in (8, 32, 128):
        _, hx = hex_for(n, seed=3)
        assert descriptor_field_count(hx) == 3 * len(hx.runs)
        assert descriptor_field_count(hx) <= 6 * n


def test_node_count_preserved():
    lay, hx = hex_for(50, seed=4)
    assert set(hx.nodes) == set(lay.positions)
    hx2 = resolve_overlaps(hx)
    assert set(hx2.nodes) == set(lay.positions)


@given(seed=st.integers(0, 10**9), n=st.integers(2, 40))
@settings(max_examples=40, deadline=None)
def test_pipeline_always_valid(seed, n):
    _, hx = hex_for(n, seed)
    assert check_hex_valid(hx) == []


def test_text_round_trip():
    _, hx = hex_for(18, seed=5)
    restored = hex_from_text(hex_to_text(hx))
    assert restored.nodes == hx.nodes
    assert sorted(restored.runs, key=lambda r: (r.a, r.b)) == sorted(
        hx.runs, key=lambda r: (r.a, r.b)
    )
    assert restored.root == hx.root


def test_text_polylines_round_trip():
    _, hx = hex_for(10, seed=6)
    text = hex_to_text(hx, include_polylines=True)
    restored = hex_from_text(text)
    assert restored.polylines == expand_all(hx)
    assert check_hex_valid(restored) == []


def test_text_rejects_garbage():
    with pytest.raises(ValueError, match="line 1"):
        hex_from_text("blob")
