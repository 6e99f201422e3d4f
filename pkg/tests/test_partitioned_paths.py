"""Partitioned paths: segments, edge counts, normalization, structure checks."""

import random
from fractions import Fraction
from math import comb

import pytest

from hampower.partitioned_paths import (
    BudgetExceeded,
    PartitionedPath,
    SegmentList,
    check_edge_floor_exhaustive,
    clique_free,
    far_edges,
    far_pair_count,
    iter_valid_label_masks,
    m6_structure_check,
    m9_structure_check,
    mask_to_labels,
    normalize,
    normalized_edge_closed_form,
    same_side_edge_count,
    same_side_edge_floor,
    same_side_edges,
    segments,
    spanning_power_check,
    window_side_counts,
)
from hampower.thresholds import braid_density_limit, optimal_ell


def random_valid_path(rng: random.Random, m: int, L: int) -> PartitionedPath:
    """Uniform-ish valid labeling via run lengths in [1, m]."""
    labs = []
    side = rng.choice("AB")
    while len(labs) < L:
        labs.extend(side * rng.randint(1, m))
        side = "A" if side == "B" else "B"
    return PartitionedPath(m, "".join(labs[:L]))


def test_segments_examples():
    assert segments(PartitionedPath(3, "AABBB")) == SegmentList((2, 3), "A")
    assert segments(PartitionedPath(4, "AAAA")) == SegmentList((4,), "A")
    assert segments(PartitionedPath(2, "ABAB")) == SegmentList((1, 1, 1, 1), "A")


def test_segment_list_round_trip():
    seg = SegmentList((2, 3, 1), "B")
    assert seg.to_labels() == "BBAAAB"
    assert segments(PartitionedPath(3, seg.to_labels())) == seg


def test_validity():
    assert PartitionedPath(3, "AAABBB").is_valid()
    assert not PartitionedPath(3, "AAAAB").is_valid()
    assert PartitionedPath(2, "").is_valid()


def test_same_side_edges_examples():
    m = 5
    count, pairs = same_side_edges(PartitionedPath(m, "A" * m))
    assert count == comb(m, 2)
    assert same_side_edge_count(PartitionedPath(2, "ABABAB")) == 4
    count, pairs = same_side_edges(PartitionedPath(3, "AAABBB"))
    assert count == 6
    assert ((0, 1) in pairs) and ((3, 5) in pairs)


def test_same_side_edge_count_matches_pair_list():
    rng = random.Random(11)
    for _ in range(200):
        m = rng.randint(2, 7)
        p = random_valid_path(rng, m, rng.randint(1, 40))
        count, pairs = same_side_edges(p)
        assert count == same_side_edge_count(p) == len(pairs)


def test_edge_floor_values():
    assert same_side_edge_floor(2, 10) == Fraction(1, 2) * 10 - 8 == -3
    assert same_side_edge_floor(5, 100) == 125
    assert same_side_edge_floor(3, 40) == 22


def test_normalize_already_normal():
    res = normalize(PartitionedPath(4, "AABBAABB"))
    assert res.segments == SegmentList((2, 2, 2, 2), "A")
    assert res.transcript == []
    assert res.slack == 0


def test_normalize_oversized_first_run():
    # the initiation trims the oversized first run, then the oversize case
    # trims the enlarged second segment
    res = normalize(PartitionedPath(3, "AAAAABB"))
    assert res.segments == SegmentList((3, 3, 1), "A")
    assert [s.op for s in res.transcript] == ["init-split", "case1"]
    assert res.original_edges == 10 and res.normalized_edges == 6


def test_normalize_small_prefix_merge():
    res = normalize(PartitionedPath(3, "ABAAAA"))
    assert res.segments == SegmentList((2, 3, 1), "B")
    assert res.transcript[0].op == "init-merge"


def test_normalize_shift_and_final_merge():
    # (3,1,1,3) at m=4: two pull-across shifts repair the middle, the jointly
    # small final pair is merged outright
    res = normalize(PartitionedPath(4, "AAABABBB"))
    ops = [s.op for s in res.transcript]
    assert ops == ["case2-shift", "case2-shift", "case3"]
    assert res.segments == SegmentList((3, 3, 2), "A")


def test_normalize_emptying_shift_merges_neighbors():
    # (4,1,1,1,4) at m=4: the middle singleton empties and its neighbors fuse
    res = normalize(PartitionedPath(4, "AAAABABAAAA"))
    assert any(s.op == "case2-merge" for s in res.transcript)
    assert res.segments.is_normalized(4)


def test_normalize_single_segment_inputs():
    res = normalize(PartitionedPath(5, "AAA"))
    assert res.segments == SegmentList((3,), "A")
    assert res.transcript == []
    res = normalize(PartitionedPath(2, "A"))
    assert res.segments == SegmentList((1,), "A")


def test_normalize_total_below_m_merges_everything():
    res = normalize(PartitionedPath(9, "ABABA"))
    assert res.segments == SegmentList((5,), "A")
    assert 2 * res.slack <= 64


def test_normalize_budget():
    with pytest.raises(BudgetExceeded):
        normalize(PartitionedPath(4, "AAABAABBB"), budget=1)


def test_normalize_contract_exhaustive_small():
    for m in (2, 3, 4):
        for L in range(1, 13):
            for mask in iter_valid_label_masks(L, m):
                p = PartitionedPath(m, mask_to_labels(mask, L))
                res = normalize(p)
                assert res.segments.is_normalized(m)
                assert res.segments.total == L
                assert normalized_edge_closed_form(res.segments, m) == res.normalized_edges
                assert 2 * res.slack <= (m - 1) ** 2
                assert res.steps <= 4 * L * L


def test_normalize_contract_random():
    rng = random.Random(20260810)
    for _ in range(2000):
        m = rng.randint(2, 9)
        L = rng.randint(1, 200)
        p = random_valid_path(rng, m, L)
        res = normalize(p)
        assert res.segments.is_normalized(m)
        assert normalized_edge_closed_form(res.segments, m) == res.normalized_edges
        assert 2 * res.slack <= (m - 1) ** 2


def test_normalized_term_sum_dominates_floor():
    # sum x_i * f(x_i) >= f(ell_m) * L, the per-segment density bound
    rng = random.Random(5)
    for _ in range(300):
        m = rng.randint(2, 9)
        p = random_valid_path(rng, m, rng.randint(1, 80))
        seg = normalize(p).segments
        total = sum(x * braid_density_limit(m, x) for x in seg.sizes)
        floor = braid_density_limit(m, optimal_ell(m)) * seg.total
        assert total >= floor


def test_closed_form_matches_direct_enumeration():
    rng = random.Random(77)
    for _ in range(300):
        m = rng.randint(2, 9)
        p = random_valid_path(rng, m, rng.randint(1, 60))
        seg = normalize(p).segments
        direct = same_side_edge_count(seg.to_path(m))
        assert normalized_edge_closed_form(seg, m) == direct


def test_check_edge_floor_exhaustive_small():
    rows = check_edge_floor_exhaustive(2, 12)
    assert all(r.ok for r in rows)
    # vacuous at tiny L: bound is negative there
    assert rows[2].floor == Fraction(1, 2) * 3 - 8
    rows3 = check_edge_floor_exhaustive(3, 12)
    assert all(r.ok for r in rows3)
    assert all(r.minimizer is not None for r in rows3)


def test_far_counts():
    m = 4
    assert far_edges(PartitionedPath(m, "A" * m), "A", 1) == m - 1
    assert far_edges(PartitionedPath(2, "ABAB"), "A", 1) == 1
    assert far_pair_count(PartitionedPath(2, "ABAB"), "A", 1) == 1
    assert far_pair_count(PartitionedPath(2, "ABAB"), "A", 3) == 0
    with pytest.raises(ValueError):
        far_edges(PartitionedPath(2, "AB"), "A", 0)


def test_spanning_power_check():
    p = PartitionedPath(6, "AAAABBB" * 2)
    assert spanning_power_check(p, "A", 2)
    assert spanning_power_check(p, "B", 2)
    assert spanning_power_check(PartitionedPath(6, "A" * 6), "A", 6)
    # far A-pair separated by a long B-run is not an edge
    q = PartitionedPath(3, "ABBBA")
    assert not spanning_power_check(q, "A", 1)


def test_window_side_counts_and_clique_free():
    p = PartitionedPath(6, "AAAABBB")
    assert window_side_counts(p, 7) == [(4, 3)]
    assert clique_free(p, 5)
    assert not clique_free(PartitionedPath(6, "AABAABA" + "B" * 3), 5)


def test_m6_structure_blocks():
    p = PartitionedPath(6, ("AAAA" + "BBB") * 4)
    rep = m6_structure_check(p)
    assert rep.ok
    assert rep.precondition_ok
    assert rep.far12_edges == 2 * 28 - 6
    assert rep.identity_2l6
    assert 4 * rep.far3_edges >= 28 - 6


def test_m6_structure_precondition_violations():
    rep = m6_structure_check(PartitionedPath(6, "AABAA" + "B" * 6))  # 6-run of B
    assert not rep.precondition_ok and not rep.ok
    rep = m6_structure_check(PartitionedPath(6, "AABAABA" * 2))  # 5 As in 7-window
    assert not rep.precondition_ok
    with pytest.raises(ValueError):
        m6_structure_check(PartitionedPath(5, "AAB"))


def test_m6_structure_exhaustive_sample():
    for L in (7, 10, 13):
        for mask in iter_valid_label_masks(L, 6):
            p = PartitionedPath(6, mask_to_labels(mask, L))
            if not clique_free(p, 5):
                continue
            rep = m6_structure_check(p)
            assert rep.ok, p.labels
            assert rep.identity_2l6, p.labels  # sides forced nondegenerate at L >= 7


def test_m9_structure_blocks():
    p = PartitionedPath(9, ("AAAAA" + "BBBBB") * 3)
    rep = m9_structure_check(p)
    assert rep.ok
    assert rep.far123_edges == 3 * 30 - 12
    assert rep.identity_3l12
    # no 5-far edges in the 5-block pattern, so the 4-far bound is saturated
    assert rep.z == 0
    assert rep.w == 30 - 8


def test_m9_structure_z_zero_forces_many_w():
    for reps in (2, 3):
        p = PartitionedPath(9, ("AAAAA" + "BBBBB") * reps)
        rep = m9_structure_check(p)
        if rep.z == 0:
            assert rep.w >= rep.L - 8


def test_m9_structure_exhaustive_sample():
    for L in (10, 12):
        for mask in iter_valid_label_masks(L, 9):
            p = PartitionedPath(9, mask_to_labels(mask, L))
            if not clique_free(p, 7):
                continue
            rep = m9_structure_check(p)
            assert rep.ok, p.labels
            assert rep.identity_3l12, p.labels
