"""Exact 1-density: brute maximizer, min-cut maximizer, balance, profiles."""

import math
from fractions import Fraction
from itertools import combinations

import pytest

from hampower.braids import braid, s_braids
from hampower.density import (
    CapExceeded,
    braid_density,
    braid_density_gap_form,
    first_moment_profile,
    is_strictly_balanced,
    max_density_brute,
    max_density_opt,
    one_density,
    truncation_margin_high,
    truncation_margin_linear_factor,
    truncation_margin_low,
    verify_truncation_margins,
)
from hampower.graphs import Graph, complete_graph, path_power, sample_gnp
from hampower.thresholds import braid_density_limit


def disjoint_cliques(*sizes) -> Graph:
    edges = []
    off = 0
    for s in sizes:
        edges.extend((off + i, off + j) for i, j in combinations(range(s), 2))
        off += s
    return Graph(off, edges)


def naive_max_density(g: Graph) -> Fraction:
    best = Fraction(0)
    for k in range(2, g.n + 1):
        for sub in combinations(range(g.n), k):
            e = sum(1 for u, v in combinations(sub, 2) if g.has_edge(u, v))
            best = max(best, Fraction(e, k - 1))
    return best


def test_one_density():
    for ell in range(2, 9):
        assert one_density(complete_graph(ell)) == Fraction(ell, 2)
    assert one_density(Graph(2, [(0, 1)])) == 1
    assert one_density(braid(5, 3, 4)) == Fraction(58, 19)
    with pytest.raises(ValueError):
        one_density(Graph(1))


def test_max_density_brute_disjoint_cliques():
    rep = max_density_brute(disjoint_cliques(4, 3))
    assert rep.value == 2
    assert rep.witness == (0, 1, 2, 3)
    assert rep.method == "brute"


def test_max_density_brute_braid_is_argmax():
    # ell=4 < r(r+1)=12: the whole braid is the densest induced subgraph
    g = braid(4, 3, 3)
    rep = max_density_brute(g)
    assert rep.value == Fraction(30, 11)
    assert rep.witness == tuple(range(12))


def test_max_density_brute_empty_graph():
    rep = max_density_brute(Graph(5))
    assert rep.value == 0
    assert rep.witness == (0, 1)


def test_max_density_brute_matches_naive():
    for seed in range(8):
        g = sample_gnp(8, 0.45, 900 + seed)
        assert max_density_brute(g).value == naive_max_density(g)


def test_max_density_brute_cap():
    with pytest.raises(CapExceeded):
        max_density_brute(Graph(25), cap=20)


def test_max_density_opt_fixed():
    assert max_density_opt(complete_graph(5)).value == Fraction(5, 2)
    # powers of paths are strictly balanced, so the whole graph is the argmax
    assert max_density_opt(path_power(12, 2)).value == Fraction(21, 11)
    assert max_density_opt(Graph(4)).value == 0


def test_max_density_opt_two_isolated_edges():
    g = Graph(6, [(0, 1), (2, 3)])
    rep = max_density_opt(g)
    assert rep.value == 1 and rep.method == "optimized"


def test_max_density_opt_equals_brute_on_corpus():
    from hampower.graphs import induced_edge_count

    for seed in range(40):
        g = sample_gnp(12, 0.4, 7000 + seed)
        brute = max_density_brute(g)
        opt = max_density_opt(g)
        assert opt.value == brute.value
        # report invariant: the witness realizes the reported value
        for rep in (brute, opt):
            assert len(rep.witness) >= 2
            e = induced_edge_count(g, rep.witness)
            assert Fraction(e, len(rep.witness) - 1) == rep.value


def test_max_density_opt_equals_brute_on_denser_corpus():
    for seed in range(10):
        g = sample_gnp(14, 0.6, 8100 + seed)
        assert max_density_opt(g).value == max_density_brute(g).value


def test_braid_density_forms():
    assert braid_density(5, 3, 4) == Fraction(58, 19)
    # cross-check of the rewrite: 16/5 - 28/190
    assert Fraction(16, 5) - Fraction(28, 190) == Fraction(58, 19)
    for ell in range(2, 8):
        for r in range(1, ell + 1):
            for t in range(1, 8):
                assert braid_density(ell, r, t) == braid_density_gap_form(ell, r, t)
    for ell in range(2, 7):
        assert braid_density(ell, min(2, ell), 1) == Fraction(ell, 2)


def test_braid_density_strictly_increasing_in_braid_regime():
    for ell, r in [(4, 3), (5, 3), (3, 2), (7, 4)]:
        assert ell < r * (r + 1)
        prev = braid_density(ell, r, 1)
        for t in range(2, 51):
            cur = braid_density(ell, r, t)
            assert cur > prev
            prev = cur
        assert prev < braid_density_limit(ell + r, ell)


def test_braid_density_path_power_identity():
    # for ell in {r, r+1} the braid is a path power with density r - C(r,2)/(v-1)
    for r in range(2, 6):
        for ell in (r, r + 1):
            for t in range(1, 8):
                v = t * ell
                assert braid_density(ell, r, t) == r - Fraction(math.comb(r, 2), v - 1)


def test_is_strictly_balanced():
    for ell in range(2, 9):
        assert is_strictly_balanced(complete_graph(ell)) == (True, None)
    ok, witness = is_strictly_balanced(disjoint_cliques(4, 4))
    assert not ok
    assert witness == (0, 1, 2, 3)  # a proper K_4 ties the whole graph's maximum
    assert is_strictly_balanced(braid(4, 3, 3)) == (True, None)


def test_first_moment_profile_single_edge():
    g = Graph(2, [(0, 1)])
    rep = first_moment_profile(g, 100, 0.3)
    assert rep.log_whole == pytest.approx(2 * math.log(100) + math.log(0.3))
    assert rep.min_profile == (2, 1)


def test_first_moment_profile_braid_floor():
    # at p = C * n^(-1/d_t), C >= 1, every subgraph profile stays above C*n
    for ell, r, t in [(4, 3, 2), (5, 3, 2), (3, 2, 3)]:
        d = braid_density(ell, r, t)
        g = braid(ell, r, t)
        for n in (10, 100, 10000):
            for c in (1.0, 2.0):
                p = c * float(n) ** (-1 / float(d))
                if p >= 1.0:
                    continue
                rep = first_moment_profile(g, n, p)
                assert rep.log_min >= math.log(c * n) - 1e-9


def test_first_moment_profile_disconnected_not_minimal():
    g = s_braids(3, 1, 1, 2)  # two disjoint triangles
    rep = first_moment_profile(g, 50, 0.1)  # n p = 5 > 1
    assert rep.min_profile == (3, 3)  # a single triangle, never the whole graph


def test_first_moment_profile_domain():
    g = complete_graph(3)
    with pytest.raises(ValueError):
        first_moment_profile(g, 100, 0.0)
    with pytest.raises(ValueError):
        first_moment_profile(g, 100, 1.0)
    with pytest.raises(ValueError):
        first_moment_profile(Graph(3), 100, 0.5)  # no edges


def test_truncation_margin_low_values():
    assert truncation_margin_low(4, 3, 2, 0) == 12  # (ell-1)/2 * (r(r+1)-ell)
    for t in range(2, 7):
        for r in range(1, 6):
            ell = r * (r + 1)
            assert truncation_margin_low(ell, r, t, 0) == 0  # boundary case


def test_truncation_margin_factorization():
    for ell in range(4, 10):
        for r in range(1, ell - 1):
            for t in range(2, 6):
                for x in range(r + 1, ell):
                    g = truncation_margin_high(ell, r, t, x)
                    h = truncation_margin_linear_factor(ell, r, t, x)
                    assert 2 * g == (ell - x) * h


def test_verify_truncation_margins():
    rep = verify_truncation_margins(5, 3, 3)
    assert rep.ok
    assert all(row.positive for row in rep.rows)
    xs = [row.x for row in rep.rows]
    assert xs == [0, 1, 2, 3, 4]
    with pytest.raises(ValueError):
        verify_truncation_margins(4, 3, 2)  # r < ell - 1 fails
    with pytest.raises(ValueError):
        verify_truncation_margins(5, 3, 1)  # t >= 2 fails
    with pytest.raises(ValueError):
        verify_truncation_margins(12, 3, 2)  # ell < r(r+1) fails


def test_truncation_margins_against_subgraph_densities():
    """The margins are cross-multiplied density differences; check the sign
    against literally built truncated subgraphs."""
    from hampower.graphs import induced_subgraph

    ell, r, t = 5, 3, 3
    g = braid(ell, r, t)
    d = braid_density(ell, r, t)
    for x in range(0, ell):
        kept = list(range((t - 1) * ell + x))
        if len(kept) < 2:
            continue
        sub = induced_subgraph(g, kept)
        assert one_density(sub) < d
