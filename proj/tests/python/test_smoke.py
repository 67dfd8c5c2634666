"""Smoke tests for the python bindings: one pass over every exposed surface."""

import pytest

import kspread as ks

TRIANGLE_STAR = "a b\nb c\nc a\nx l1\nx l2\nx l3\nx l4\n"


def test_parse_and_graph_accessors():
    g = ks.parse_edge_list(TRIANGLE_STAR)
    assert g.node_count == 8
    assert g.edge_count == 7
    assert g.degree(g.id_of("x")) == 4
    assert g.label(0) == "a"
    assert g.id_of("nope") is None
    assert sorted(g.neighbors(g.id_of("a"))) == [g.id_of("b"), g.id_of("c")]
    back = ks.parse_edge_list(ks.to_edge_list(g))
    assert back == g


def test_parse_error_carries_line():
    with pytest.raises(ValueError, match="line 2"):
        ks.parse_edge_list("a b\noops\n")


def test_generators():
    g = ks.erdos_renyi(30, 0.2, seed=1)
    assert g.node_count == 30
    h = ks.barabasi_albert(50, 2, seed=3)
    assert h.edge_count == 2 * (50 - 2) + 1


def test_decomposition():
    g = ks.parse_edge_list(TRIANGLE_STAR)
    sa = ks.k_shell_decompose(g)
    assert sa.core_index == 2
    assert sa.shell_index[g.id_of("a")] == 2
    assert sa.shell_index[g.id_of("l1")] == 1
    pops = ks.shell_populations(sa)
    assert pops == [(1, 5), (2, 3)]


def test_centrality():
    g = ks.parse_edge_list(TRIANGLE_STAR)
    dg = ks.degree_centrality(g)
    assert dg.scores[g.id_of("x")] == 4.0
    ev = ks.eigenvector_centrality(g)
    assert ev.converged
    assert max(ev.scores) == 1.0
    pr = ks.pagerank(g)
    assert abs(sum(pr.scores) - 1.0) < 1e-9


def test_seeding():
    g = ks.parse_edge_list(TRIANGLE_STAR)
    sa = ks.k_shell_decompose(g)
    ksp = ks.select_ks_p(sa, g, 4)
    assert len(ksp.members) == 4
    assert [(t.shell, t.quota, t.selected) for t in ksp.allocation_trace] == [
        (2, 2, 2),
        (1, 2, 2),
    ]
    assert ks.allocate_proportional([(3, 40), (2, 60), (1, 100)], 10) == [2, 3, 5]
    top = ks.select_seeds(ks.SeedAlgo.degree, g, 1)
    assert top.members == [g.id_of("x")]


def test_simulation():
    g = ks.parse_edge_list(TRIANGLE_STAR)
    seeds = [g.id_of("a")]
    once = ks.simulate_once(g, seeds, beta=1.0, rng_seed=7)
    assert once.informed_count == 3  # the star component is unreachable

    cfg = ks.SimConfig()
    cfg.beta = 0.5
    cfg.realizations = 200
    cfg.master_seed = 11
    agg = ks.simulate_mean(g, seeds, cfg)
    assert 0.0 < agg.mean_coverage <= 3.0 / 8.0
    again = ks.simulate_mean(g, seeds, cfg)
    assert again.coverages == agg.coverages


def test_version():
    assert ks.__version__
