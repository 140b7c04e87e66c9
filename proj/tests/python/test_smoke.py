import math

import numpy as np
import pytest

import gbm_lab


def test_table_reproduces_published_minimums():
    published = [3.18, 8.96, 12.63, 15.9, 18.98, 21.93, 24.78, 27.57]
    rows = gbm_lab.table1()
    assert [b for b, _ in rows] == [0.01, 1, 2, 3, 4, 5, 6, 7]
    for (_, a), want in zip(rows, published):
        assert abs(a - want) <= 0.02


def test_generate_and_recover_circle_model():
    n = 2000
    inst = gbm_lab.gen_gbm(n, gbm_lab.scaled_radius(13, n), gbm_lab.scaled_radius(1, n), seed=3)
    assert inst.graph.num_vertices == n
    assert inst.embedding.shape == (n,)
    assert len(inst.labels) == n
    res = gbm_lab.recover_gbm1(inst.graph, 13, 1)
    assert res.stats.edges_total == inst.graph.num_edges
    m = gbm_lab.pair_f_score(res.labels, inst.labels)
    assert 0.0 <= m.f_score <= 1.0


def test_graph_text_round_trip():
    inst = gbm_lab.gen_gbm(500, 0.05, 0.01, seed=9)
    text = gbm_lab.write_graph(inst.graph)
    graph, t = gbm_lab.read_graph(text)
    assert t == 1
    assert graph == inst.graph
    assert graph.fingerprint() == inst.graph.fingerprint()
    rebuilt = gbm_lab.Graph(500, inst.graph.edges())
    assert rebuilt == inst.graph


def test_thresholds_and_errors():
    th = gbm_lab.thresholds_1d(5000, 13, 1)
    assert th.recoverable
    assert th.e_s == pytest.approx((2 + gbm_lab.solve_f1(1)) * math.log(5000) / 5000)
    assert gbm_lab.solve_f2(0.01) is None
    with pytest.raises(gbm_lab.GbmError, match="REGIME"):
        gbm_lab.thresholds_1d(5000, 1, 1)
    with pytest.raises(ValueError):
        gbm_lab.thresholds_hd(5000, 2, 0.3, 0.3)


def test_geometry_values():
    assert gbm_lab.cap_fraction(2, 0.6) == pytest.approx(0.09, abs=1e-12)
    assert gbm_lab.psi(2) == pytest.approx(4.0)


def test_sphere_recovery_with_locations():
    inst = gbm_lab.gen_gbm(1500, 0.3, 0.1, seed=4, t=2)
    assert inst.embedding.shape == (1500, 3)
    np.testing.assert_allclose(np.linalg.norm(inst.embedding, axis=1), 1.0, atol=1e-12)
    out = gbm_lab.recover_with_locations(inst.graph, inst.embedding, 0.3, 0.1)
    assert not out["conflict"]
    assert gbm_lab.node_error_rate(out["labels"], inst.labels) == 0.0


def test_dense_counts_queries():
    out = gbm_lab.dense_recover(10000, 2, 1.6, 0.4, seed=2)
    plan = out["plan"]
    n, h, g = 10000, plan.h, plan.g
    assert not plan.degenerate
    assert out["queries_used"] == h * (h - 1) // 2 + (n - h) * 2 * g
    assert out["fraction_probed"] < 0.2
    assert gbm_lab.node_error_rate(out["labels"], out["truth"]) <= 0.05


def test_phase_sweep_is_deterministic():
    grid = [(3.0, 0.0), (1.6, 1.3)]
    a = gbm_lab.phase_sweep(2000, grid, trials=4, seed=1)
    b = gbm_lab.phase_sweep(2000, grid, trials=4, seed=1, jobs=2)
    assert [p.connected_frac for p in a] == [p.connected_frac for p in b]
    assert a[0].connected_frac == 1.0
