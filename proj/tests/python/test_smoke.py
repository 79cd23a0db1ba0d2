import numpy as np
import pytest

import lartpy


def test_multiplex_roundtrip(tmp_path):
    m = lartpy.Multiplex(num_nodes=5, num_layers=2)
    m.add_edge(0, 0, 1)
    m.add_edge(1, 2, 3)
    assert m.num_nodes == 5
    assert m.num_layers == 2
    assert m.num_edges() == 2
    path = str(tmp_path / "net.edges")
    lartpy.write_multiplex(m, path)
    back = lartpy.read_multiplex(path)
    assert back.num_edges() == 2
    assert back.has_edge(1, 2, 3)


def test_generate_is_deterministic():
    m1, t1 = lartpy.generate("s1", seed=7)
    m2, t2 = lartpy.generate("s1", seed=7)
    assert m1.num_edges() == m2.num_edges()
    assert t1 == t2
    assert len(t1) == m1.num_nodes * m1.num_layers


def test_detect_recovers_planted_communities():
    m, truth = lartpy.generate("s2", seed=3)
    res = lartpy.detect(m)
    labels = res["labels"]
    assert len(labels) == m.num_nodes * m.num_layers
    assert res["num_communities"] >= 2
    expanded = lartpy.expand_background(truth, m.num_nodes, m.num_layers)
    assert lartpy.nmi(expanded, labels) > 0.5


def test_dissimilarity_is_a_metric():
    m, _ = lartpy.generate("s1", seed=11)
    s = lartpy.dissimilarity(m, t=4)
    nl = m.num_nodes * m.num_layers
    assert s.shape == (nl, nl)
    assert np.allclose(s, s.T)
    assert np.all(np.diag(s) == 0.0)
    assert np.all(s >= 0.0)


def test_transition_power_rows_sum_to_one():
    m, _ = lartpy.generate("s1", seed=11)
    p = lartpy.transition_power(m, t=3)
    assert np.allclose(p.sum(axis=1), 1.0, atol=1e-12)


def test_metrics_basics():
    a = [0, 0, 1, 1]
    b = [1, 1, 0, 0]
    assert lartpy.nmi(a, b) == pytest.approx(1.0)
    assert lartpy.fowlkes_mallows(a, b) == pytest.approx(1.0)
    c = [0, 1, 0, 1]
    assert lartpy.nmi(a, c) == pytest.approx(0.0, abs=1e-12)


def test_fixed_omega_baseline_runs():
    m, _ = lartpy.generate("s1", seed=5)
    res = lartpy.detect(m, fixed_omega=1.0)
    assert res["num_communities"] >= 1
    assert len(res["q_scores"]) >= 1
