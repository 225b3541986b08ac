from fractions import Fraction

import pytest

from cases import complete, cycle, layered_case, path, random_dt_case
from dtgraphs.errors import BoundViolated, Disconnected, NoTriplets, NotRealizing
from dtgraphs.generators import gen_threshold, named_fixture
from dtgraphs.graph import DistanceDecomposition, bfs_layers, build_graph, is_connected
from dtgraphs.metrics import (
    clustering_coefficient, diameter, diameter_bound_check, dt_ordering, intersection_number,
    metrics_report, min_layers, minimum_layers,
)
from dtgraphs.oracles import brute_min_edge_clique_cover, brute_min_layers, brute_triangle_count
from dtgraphs.recognition import Decomposition, is_p_admissible, recognize
from dtgraphs.weights import WeightAssignment


def _weights(g):
    return recognize(g).weights


def test_dt_ordering_examples():
    k3 = complete(3)
    assert dt_ordering(k3, WeightAssignment(2, 1, (1, 1, 1))).order == (0, 1, 2)
    g = named_fixture("fig2-shape")
    wa = WeightAssignment(10, 2, (7, 5, 4))
    trio, _ = g.induced([1, 0, 2])
    assert dt_ordering(trio, wa).order == (2, 1, 0)
    p = path(4)
    assert dt_ordering(p, WeightAssignment(2, 1, (2, 3, 4, 5))).order == (0, 1, 2, 3)


def test_dt_ordering_rejects_wrong_weights():
    with pytest.raises(NotRealizing):
        dt_ordering(path(3), WeightAssignment(2, 1, (1, 1, 1)))


def test_intersection_number_examples():
    count, cover = intersection_number(complete(3), dt_ordering(complete(3), _weights(complete(3))))
    assert count == 1 and cover.to_json() == [[0, 1, 2]]
    count, cover = intersection_number(path(3), dt_ordering(path(3), _weights(path(3))))
    assert count == 2 and sorted(cover.to_json()) == [[0, 1], [1, 2]]
    e = build_graph(3, [])
    count, cover = intersection_number(e, dt_ordering(e, WeightAssignment(2, 1, ("1/2", "1/2", "1/2"))))
    assert count == 0 and cover.to_json() == []


def test_intersection_number_matches_oracle():
    for seed in range(150):
        g, wa = random_dt_case(seed, 1, 10)
        count, cover = intersection_number(g, dt_ordering(g, wa))
        assert count == brute_min_edge_clique_cover(g) and cover.verify(g)


def test_diameter_examples():
    assert diameter(complete(3)) == 1
    assert diameter(path(4)) == 3
    assert diameter(cycle(6)) == 3
    with pytest.raises(Disconnected):
        diameter(build_graph(2, []))


def test_diameter_bound_check():
    g = path(4)
    d = bfs_layers(g, {0})
    assert diameter_bound_check(g, d) == (3, 0)
    # C1 adjacent to every C0 vertex and nothing else: diameter equals m
    g = build_graph(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
    assert diameter_bound_check(g, bfs_layers(g, {0, 1})) == (1, 1)
    g = build_graph(3, [(0, 1), (0, 2)])
    assert diameter_bound_check(g, bfs_layers(g, {0, 1})) == (1, 1)
    g = complete(3)
    assert diameter_bound_check(g, bfs_layers(g, {0})) == (1, 0)
    bad = DistanceDecomposition((frozenset({0, 1, 2, 3}),))
    with pytest.raises(BoundViolated):
        diameter_bound_check(path(4), bad)


def test_diameter_bound_on_generated_graphs():
    checked = 0
    for seed in range(400):
        g = layered_case(seed, max_n=12)
        c = recognize(g)
        if isinstance(c, Decomposition) and c.decomposition.m >= 1 and is_connected(g):
            m, lam = diameter_bound_check(g, c.decomposition)
            assert lam in (0, 1)
            checked += 1
    assert checked > 50


def test_min_layers_examples():
    thr = gen_threshold([0, 1, 0, 1])
    found = min_layers(thr, 0)
    assert found is not None
    p, part = found
    assert part.vt == frozenset(range(4))
    assert min_layers(path(4), 0) is None
    assert min_layers(path(4), -1) is None


def test_min_layers_partitions_are_admissible():
    for seed in range(60):
        g = layered_case(seed)
        for m in range(1, 4):
            found = min_layers(g, m)
            if found is not None:
                assert is_p_admissible(g, found[1]).ok


def test_min_layers_sweep_matches_oracle_and_is_monotone():
    for seed in range(80):
        g = layered_case(seed)
        want = brute_min_layers(g)
        hits = [min_layers(g, m) is not None for m in range(g.n + 1)]
        assert (hits.index(True) if any(hits) else None) == want
        if want is not None:
            assert all(hits[want:])


def test_minimum_layers_on_threshold():
    assert minimum_layers(gen_threshold([0, 0, 1, 1]))[0] == 0
    assert minimum_layers(named_fixture("C4")) is None


def test_clustering_examples():
    k3 = complete(3)
    assert clustering_coefficient(k3, dt_ordering(k3, _weights(k3))) == 1
    p3 = path(3)
    assert clustering_coefficient(p3, dt_ordering(p3, _weights(p3))) == 0
    k2 = complete(2)
    with pytest.raises(NoTriplets):
        clustering_coefficient(k2, dt_ordering(k2, _weights(k2)))


def test_clustering_matches_triangle_count():
    for seed in range(100):
        g, wa = random_dt_case(seed, 3, 40)
        triplets = sum(g.degree(v) * (g.degree(v) - 1) // 2 for v in range(g.n))
        if not triplets:
            continue
        c = clustering_coefficient(g, dt_ordering(g, wa))
        assert c == Fraction(3 * brute_triangle_count(g), triplets)


def test_metrics_report_k3_and_p3():
    k3 = complete(3)
    doc = metrics_report(k3, _weights(k3))
    assert doc["intersection_number"] == 1 and doc["diameter"] == 1
    assert doc["clustering"] == "1/1" and doc["m"] == 0 and doc["lambda"] is None
    doc = metrics_report(path(3), _weights(path(3)))
    assert doc["clustering"] == "0/1" and doc["intersection_number"] == 2


def test_metrics_report_disconnected():
    g = build_graph(4, [(0, 1)])
    doc = metrics_report(g, _weights(g))
    assert doc["diameter"] is None and doc["m"] is None and doc["clustering"] is None
