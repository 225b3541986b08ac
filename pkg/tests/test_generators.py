import pytest

from dtgraphs.errors import EmptySequence, InvalidParameters, UnknownName
from dtgraphs.generators import (
    NAMED_FIXTURES, WeightDistribution, gen_dt, gen_layered_dt, gen_random_dt, gen_threshold,
    gen_unit_interval, named_fixture, random_unit_interval,
)
from dtgraphs.graph import is_connected
from dtgraphs.patterns import BULL, C4, NET, find_induced
from dtgraphs.recognition import is_threshold, recognize
from dtgraphs.weights import verify_dt


def _edges(g):
    return sorted(g.edges())


def test_gen_threshold_examples():
    assert _edges(gen_threshold([0, 1])) == [(0, 1)]
    g = gen_threshold([0, 0, 1, 1])
    assert _edges(g) == [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    assert is_threshold(g)
    assert _edges(gen_threshold([0, 0, 0])) == []
    with pytest.raises(EmptySequence):
        gen_threshold([])


def test_gen_unit_interval_examples():
    assert _edges(gen_unit_interval([1, 2, 3], 1)) == [(0, 1), (1, 2)]
    assert gen_unit_interval([2, 2, 2, 2], 1).num_edges == 6
    assert gen_unit_interval([1, 5, 9], 100).num_edges == 3
    with pytest.raises(InvalidParameters):
        gen_unit_interval([1, 2], 0)


def test_gen_dt_examples():
    assert _edges(gen_dt(10, 2, [5, 7, 4])) == [(0, 1)]
    assert gen_dt(3, 3, [3, 4, 5, 6]).num_edges == 6
    want = [(i, j) for i in range(5) for j in range(i + 1, 5)
            if (4 + i) + (4 + j) >= 10 and j - i <= 2]
    assert _edges(gen_dt(10, 2, [4, 5, 6, 7, 8])) == want


def test_gen_random_dt_deterministic():
    a = gen_random_dt(20, 2, 1, WeightDistribution.uniform(0, 4, seed=3))
    b = gen_random_dt(20, 2, 1, WeightDistribution.uniform(0, 4, seed=3))
    assert _edges(a[0]) == _edges(b[0]) and a[1] == b[1]
    c = gen_random_dt(20, 2, 1, WeightDistribution.uniform(0, 4, seed=4))
    assert a[1] != c[1]


def test_gen_random_dt_below_half_alpha_is_edgeless():
    g, _ = gen_random_dt(30, 2, 1, WeightDistribution.uniform(0.01, 0.99, seed=1))
    assert g.num_edges == 0


def test_gen_random_dt_closure_and_weights():
    for seed in range(50):
        dist = WeightDistribution.gaussian(1.5, 1.0, seed) if seed % 2 else \
            WeightDistribution.uniform(0, 4, seed)
        g, wa = gen_random_dt(10 + seed % 15, 2, 1, dist)
        assert all(x > 0 for x in wa.w)
        assert verify_dt(g, wa)[0]
        assert recognize(g).is_dt


def test_distribution_validation():
    with pytest.raises(InvalidParameters):
        WeightDistribution.uniform(3, 1)
    with pytest.raises(InvalidParameters):
        WeightDistribution.gaussian(1, 0)
    with pytest.raises(InvalidParameters):
        gen_random_dt(0, 2, 1, WeightDistribution.uniform(0, 1))


def test_random_unit_interval_is_accepted():
    for seed in range(30):
        g = random_unit_interval(1 + seed, seed)
        assert recognize(g).kind == "unit-interval"


def test_gen_layered_dt_connected_and_dt():
    for seed in range(20):
        g = gen_layered_dt([2, 2, 2], seed)
        assert g.n == 6 and is_connected(g) and recognize(g).is_dt


def test_named_fixtures():
    for name, pat in (("C4", C4), ("net", NET), ("bull", BULL)):
        g = named_fixture(name)
        assert g.n == len(pat.bits) and g.num_edges == pat.as_graph().num_edges
        assert find_induced(g, pat) is not None
    for name in NAMED_FIXTURES:
        named_fixture(name)
    with pytest.raises(UnknownName):
        named_fixture("petersen")
