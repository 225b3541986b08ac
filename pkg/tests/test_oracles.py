import random

import pytest

from cases import all_graphs_5, complete, cycle, path, random_connected
from dtgraphs.errors import TooLarge
from dtgraphs.generators import named_fixture
from dtgraphs.oracles import (
    MAX_2SAT, MAX_COVER, MAX_DT, MAX_INDUCED, brute_2sat, brute_find_induced, brute_force_is_dt,
    brute_is_chordal, brute_is_unit_interval, brute_min_edge_clique_cover, brute_min_layers,
    brute_triangle_count, lp_realizable, valid_seeds,
)
from dtgraphs.patterns import BULL, C4, K13, NET, P4, SUN3, TWO_K2, find_induced, is_chordal
from dtgraphs.recognition import is_unit_interval, recognize
from dtgraphs.twosat import TwoSatInstance, evaluate, neg, pos, solve


def test_brute_force_is_dt_examples():
    assert not brute_force_is_dt(named_fixture("C4"))
    assert brute_force_is_dt(complete(3))
    assert not brute_force_is_dt(named_fixture("net"))
    assert brute_force_is_dt(named_fixture("K13"))


def test_edge_clique_cover_examples():
    assert brute_min_edge_clique_cover(complete(3)) == 1
    assert brute_min_edge_clique_cover(path(3)) == 2
    # every maximal clique of the 4-cycle is a single edge
    assert brute_min_edge_clique_cover(cycle(4)) == 4
    assert brute_min_edge_clique_cover(complete(5)) == 1


def test_triangle_count_examples():
    assert brute_triangle_count(complete(3)) == 1
    assert brute_triangle_count(complete(4)) == 4
    assert brute_triangle_count(cycle(4)) == 0


def test_brute_2sat_lexicographic():
    inst = TwoSatInstance(2, ((pos(0), pos(1)),))
    assert brute_2sat(inst) == [False, True]
    inst = TwoSatInstance(1, ((pos(0), pos(0)), (neg(0), neg(0))))
    assert brute_2sat(inst) is None
    assert brute_2sat(TwoSatInstance(0, ())) == []


def test_brute_find_induced_examples():
    assert brute_find_induced(cycle(4), C4) is not None
    assert brute_find_induced(complete(4), P4) is None
    w = brute_find_induced(named_fixture("bull"), BULL)
    assert w is not None and w.verify(named_fixture("bull"))


def test_caps_raise():
    big = path(MAX_DT + 1)
    with pytest.raises(TooLarge):
        brute_force_is_dt(big)
    with pytest.raises(TooLarge):
        brute_min_edge_clique_cover(path(MAX_COVER + 1))
    with pytest.raises(TooLarge):
        brute_find_induced(path(MAX_INDUCED + 1), P4)
    with pytest.raises(TooLarge):
        brute_2sat(TwoSatInstance(MAX_2SAT + 1, ()))
    with pytest.raises(TooLarge):
        brute_min_layers(big)


def test_subgraph_search_agrees_with_oracle(graphs5):
    for g in graphs5:
        for pat in (TWO_K2, C4, P4, K13, BULL):
            fast = find_induced(g, pat)
            slow = brute_find_induced(g, pat)
            assert (fast is None) == (slow is None)
            if fast is not None:
                assert fast.verify(g)
    for s in range(150):
        g = random_connected(s)
        for pat in (NET, SUN3, K13):
            assert (find_induced(g, pat) is None) == (brute_find_induced(g, pat) is None)


def test_chordal_and_unit_interval_agree(graphs5):
    for g in graphs5:
        assert is_chordal(g)[0] == brute_is_chordal(g)
        assert (is_unit_interval(g)[0] is not None) == brute_is_unit_interval(g)


def test_twosat_agrees_with_oracle():
    rng = random.Random(2)
    for _ in range(300):
        nv = rng.randint(1, 10)
        clauses = tuple(((rng.randrange(nv), rng.random() < 0.5), (rng.randrange(nv), rng.random() < 0.5))
                        for _ in range(rng.randint(0, 3 * nv)))
        inst = TwoSatInstance(nv, clauses)
        fast, slow = solve(inst), brute_2sat(inst)
        assert (fast is None) == (slow is None)
        if fast is not None:
            assert evaluate(inst, fast) and evaluate(inst, slow)


def test_valid_seeds_are_nonempty_and_cover_component():
    g = named_fixture("K13")
    seeds = list(valid_seeds(g))
    assert seeds
    for c0, layers in seeds:
        assert c0 and set().union(*layers) == set(range(4))


def test_milp_route_agrees_on_n5(graphs5):
    # three independent routes: recognizer, C0 enumeration, MILP
    for g in graphs5[::4]:
        fast = recognize(g).is_dt
        assert fast == brute_force_is_dt(g) == lp_realizable(g)


@pytest.mark.slow
def test_milp_route_agrees_on_random_graphs():
    for s in range(60):
        g = random_connected(s, 6, 8)
        assert recognize(g).is_dt == lp_realizable(g)


def test_all_graphs_5_count():
    assert len(all_graphs_5()) == 1024
