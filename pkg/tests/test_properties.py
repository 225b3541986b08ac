"""Randomized invariants driven by hypothesis."""
from fractions import Fraction
from itertools import combinations
from math import comb

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from dtgraphs.generators import gen_dt, gen_threshold, gen_unit_interval
from dtgraphs.graph import bfs_layers, build_graph, is_connected, read_edge_list, write_edge_list
from dtgraphs.metrics import diameter, dt_ordering, intersection_number, min_layers
from dtgraphs.oracles import (
    brute_2sat, brute_find_induced, brute_force_is_dt, brute_is_chordal,
    brute_min_edge_clique_cover, brute_triangle_count,
)
from dtgraphs.patterns import BULL, C4, K13, NET, P4, SUN3, TWO_K2, find_induced, is_chordal
from dtgraphs.recognition import (
    Decomposition, is_p_admissible, is_unit_interval, p_max_partition, recognize, vicinal_preorder,
)
from dtgraphs.twosat import TwoSatInstance, evaluate, solve
from dtgraphs.weights import WeightAssignment, _layer_masks, _r0_holds, _rl_holds, edge_exists, \
    verify_dt

SETTINGS = settings(max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow])
PATTERNS = (TWO_K2, C4, P4, K13, BULL, NET, SUN3)


@st.composite
def graphs(draw, lo=1, hi=8):
    n = draw(st.integers(lo, hi))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [e for e, k in zip(pairs, keep) if k])


rationals = st.builds(Fraction, st.integers(1, 48), st.sampled_from([1, 2, 4]))


@st.composite
def dt_instances(draw, lo=1, hi=14):
    beta = draw(st.builds(Fraction, st.integers(1, 8), st.just(2)))
    alpha = beta + draw(st.builds(Fraction, st.integers(0, 12), st.just(2)))
    w = draw(st.lists(rationals, min_size=lo, max_size=hi))
    return gen_dt(alpha, beta, w), WeightAssignment(alpha, beta, tuple(w))


@st.composite
def instances(draw):
    nv = draw(st.integers(1, 12))
    lit = st.tuples(st.integers(0, nv - 1), st.booleans())
    clauses = draw(st.lists(st.tuples(lit, lit), max_size=3 * nv))
    return TwoSatInstance(nv, tuple(clauses))


@SETTINGS
@given(graphs(1, 12))
def test_degree_sum_and_round_trip(g):
    assert sum(g.degree(v) for v in range(g.n)) == 2 * g.num_edges
    h = read_edge_list(write_edge_list(g))
    assert h.n == g.n and sorted(h.edges()) == sorted(g.edges())


@SETTINGS
@given(graphs(1, 12), st.data())
def test_bfs_layers_partition(g, data):
    seed = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1))
    d = bfs_layers(g, seed)
    seen = set()
    for layer in d.layers:
        assert not seen & layer
        seen |= layer
    assert seen | d.unreached == set(range(g.n)) and not seen & d.unreached
    at = {v: l for l, layer in enumerate(d.layers) for v in layer}
    assert all(abs(at[u] - at[v]) <= 1 for u, v in g.edges() if u in at and v in at)


@SETTINGS
@given(graphs(1, 8), st.sampled_from(PATTERNS))
def test_find_induced_agrees_with_oracle(g, pat):
    fast = find_induced(g, pat)
    assert (fast is None) == (brute_find_induced(g, pat) is None)
    if fast is not None:
        assert fast.verify(g)


@settings(deadline=None)
@given(st.sampled_from(PATTERNS))
def test_pattern_self_match(pat):
    assert find_induced(pat.as_graph(), pat) is not None


@SETTINGS
@given(graphs(1, 8))
def test_chordality_agrees_with_oracle(g):
    ok, witness = is_chordal(g)
    assert ok == brute_is_chordal(g)
    if witness is not None:
        assert witness.verify(g)


@SETTINGS
@given(instances())
def test_twosat_agrees_with_oracle(inst):
    fast = solve(inst)
    assert (fast is None) == (brute_2sat(inst) is None)
    if fast is not None:
        assert evaluate(inst, fast)


@SETTINGS
@given(graphs(1, 7))
def test_recognition_sound_and_complete(g):
    c = recognize(g)
    assert c.verify(g)
    if c.is_dt:
        assert verify_dt(g, c.weights)[0]
    assert c.is_dt == brute_force_is_dt(g)


@SETTINGS
@given(dt_instances())
def test_closure_and_synthesis_invariants(inst):
    g, _ = inst
    c = recognize(g)
    assert c.is_dt and verify_dt(g, c.weights)[0]
    wa = c.weights
    a, b, w = wa.alpha, wa.beta, wa.w
    assert all(x >= (a - b) / 2 for x in w)
    if not isinstance(c, Decomposition):
        return
    d = c.decomposition
    masks = _layer_masks(d)
    c0 = sorted(d.layers[0])
    assert all((a - b) / 2 < w[i] < (a + b) / 2 for i in c0)
    rest = [v for layer in d.layers[1:] for v in layer]
    assert all(w[i] + w[j] >= a for i, j in combinations(rest, 2))
    for i in c0:
        for j in c0:
            if i != j and w[i] < w[j]:
                assert _r0_holds(g.bits, i, j)
    for l in range(1, len(d.layers)):
        for i in d.layers[l]:
            for j in d.layers[l]:
                if i != j and w[i] < w[j]:
                    assert _rl_holds(g.bits, masks[l - 1], masks[l + 1], i, j)


@SETTINGS
@given(dt_instances(1, 9))
def test_cover_and_triangle_identities(inst):
    g, wa = inst
    ordering = dt_ordering(g, wa)
    count, cover = intersection_number(g, ordering)
    assert cover.verify(g) and count == brute_min_edge_clique_cover(g)
    assert sum(comb(ordering.d_plus(k), 2) for k in range(g.n)) == brute_triangle_count(g)


@SETTINGS
@given(dt_instances(2, 14))
def test_diameter_sandwich(inst):
    g, _ = inst
    c = recognize(g)
    if isinstance(c, Decomposition) and is_connected(g) and c.decomposition.m >= 1:
        m = c.decomposition.m
        assert m <= diameter(g) <= m + 1


@SETTINGS
@given(dt_instances(2, 10))
def test_min_layers_monotone(inst):
    g, _ = inst
    if not is_connected(g):
        return
    hits = [min_layers(g, m) is not None for m in range(g.n + 1)]
    if True in hits:
        assert all(hits[hits.index(True):])


@SETTINGS
@given(st.lists(st.integers(0, 1), min_size=1, max_size=10))
def test_threshold_graphs(bits):
    g = gen_threshold(bits)
    assert vicinal_preorder(g).is_total()
    assert recognize(g).is_dt
    if is_connected(g) and g.n >= 2:
        assert diameter(g) <= 2


@SETTINGS
@given(st.lists(rationals, min_size=1, max_size=32), st.integers(1, 6))
def test_unit_interval_generator(w, beta):
    g = gen_unit_interval(w, beta)
    wa, witness = is_unit_interval(g)
    assert witness is None and verify_dt(g, wa)[0]


@SETTINGS
@given(rationals, rationals, rationals, rationals, st.integers(1, 9))
def test_edge_rule_symmetric_and_scale_free(x, y, beta, extra, k):
    alpha = beta + extra
    assert edge_exists(x, y, alpha, beta) == edge_exists(y, x, alpha, beta)
    assert edge_exists(x, y, alpha, beta) == edge_exists(k * x, k * y, k * alpha, k * beta)


@SETTINGS
@given(dt_instances())
def test_weight_json_round_trip(inst):
    _, wa = inst
    assert WeightAssignment.from_json(wa.to_json()) == wa


@SETTINGS
@given(graphs(2, 7), st.data())
def test_p_max_partition_is_admissible(g, data):
    if not is_connected(g) or find_induced(g, NET) or find_induced(g, SUN3) or not is_chordal(g)[0]:
        return
    p = data.draw(st.integers(0, g.n - 1))
    part = p_max_partition(g, p)
    if part is not None:
        assert is_p_admissible(g, part).ok
