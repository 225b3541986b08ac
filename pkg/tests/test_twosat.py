import random

import pytest

from dtgraphs.errors import IndexOutOfRange, LengthMismatch
from dtgraphs.oracles import brute_2sat
from dtgraphs.twosat import TwoSatInstance, evaluate, neg, pos, solve


def test_unit_clause():
    assert solve(TwoSatInstance(1, ((pos(0), pos(0)),))) == [True]


def test_contradiction():
    assert solve(TwoSatInstance(1, ((pos(0), pos(0)), (neg(0), neg(0))))) is None


def test_implication_chain():
    # x0, x0 -> x1, x1 -> x2, not x2 or not x0 : unsatisfiable
    inst = TwoSatInstance(3, ((pos(0), pos(0)), (neg(0), pos(1)), (neg(1), pos(2)), (neg(2), neg(0))))
    assert solve(inst) is None


def test_random_agrees_with_enumeration():
    rng = random.Random(8)
    for _ in range(300):
        clauses = [((rng.randrange(8), rng.random() < 0.5), (rng.randrange(8), rng.random() < 0.5))
                   for _ in range(20)]
        inst = TwoSatInstance(8, tuple(clauses))
        fast, slow = solve(inst), brute_2sat(inst)
        assert (fast is None) == (slow is None)
        if fast is not None:
            assert evaluate(inst, fast)


def test_evaluate_examples():
    assert evaluate(TwoSatInstance(2, ()), [False, True])
    inst = TwoSatInstance(2, ((pos(0), pos(1)),))
    assert evaluate(inst, [False, True])
    assert not evaluate(inst, [False, False])
    with pytest.raises(LengthMismatch):
        evaluate(inst, [True])


def test_variable_range_checked():
    with pytest.raises(IndexOutOfRange):
        TwoSatInstance(2, ((pos(0), neg(2)),))


def test_encoding():
    inst = TwoSatInstance.from_clauses(2, [(pos(0), neg(1))])
    assert inst.encoded() == [(0, 3)]


def test_empty_instance():
    assert solve(TwoSatInstance(0, ())) == []
    assert solve(TwoSatInstance(3, ())) is not None
