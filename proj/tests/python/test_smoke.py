import pytest

import stableset as ss

CYCLE_WITH_TAIL = ss.DecisionProblem(4, [(0, 1), (1, 2), (2, 0), (0, 3)])
FOUR_CYCLE = ss.DecisionProblem(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


def test_set_valued_concepts():
    assert ss.core(CYCLE_WITH_TAIL) == []
    for method in ("condensation", "deb", "brute"):
        assert ss.schwartz_set(CYCLE_WITH_TAIL, method) == [0, 1, 2]
    assert ss.duggan_set(CYCLE_WITH_TAIL) == [0, 1, 2]


def test_families():
    assert ss.solutions(FOUR_CYCLE, "vnm") == [[0, 2], [1, 3]]
    assert ss.solutions(CYCLE_WITH_TAIL, "ess") == [[0], [1], [2]]
    assert ss.solutions(CYCLE_WITH_TAIL, "sss", "restrict") == [[0, 1], [0, 2], [0, 1, 2]]
    assert ss.solutions(CYCLE_WITH_TAIL, "sss", "closure") == [[0, 1, 2]]
    assert ss.enumerate_solutions(CYCLE_WITH_TAIL, "wss") == [[0], [1], [2]]


def test_contraction_and_pairs():
    c = ss.contraction(CYCLE_WITH_TAIL)
    assert c["classes"] == [[0, 1, 2], [3]]
    assert c["cond"] == [(0, 1)]
    generators = {x for g, _, top in ss.undominated_pairs(CYCLE_WITH_TAIL) if top for x in g}
    assert sorted(generators) == ss.duggan_set(CYCLE_WITH_TAIL)


def test_cross_verify_random():
    for seed in range(50):
        p = ss.random_problem(7, 0.5, seed)
        for concept in ("gss", "mss", "wss", "ess", "vnm"):
            assert ss.cross_verify(p, concept)["pass"]


def test_round_trip_and_errors():
    p = ss.random_problem(6, 0.4, 3)
    assert ss.parse_instance(ss.serialize_instance(p)) == p
    assert ss.parse_instance(ss.serialize_instance(p, "edgelist")) == p
    with pytest.raises(ss.StablesetError):
        ss.DecisionProblem(2, [(1, 1)])
    with pytest.raises(IndexError):
        ss.DecisionProblem(2, [(0, 5)])
    with pytest.raises(ValueError):
        ss.solutions(p, "sss", "sideways")
