"""
Structure Search Tests

The code is licensed under the MIT license.
"""

import numpy as np
import pytest
from textpgm.core.exceptions import InvalidStructure
from textpgm.enumerations.metric import Metric
from textpgm.enumerations.search import Search
from textpgm.interface.network import Dag, DiscreteData, ScoreConfig, naive_structure
from textpgm.bayesnet.hillclimb import (
    random_structure,
    search_hill_climb,
    search_repeated_hill_climb,
)
from textpgm.bayesnet.k2 import search_k2
from textpgm.bayesnet.lagd import search_lagd
from textpgm.bayesnet.moves import Move, candidate_moves, move_delta
from textpgm.bayesnet.scores import ScoreCache, network_score
from textpgm.bayesnet.structure import learn_structure
from textpgm.bayesnet.tabu import search_tabu


def _copy_data():
    """
    Feature 2 copies feature 1, feature 3 is noise
    """

    rng = np.random.default_rng(4)
    classes = np.array([0, 1] * 8)
    first = np.array([0, 0, 1, 1] * 4)
    noise = rng.integers(0, 2, size=16)

    return DiscreteData(np.column_stack([classes, first, first, noise]), [2, 2, 2, 2])


def _chain_data(rows=200, seed=1):
    """
    Class -> X1 -> X2 -> X3 with noisy copies
    """

    rng = np.random.default_rng(seed)
    classes = rng.integers(0, 2, size=rows)
    x1 = np.where(rng.random(rows) < 0.9, classes, 1 - classes)
    x2 = np.where(rng.random(rows) < 0.9, x1, 1 - x1)
    x3 = np.where(rng.random(rows) < 0.9, x2, 1 - x2)

    return DiscreteData(np.column_stack([classes, x1, x2, x3]), [2, 2, 2, 2])


def test_dag_rejects_cycles():
    """
    Cyclic parent lists are not a DAG
    """

    with pytest.raises(InvalidStructure):
        Dag(3, [(), (2,), (1,)])


def test_validate_class_root():
    """
    The class must be a root and a parent of every feature
    """

    with pytest.raises(InvalidStructure):
        Dag(3, [(), (0,), ()]).validate()

    naive_structure(3).validate(max_parents=0)


def test_moves_leave_class_alone():
    """
    No move touches an arc of the class variable
    """

    dag = Dag(4, [(), (0,), (0, 1), (0,)])
    moves = candidate_moves(dag, max_parents=2)

    assert moves
    assert all(move.parent >= 1 and move.child >= 1 for move in moves)
    assert Move("delete", 1, 2) in moves
    assert Move("reverse", 1, 2) in moves
    assert Move("add", 2, 1) not in moves


def test_move_inverse():
    """
    A move followed by its inverse restores the graph
    """

    dag = Dag(4, [(), (0,), (0, 1), (0,)])

    for move in candidate_moves(dag, max_parents=2):
        assert move.inverse().apply(move.apply(dag)) == dag


def test_k2_adds_copy_edge():
    """
    A copied feature takes its original as parent
    """

    dag = search_k2(_copy_data(), ScoreConfig(Metric.K2), order=(1, 2, 3))

    assert dag.parents[2] == (0, 1)
    assert dag.parents[1] == (0,)


def test_k2_without_parents():
    """
    No feature parents allowed gives the naive structure
    """

    dag = search_k2(_copy_data(), ScoreConfig(Metric.K2, max_parents=0))

    assert dag == naive_structure(4)


def test_k2_bad_order():
    """
    The order must cover the features exactly once
    """

    with pytest.raises(ValueError):
        search_k2(_copy_data(), ScoreConfig(), order=(1, 1, 2))


def test_mdl_independent_features():
    """
    Independent features gain no arcs under MDL
    """

    rng = np.random.default_rng(9)
    data = DiscreteData(rng.integers(0, 2, size=(2000, 4)), [2, 2, 2, 2])

    assert search_k2(data, ScoreConfig(Metric.MDL)) == naive_structure(4)
    assert search_hill_climb(data, ScoreConfig(Metric.MDL)) == naive_structure(4)


def test_hill_climb_trace_increases():
    """
    Every accepted move raises the network score
    """

    trace = []
    cfg = ScoreConfig(Metric.BDEU, alpha=1.0)
    data = _chain_data()
    dag = search_hill_climb(data, cfg, trace=trace)

    assert len(trace) > 1
    assert all(b > a for a, b in zip(trace, trace[1:]))
    assert trace[-1] == pytest.approx(network_score(data, dag, cfg))


def test_hill_climb_fixpoint():
    """
    A local optimum is returned unchanged
    """

    cfg = ScoreConfig(Metric.BDEU, alpha=1.0)
    data = _chain_data()
    optimum = search_hill_climb(data, cfg)

    assert search_hill_climb(data, cfg, start=optimum) == optimum


def test_hill_climb_no_steps():
    """
    A zero step budget returns the starting structure
    """

    assert search_hill_climb(_chain_data(), ScoreConfig(), max_steps=0) == naive_structure(4)


def test_hill_climb_chain_arcs():
    """
    The chain's feature links are recovered in some direction
    """

    dag = search_hill_climb(_chain_data(), ScoreConfig(Metric.BDEU, alpha=1.0))
    links = {frozenset(edge) for edge in dag.edges() if 0 not in edge}

    assert frozenset((1, 2)) in links
    assert frozenset((2, 3)) in links


def test_random_structure_is_valid():
    """
    Random starting points satisfy the classifier constraints
    """

    rng = np.random.default_rng(0)

    for _ in range(20):
        random_structure(6, 2, rng).validate(max_parents=2)


def test_repeated_hill_climb():
    """
    Restarts never do worse than a single climb and are seeded
    """

    data = _chain_data(seed=5)
    cfg = ScoreConfig(Metric.K2)

    single = network_score(data, search_hill_climb(data, cfg), cfg)
    first = search_repeated_hill_climb(data, cfg, restarts=4, seed=2)
    second = search_repeated_hill_climb(data, cfg, restarts=4, seed=2)

    assert first == second
    assert network_score(data, first, cfg) >= single - 1e-9


@pytest.mark.parametrize("seed", range(20))
def test_lagd_single_step_is_hill_climb(seed):
    """
    One step of look-ahead reproduces hill climbing
    """

    data = _chain_data(rows=60 + 10 * seed, seed=seed)
    cfg = ScoreConfig(list(Metric)[seed % len(Metric)], alpha=1.0)

    lagd = search_lagd(data, cfg, look_ahead=1, good_ops=100)
    climbed = search_hill_climb(data, cfg)

    assert network_score(data, lagd, cfg) == pytest.approx(
        network_score(data, climbed, cfg), abs=1e-9
    )


def test_lagd_not_worse_than_start():
    """
    Deeper look-ahead still improves on the naive structure
    """

    data = _chain_data(seed=3)
    cfg = ScoreConfig(Metric.BDEU, alpha=1.0)
    dag = search_lagd(data, cfg, look_ahead=2, good_ops=3)

    assert network_score(data, dag, cfg) >= network_score(data, naive_structure(4), cfg)


def test_tabu_never_undoes_recent_moves():
    """
    The inverse of a move is not taken within the tabu window
    """

    moves = []
    search_tabu(_chain_data(), ScoreConfig(Metric.K2), tabu_length=3, max_steps=15, moves=moves)

    assert len(moves) == 15
    for position, move in enumerate(moves):
        for earlier in moves[max(0, position - 3) : position]:
            assert move != earlier.inverse()


def test_tabu_deterministic():
    """
    Same parameters give the same structure, never worse than the start
    """

    data = _chain_data(seed=7)
    cfg = ScoreConfig(Metric.MDL)
    first = search_tabu(data, cfg, tabu_length=4, max_steps=20)

    assert first == search_tabu(data, cfg, tabu_length=4, max_steps=20)
    assert network_score(data, first, cfg) >= network_score(data, naive_structure(4), cfg)


def test_learn_structure_dispatch():
    """
    Searches are chosen by name
    """

    data = _chain_data()
    cfg = ScoreConfig(Metric.K2)

    assert learn_structure(data, cfg, Search.NAIVE) == naive_structure(4)
    assert learn_structure(data, cfg, "k2") == search_k2(data, cfg)
    assert learn_structure(data, cfg, "tabu", max_steps=5) == search_tabu(data, cfg, max_steps=5)


def test_move_delta_is_local():
    """
    A single arc change alters only the affected family terms
    """

    data = _chain_data(seed=8)
    cfg = ScoreConfig(Metric.BDEU, alpha=1.0)
    dag = Dag(4, [(), (0,), (0, 1), (0,)])
    cache = ScoreCache(data, cfg)

    for move in candidate_moves(dag, max_parents=2):
        expected = network_score(data, move.apply(dag), cfg) - network_score(data, dag, cfg)
        assert move_delta(cache, dag, move) == pytest.approx(expected, abs=1e-9)


# Step budgets keeping the slower searches short
SEARCH_LIMITS = {
    Search.HILL_CLIMB: {"max_steps": 30},
    Search.REPEATED_HILL_CLIMB: {"max_steps": 30, "restarts": 3, "seed": 1},
    Search.LAGD: {"max_steps": 15, "look_ahead": 2, "good_ops": 3},
    Search.TABU: {"max_steps": 15, "tabu_length": 3},
}


def _wide_data(rows=150, seed=0):
    """
    Class plus five features, some copying others with noise
    """

    rng = np.random.default_rng(seed)
    values = np.zeros((rows, 6), dtype=np.int64)
    values[:, 0] = rng.integers(0, 2, size=rows)

    for var in range(1, 6):
        source = values[:, rng.integers(0, var)]
        noise = rng.integers(0, 2, size=rows)
        values[:, var] = np.where(rng.random(rows) < 0.75, source, noise)

    return DiscreteData(values, [2] * 6)


def _topological_order(dag):
    """
    Kahn's algorithm; None when the graph has a cycle
    """

    indegree = [len(parents) for parents in dag.parents]
    children = [[] for _ in range(dag.n)]
    for parent, child in dag.edges():
        children[parent].append(child)

    ready = [var for var in range(dag.n) if indegree[var] == 0]
    order = []
    while ready:
        var = ready.pop()
        order.append(var)
        for child in children[var]:
            indegree[child] -= 1
            if indegree[child] == 0:
                ready.append(child)

    return order if len(order) == dag.n else None


@pytest.mark.parametrize("max_parents", [1, 2, 3])
@pytest.mark.parametrize("search", list(Search))
def test_searches_respect_constraints(search, max_parents):
    """
    Every search returns an acyclic classifier within the parent limit
    """

    cfg = ScoreConfig(Metric.ENTROPY, max_parents=max_parents)

    for seed in range(3):
        data = _wide_data(seed=seed)
        dag = learn_structure(data, cfg, search, **SEARCH_LIMITS.get(search, {}))

        assert _topological_order(dag) is not None
        dag.validate(max_parents=max_parents)


@pytest.mark.parametrize("metric", list(Metric))
def test_no_feature_parents_gives_same_score(metric):
    """
    Without feature parents every search ends at the naive structure's score
    """

    data = _wide_data(seed=4)
    cfg = ScoreConfig(metric, alpha=1.0, max_parents=0)
    expected = network_score(data, naive_structure(6), cfg)

    for search in Search:
        dag = learn_structure(data, cfg, search, **SEARCH_LIMITS.get(search, {}))
        assert network_score(data, dag, cfg) == pytest.approx(expected, abs=1e-9)


@pytest.mark.parametrize("seed", range(20))
def test_tabu_best_not_below_start(seed):
    """
    The best structure seen scores at least as high as the start
    """

    data = _wide_data(rows=80 + 5 * seed, seed=seed)
    cfg = ScoreConfig(list(Metric)[seed % len(Metric)], alpha=1.0)
    trace = []

    dag = search_tabu(data, cfg, tabu_length=3, max_steps=20, trace=trace)

    assert network_score(data, dag, cfg) >= trace[0] - 1e-9
    assert network_score(data, dag, cfg) == pytest.approx(max(trace), abs=1e-9)
