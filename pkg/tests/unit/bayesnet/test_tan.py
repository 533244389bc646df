"""
Tree Augmented Naive Bayes Tests

The code is licensed under the MIT license.
"""

from itertools import combinations
import numpy as np
import pytest
from textpgm.core.exceptions import TooFewVariables
from textpgm.interface.network import DiscreteData, ScoreConfig, naive_structure
from textpgm.bayesnet.tan import (
    _pair_cmi,
    conditional_mutual_information,
    learn_tan,
    maximum_spanning_tree,
    tree_weight,
)


def _correlated(n_features, rows=300, cardinality=2, seed=0):
    """
    Features that copy a random earlier feature with noise
    """

    rng = np.random.default_rng(seed)
    values = np.zeros((rows, n_features + 1), dtype=np.int64)
    values[:, 0] = rng.integers(0, 2, size=rows)
    values[:, 1] = rng.integers(0, cardinality, size=rows)

    for var in range(2, n_features + 1):
        source = values[:, rng.integers(0, var)] % cardinality
        noise = rng.integers(0, cardinality, size=rows)
        values[:, var] = np.where(rng.random(rows) < rng.uniform(0.3, 0.9), source, noise)

    return DiscreteData(values, [2] + [cardinality] * n_features)


def _best_tree_weight(weights):
    """
    Heaviest spanning tree by enumerating edge subsets
    """

    n = weights.shape[0]
    best = -np.inf

    for edges in combinations(combinations(range(n), 2), n - 1):
        root = list(range(n))

        def find(node):
            while root[node] != node:
                node = root[node]
            return node

        acyclic = True
        for a, b in edges:
            ra, rb = find(a), find(b)
            if ra == rb:
                acyclic = False
                break
            root[ra] = rb

        if acyclic:
            best = max(best, sum(weights[a, b] for a, b in edges))

    return best


def test_two_features():
    """
    Two features are joined by the only possible tree edge
    """

    dag = learn_tan(_correlated(2))

    assert dag.parents == ((), (0,), (0, 1))


@pytest.mark.parametrize("seed", range(100))
def test_tree_weight_is_maximal(seed):
    """
    The learned tree is as heavy as the best spanning tree
    over 2 to 6 binary features
    """

    n_features = 2 + seed % 5
    data = _correlated(n_features, rows=int(40 + 3 * seed), seed=seed)
    weights = conditional_mutual_information(data)
    dag = learn_tan(data)

    dag.validate(max_parents=1)
    assert len([edge for edge in dag.edges() if edge[0] != 0]) == n_features - 1
    assert tree_weight(dag, weights) == pytest.approx(_best_tree_weight(weights), abs=1e-9)


def test_binary_weights_match_pairwise():
    """
    The all-pairs presence computation agrees with pairwise counting
    """

    data = _correlated(5, seed=4)
    weights = conditional_mutual_information(data)

    for a, b in combinations(range(5), 2):
        assert weights[a, b] == pytest.approx(_pair_cmi(data, a + 1, b + 1), abs=1e-12)


def test_weights_shape():
    """
    Weights are symmetric, nonnegative, with a zero diagonal
    """

    weights = conditional_mutual_information(_correlated(4, cardinality=3, seed=5))

    assert np.allclose(weights, weights.T)
    assert (weights >= -1e-12).all()
    assert (np.diag(weights) == 0).all()


def test_independent_features():
    """
    Features independent given the class carry almost no weight
    """

    rng = np.random.default_rng(6)
    data = DiscreteData(rng.integers(0, 2, size=(20000, 4)), [2, 2, 2, 2])

    assert conditional_mutual_information(data).max() < 1e-3


def test_spanning_tree_ties():
    """
    Equal weights attach every node to the lowest index
    """

    assert maximum_spanning_tree(np.ones((4, 4))) == [(0, 1), (0, 2), (0, 3)]


def test_too_few_features():
    """
    A single feature cannot be augmented
    """

    with pytest.raises(TooFewVariables):
        learn_tan(_correlated(1))


def test_without_feature_parents():
    """
    No feature parents allowed gives the naive structure
    """

    assert learn_tan(_correlated(3), ScoreConfig(max_parents=0)) == naive_structure(4)
