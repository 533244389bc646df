"""
Tree Augmented Naive Bayes

Chow-Liu maximum weight spanning tree over class-conditional
mutual information, plus the class as a parent of every feature.

The code is licensed under the MIT license.
"""

from itertools import combinations
from typing import List, Sequence, Tuple
import numpy as np
from scipy.sparse import csr_matrix
from textpgm.core.exceptions import TooFewVariables
from textpgm.interface.network import Dag, DiscreteData, ScoreConfig, naive_structure


def _cmi_terms(joint, class_size, left, right, total) -> np.ndarray:
    """
    N(c,a,b)/N * ln(N(c,a,b) N(c) / (N(c,a) N(c,b))), zero where N(c,a,b) = 0
    """

    joint = np.asarray(joint, dtype=np.float64)
    observed = joint > 0
    ratio = np.divide(
        joint * class_size,
        left * right,
        out=np.ones(joint.shape),
        where=observed,
    )

    return np.where(observed, joint / total * np.log(ratio), 0.0)


def _binary_cmi(data: DiscreteData) -> np.ndarray:
    """
    All pairs at once for presence/absence features
    """

    features = data.values[:, 1:]
    classes = data.values[:, 0]
    total = len(data)
    weights = np.zeros((features.shape[1], features.shape[1]))

    for c in range(int(data.cardinalities[0])):

        rows = csr_matrix(features[classes == c], dtype=np.float64)
        size = rows.shape[0]
        if size == 0:
            continue

        present = np.asarray(rows.sum(axis=0)).ravel()
        absent = size - present
        both = (rows.T @ rows).toarray()

        p_col, p_row = present[:, np.newaxis], present[np.newaxis, :]
        a_col, a_row = absent[:, np.newaxis], absent[np.newaxis, :]

        weights += _cmi_terms(both, size, p_col, p_row, total)
        weights += _cmi_terms(p_col - both, size, p_col, a_row, total)
        weights += _cmi_terms(p_row - both, size, a_col, p_row, total)
        weights += _cmi_terms(size - p_col - p_row + both, size, a_col, a_row, total)

    return weights


def _pair_cmi(data: DiscreteData, a: int, b: int) -> float:
    """
    Conditional mutual information of two variables given the class
    """

    rc, ra, rb = (int(data.cardinalities[v]) for v in (0, a, b))
    cells = (data.values[:, 0].astype(np.int64) * ra + data.values[:, a]) * rb + data.values[:, b]
    joint = np.bincount(cells, minlength=rc * ra * rb).reshape(rc, ra, rb)

    class_size = joint.sum(axis=(1, 2))[:, np.newaxis, np.newaxis]
    left = joint.sum(axis=2)[:, :, np.newaxis]
    right = joint.sum(axis=1)[:, np.newaxis, :]

    return float(np.sum(_cmi_terms(joint, class_size, left, right, len(data))))


def conditional_mutual_information(data: DiscreteData) -> np.ndarray:
    """
    Symmetric matrix of I(X_a; X_b | C) between features
    (row/column f is variable f + 1), zero diagonal
    """

    n_features = data.n_vars - 1

    if len(data) == 0:
        return np.zeros((n_features, n_features))

    if (data.cardinalities[1:] == 2).all():
        weights = _binary_cmi(data)
    else:
        weights = np.zeros((n_features, n_features))
        for a, b in combinations(range(n_features), 2):
            weights[a, b] = weights[b, a] = _pair_cmi(data, a + 1, b + 1)

    np.fill_diagonal(weights, 0.0)

    return weights


def maximum_spanning_tree(weights: np.ndarray) -> List[Tuple[int, int]]:
    """
    Prim's algorithm from node 0, returns (parent, child) edges
    directed away from the root; ties go to the lowest index
    """

    n = weights.shape[0]
    in_tree = np.zeros(n, dtype=bool)
    in_tree[0] = True
    best = weights[0].astype(np.float64).copy()
    link = np.zeros(n, dtype=np.int64)
    edges = []

    for _ in range(n - 1):
        child = int(np.argmax(np.where(in_tree, -np.inf, best)))
        edges.append((int(link[child]), child))
        in_tree[child] = True
        improve = ~in_tree & (weights[child] > best)
        best[improve] = weights[child][improve]
        link[improve] = child

    return edges


def tree_weight(dag: Dag, weights: np.ndarray) -> float:
    """
    Total weight of the feature-feature arcs of a structure
    """

    return float(
        sum(weights[p - 1, child - 1] for p, child in dag.edges() if p != 0)
    )


def learn_tan(data: DiscreteData, cfg: ScoreConfig = ScoreConfig()) -> Dag:
    """
    Naive Bayes structure augmented with a Chow-Liu tree rooted
    at the lowest-index feature
    """

    if data.n_vars - 1 < 2:
        raise TooFewVariables("Tree augmentation needs at least two features")

    # No feature parents allowed
    if cfg.max_parents < 1:
        return naive_structure(data.n_vars)

    parents: List[Sequence[int]] = [()] + [(0,)] * (data.n_vars - 1)
    for parent, child in maximum_spanning_tree(conditional_mutual_information(data)):
        parents[child + 1] = (0, parent + 1)

    return Dag(data.n_vars, parents)
