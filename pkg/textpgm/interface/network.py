"""
Bayesian Network Classes

Discrete data view, DAG structure, sufficient statistics,
conditional probability tables and the network classifier.
Variable 0 is always the class variable.

The code is licensed under the MIT license.
"""

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple
import numpy as np
from textpgm.core.exceptions import (
    InvalidAlpha,
    InvalidStructure,
    TextPgmError,
    ValueOutOfRange,
)
from textpgm.enumerations.metric import Metric


class DiscreteData:

    """
    Complete discrete instances, one column per variable
    """

    # Instances x variables, integer states
    values: np.ndarray = None

    # Number of states per variable
    cardinalities: np.ndarray = None

    def __init__(self, values: np.ndarray, cardinalities: Sequence[int]) -> None:

        values = np.asarray(values)
        cardinalities = np.asarray(cardinalities, dtype=np.int64)

        if values.ndim != 2 or values.shape[1] != len(cardinalities):
            raise TextPgmError("Data width differs from number of cardinalities")
        if (cardinalities < 1).any():
            raise TextPgmError("Cardinalities must be positive")

        for var in range(values.shape[1]):
            column = values[:, var]
            if len(column) and (column.min() < 0 or column.max() >= cardinalities[var]):
                raise ValueOutOfRange(var, int(column.max()))

        self.values = values
        self.cardinalities = cardinalities

    def __len__(self) -> int:
        return self.values.shape[0]

    @property
    def n_vars(self) -> int:
        """
        Returns the number of variables, class included
        """

        return self.values.shape[1]


class Dag:

    """
    Directed acyclic graph given as sorted parent lists
    """

    # Number of variables
    n: int = 0

    # Sorted parent indices per variable
    parents: Tuple[Tuple[int, ...], ...] = ()

    def __init__(self, n: int, parents: Optional[Iterable[Iterable[int]]] = None) -> None:

        parents = [()] * n if parents is None else [tuple(p) for p in parents]

        if len(parents) != n:
            raise InvalidStructure("One parent list per variable is required")

        for var, family in enumerate(parents):
            if len(set(family)) != len(family):
                raise InvalidStructure(f"Duplicate parent of variable {var}")
            if var in family:
                raise InvalidStructure(f"Variable {var} is its own parent")
            if any(p < 0 or p >= n for p in family):
                raise InvalidStructure(f"Parent of variable {var} out of range")

        self.n = n
        self.parents = tuple(tuple(sorted(family)) for family in parents)

        children = [[] for _ in range(n)]
        for child, family in enumerate(self.parents):
            for p in family:
                children[p].append(child)
        self._children = tuple(tuple(c) for c in children)

        # Verified by topological sort
        self.topological_order()

    def __eq__(self, other) -> bool:
        return isinstance(other, Dag) and self.parents == other.parents

    def __hash__(self) -> int:
        return hash(self.parents)

    def __repr__(self) -> str:
        return f"Dag({self.n}, {list(map(list, self.parents))})"

    def edges(self) -> List[Tuple[int, int]]:
        """
        Returns all (parent, child) pairs in lexicographic order
        """

        return sorted((p, child) for child, family in enumerate(self.parents) for p in family)

    def feature_parents(self, var: int) -> Tuple[int, ...]:
        """
        Returns the parents of a variable other than the class
        """

        return tuple(p for p in self.parents[var] if p != 0)

    def children(self, var: int) -> List[int]:
        """
        Returns the children of a variable
        """

        return list(self._children[var])

    def topological_order(self) -> List[int]:
        """
        Order variables parents-first (Kahn), failing on cycles
        """

        indegree = [len(family) for family in self.parents]

        ready = [var for var in range(self.n) if indegree[var] == 0]
        order = []
        while ready:
            var = ready.pop()
            order.append(var)
            for child in self._children[var]:
                indegree[child] -= 1
                if indegree[child] == 0:
                    ready.append(child)

        if len(order) != self.n:
            raise InvalidStructure("Graph contains a cycle")

        return order

    def has_path(self, source: int, target: int, skip: Optional[Tuple[int, int]] = None) -> bool:
        """
        Is target reachable from source, optionally ignoring one edge?
        """

        stack = [source]
        seen = {source}
        while stack:
            var = stack.pop()
            if var == target:
                return True
            for child in self._children[var]:
                if child in seen:
                    continue
                if skip is not None and (var, child) == skip:
                    continue
                seen.add(child)
                stack.append(child)

        return False

    def with_parents(self, var: int, family: Iterable[int]) -> "Dag":
        """
        Returns a copy with one parent list replaced
        """

        parents = list(self.parents)
        parents[var] = tuple(family)

        return Dag(self.n, parents)

    def validate(self, max_parents: Optional[int] = None) -> None:
        """
        Check the classifier constraints

        The class variable is a root and a parent of every feature;
        features have at most max_parents parents besides the class.
        """

        if self.parents[0]:
            raise InvalidStructure("The class variable must be a root")
        for var in range(1, self.n):
            if 0 not in self.parents[var]:
                raise InvalidStructure(f"Class is not a parent of variable {var}")
            if max_parents is not None and len(self.feature_parents(var)) > max_parents:
                raise InvalidStructure(f"Variable {var} has too many parents")


def naive_structure(n: int) -> Dag:
    """
    The class variable as the single parent of every feature
    """

    return Dag(n, [()] + [(0,)] * (n - 1))


@dataclass(frozen=True)
class CountTable:
    """
    Sufficient statistics N_ijk of one family
    """

    var: int
    parents: Tuple[int, ...]
    counts: np.ndarray

    @property
    def r(self) -> int:
        """
        Returns the number of states of the variable
        """

        return self.counts.shape[1]

    @property
    def q(self) -> int:
        """
        Returns the number of parent configurations
        """

        return self.counts.shape[0]

    @property
    def marginals(self) -> np.ndarray:
        """
        Returns N_ij
        """

        return self.counts.sum(axis=1)

    @property
    def total(self) -> int:
        """
        Returns N
        """

        return int(self.counts.sum())


@dataclass(frozen=True)
class ScoreConfig:
    """
    Scoring function and search limits
    """

    metric: Metric = Metric.BAYES
    alpha: float = 0.5
    max_parents: int = 2
    structure_prior: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "metric", Metric(self.metric))
        if not self.alpha > 0:
            raise InvalidAlpha("alpha must be positive")
        if self.max_parents < 0:
            raise TextPgmError("max_parents must not be negative")
        if self.structure_prior != 0.0:
            raise TextPgmError("Only the uniform structure prior is supported")


@dataclass(frozen=True)
class Cpt:
    """
    P(variable | parent configuration), one row per configuration
    """

    var: int
    table: np.ndarray

    def __post_init__(self) -> None:
        if (self.table <= 0).any():
            raise TextPgmError(f"CPT of variable {self.var} has non-positive entries")
        if not np.allclose(self.table.sum(axis=1), 1.0, rtol=0, atol=1e-9):
            raise TextPgmError(f"CPT rows of variable {self.var} do not sum to 1")


class BayesNetClassifier:

    """
    A Bayesian network whose variable 0 is the class
    """

    # The structure
    dag: Dag = None

    # One CPT per variable
    cpts: Tuple[Cpt, ...] = ()

    # Number of states per variable
    cardinalities: np.ndarray = None

    # Ordered class names
    class_labels: tuple = ()

    # Digest of the vocabulary the features come from
    vocab_digest: str = ""

    # Presence threshold used to discretize feature weights
    threshold: float = 0.0

    def __init__(
        self,
        dag: Dag,
        cpts: Sequence[Cpt],
        cardinalities: Sequence[int],
        class_labels: Sequence[str],
        vocab_digest: str = "",
        threshold: float = 0.0,
    ) -> None:

        self.dag = dag
        self.cpts = tuple(cpts)
        self.cardinalities = np.asarray(cardinalities, dtype=np.int64)
        self.class_labels = tuple(class_labels)
        self.vocab_digest = vocab_digest
        self.threshold = float(threshold)

        if len(self.cpts) != dag.n or len(self.cardinalities) != dag.n:
            raise TextPgmError("One CPT and one cardinality per variable are required")
        if self.cardinalities[0] != len(self.class_labels):
            raise TextPgmError("Class cardinality differs from number of class labels")
        for var, cpt in enumerate(self.cpts):
            expected = int(np.prod(self.cardinalities[list(dag.parents[var])]))
            if cpt.table.shape != (expected, self.cardinalities[var]):
                raise TextPgmError(f"CPT of variable {var} does not match the DAG")

    # Import methods
    from textpgm.bayesnet.predict import predict, predict_many
