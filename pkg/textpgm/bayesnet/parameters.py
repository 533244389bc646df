"""
Parameter Estimation

The code is licensed under the MIT license.
"""

from typing import Optional, Sequence
from textpgm.interface.network import BayesNetClassifier, Cpt, Dag, DiscreteData
from textpgm.bayesnet.counts import collect_counts


def estimate_cpts(
    data: DiscreteData,
    dag: Dag,
    smoothing: float = 0.5,
    class_labels: Optional[Sequence[str]] = None,
    vocab_digest: str = "",
    threshold: float = 0.0,
) -> BayesNetClassifier:
    """
    Additively smoothed CPTs:
    P(X_i = k | j) = (N_ijk + s) / (N_ij + r_i s)
    """

    if not smoothing > 0:
        raise ValueError("smoothing must be positive")

    dag.validate()

    cpts = []
    for var in range(dag.n):
        counts = collect_counts(data, var, dag.parents[var]).counts
        table = (counts + smoothing) / (
            counts.sum(axis=1, keepdims=True) + counts.shape[1] * smoothing
        )
        cpts.append(Cpt(var, table))

    if class_labels is None:
        class_labels = [str(c) for c in range(int(data.cardinalities[0]))]

    return BayesNetClassifier(
        dag, cpts, data.cardinalities, class_labels, vocab_digest, threshold
    )
