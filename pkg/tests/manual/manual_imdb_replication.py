"""
Run the IMDB grid: every Bayesian network search under each
scoring metric, per-class HMMs and the three baselines

Usage: python manual_imdb_replication.py <IMDB Dataset.csv> [output]

The CSV needs "review" and "sentiment" columns. Expect tens of
minutes on a desktop.

The code is licensed under the MIT license.
"""

import glob
import os
import sys
import matplotlib.pyplot as plt
import pandas as pd
from textpgm.enumerations.metric import Metric
from textpgm.enumerations.search import Search
from textpgm.experiment.benchmark import run_benchmark
from textpgm.experiment.config import read_config
from textpgm.interface.base import Base

CONFIGS = os.path.join(os.path.dirname(os.path.abspath(__file__)), "imdb")

METRICS = (Metric.BAYES, Metric.BDEU, Metric.MDL, Metric.ENTROPY, Metric.AIC)

# Classifier -> (published weighted F1, accepted deviation)
TARGETS = {
    "bayesnet-tan-bayes": (0.858, 0.03),
    "bayesnet-naive": (0.857, 0.03),
    "nb": (0.8595, 0.05),
    "logreg": (0.8969, 0.05),
}


def grid(dataset: str) -> list:
    """
    One configuration per cell; searches are crossed with METRICS
    """

    source = {"dataset": {"path": os.path.abspath(dataset)}}
    configs = []

    for path in sorted(glob.glob(os.path.join(CONFIGS, "*.ini"))):
        config = read_config(path, overrides=source)
        search = getattr(config.settings, "search", None)
        if search in (None, Search.NAIVE):
            configs.append(config)
            continue
        for metric in METRICS:
            overrides = {
                **source,
                "bayesnet": {"metric": metric.value},
                "experiment": {"name": f"{config.classifier}-{metric.value}"},
            }
            configs.append(read_config(path, overrides=overrides))

    return configs


if __name__ == "__main__":

    Base.processes = os.cpu_count() or 1
    output = sys.argv[2] if len(sys.argv) > 2 else "imdb_replication"

    results, failures, text = run_benchmark(grid(sys.argv[1]), output)
    print(text)

    f1 = pd.Series({r.classifier: r.averages.weighted.f1 for r in results})

    for name, (target, tolerance) in TARGETS.items():
        value = f1.get(name, float("nan"))
        verdict = "ok" if abs(value - target) <= tolerance else "MISSED"
        print(f"{name}: {value:.4f} (published {target} +/- {tolerance}) {verdict}")

    tan = f1[f1.index.str.startswith("bayesnet-tan")]
    if len(tan) and "bayesnet-naive" in f1:
        print("TAN >= naive structure:", bool(tan.min() >= f1["bayesnet-naive"]))
    for classifier, dataset, pointer in failures:
        print(f"ERR {classifier}/{dataset}: see {pointer}")

    f1.sort_values().plot.barh(xlim=(0, 1), title="IMDB weighted F1", figsize=(8, 10))
    plt.tight_layout()
    plt.show()
