"""
Train Step

Fit the configured classifier on the prepared training
artifacts and write the model file plus a training log.

The code is licensed under the MIT license.
"""

import logging
import os
from typing import List, Tuple
import pandas as pd
from textpgm.enumerations.model import ModelKind
from textpgm.interface.experiment import ExperimentConfig
from textpgm.interface.vectorizer import Vectorizer
from textpgm.bayesnet.discretize import discretize
from textpgm.bayesnet.io import network_text
from textpgm.bayesnet.parameters import estimate_cpts
from textpgm.bayesnet.scores import network_score
from textpgm.bayesnet.structure import learn_structure
from textpgm.hmm.bank import train_class_hmms
from textpgm.hmm.io import bank_text
from textpgm.baselines.io import baseline_text
from textpgm.baselines.logreg import train_logreg
from textpgm.baselines.naivebayes import train_multinomial_nb
from textpgm.baselines.svm import train_linear_svm
from textpgm.experiment.prepare import Prepared, load_prepared, split_dataset

logger = logging.getLogger(__name__)

# Output file names
MODEL_FILE = "model.txt"
LOG_FILE = "train_log.csv"


def fit_model(config: ExperimentConfig, prepared: Prepared) -> Tuple[str, List[tuple]]:
    """
    Train the configured model

    Returns the serialized model and (series, step, value) log rows:
    network scores for structure searches, per-class log-likelihoods
    for Baum-Welch and per-epoch objectives for linear models.
    """

    settings = config.settings
    matrix = prepared.train
    digest = prepared.vocab.digest

    if config.model == ModelKind.BAYESNET:
        data = discretize(matrix, settings.threshold)
        trace: List[float] = []
        dag = learn_structure(
            data, settings.score, settings.search, trace, **dict(settings.search_params)
        )
        if not trace:
            trace.append(network_score(data, dag, settings.score))
        model = estimate_cpts(
            data, dag, settings.smoothing, matrix.classes, digest, settings.threshold
        )
        return network_text(model), [("score", i, v) for i, v in enumerate(trace)]

    if config.model == ModelKind.HMM:
        train, _ = split_dataset(config)
        history = {}
        bank = train_class_hmms(
            Vectorizer(config.pipeline).tokenize(train),
            train.label_indices(),
            train.labels,
            n_states=settings.n_states,
            seed=config.seed,
            bw=settings.bw,
            emission_smoothing=settings.emission_smoothing,
            vocab=prepared.vocab,
            history=history,
        )
        rows = [
            (label, i, v) for label in train.labels for i, v in enumerate(history[label])
        ]
        return bank_text(bank), rows

    if config.model == ModelKind.NB:
        return baseline_text(train_multinomial_nb(matrix, settings)), []

    trainer = train_logreg if config.model == ModelKind.LOGREG else train_linear_svm
    model = trainer(matrix, settings)

    return baseline_text(model), [("loss", i, v) for i, v in enumerate(model.losses)]


def train(self) -> str:
    """
    Train on the prepared artifacts, preparing them first when
    they are missing or stale; returns the model path
    """

    prepared = load_prepared(self.output) if self.is_prepared() else self.prepare()
    logger.info("Training %s on %s", self.config.classifier, self.config.source.name)

    text, rows = fit_model(self.config, prepared)

    path = os.path.join(self.output, MODEL_FILE)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)

    pd.DataFrame(rows, columns=["series", "step", "value"]).to_csv(
        os.path.join(self.output, LOG_FILE),
        index=False,
        float_format="%.12g",
        lineterminator="\n",
    )

    return path
