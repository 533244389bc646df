"""
Prepare Step

Split the corpus, fit the vocabulary on the training part and
write the vectorized artifacts plus a manifest.

The code is licensed under the MIT license.
"""

import json
import logging
import os
from typing import NamedTuple, Tuple
from textpgm.core.exceptions import VocabHashMismatch
from textpgm.corpus.arff import load_arff
from textpgm.corpus.delimited import load_csv
from textpgm.interface.dataset import Dataset
from textpgm.interface.experiment import DatasetSource, ExperimentConfig
from textpgm.interface.features import FeatureMatrix, Vocabulary
from textpgm.interface.vectorizer import Vectorizer
from textpgm.textprep.io import read_feature_matrix, read_vocabulary
from textpgm.textprep.io import write_feature_matrix, write_vocabulary

logger = logging.getLogger(__name__)

# Artifact file names
VOCABULARY_FILE = "vocabulary.txt"
TRAIN_FILE = "train.features"
TEST_FILE = "test.features"
MANIFEST_FILE = "manifest.json"


class Prepared(NamedTuple):
    """
    Artifacts of a prepare step
    """

    manifest: dict
    vocab: Vocabulary
    train: FeatureMatrix
    test: FeatureMatrix


def load_dataset(source: DatasetSource) -> Dataset:
    """
    Read the corpus named by a dataset source
    """

    if source.format == "arff":
        return load_arff(source.path)

    return load_csv(
        source.path,
        source.text_column,
        source.label_column,
        source.delimiter,
        source.id_column,
    )


def split_dataset(config: ExperimentConfig) -> Tuple[Dataset, Dataset]:
    """
    Train and test parts; upsampling touches the training part only
    """

    data = load_dataset(config.source)
    train, test = data.stratified_split(config.split)

    if config.upsample:
        train = train.upsample_minority(config.seed)

    logger.info("Split %s: %d train, %d test", config.source.name, len(train), len(test))

    return train, test


def write_json(payload: dict, path: str) -> None:
    """
    Deterministic JSON file
    """

    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def read_json(path: str) -> dict:
    """
    Read a JSON file
    """

    with open(path, encoding="utf-8") as f:
        return json.load(f)


def prepare(self) -> Prepared:
    """
    Write vocabulary, train/test feature matrices and manifest
    """

    config: ExperimentConfig = self.config
    os.makedirs(self.output, exist_ok=True)

    train, test = split_dataset(config)
    vectorizer = Vectorizer(config.pipeline)
    train_matrix, vocab = vectorizer.fit_transform(train)
    test_matrix = vectorizer.transform(test)

    write_vocabulary(vocab, os.path.join(self.output, VOCABULARY_FILE))
    write_feature_matrix(train_matrix, os.path.join(self.output, TRAIN_FILE))
    write_feature_matrix(test_matrix, os.path.join(self.output, TEST_FILE))

    manifest = {
        "classes": list(train.labels),
        "classifier": config.classifier,
        "config": config.text,
        "config_hash": config.digest,
        "dataset": config.source.name,
        "seed": config.seed,
        "test_size": len(test),
        "train_size": len(train),
        "vocabulary_digest": vocab.digest,
        "weighting": config.pipeline.weighting.value,
        "words_to_keep": config.pipeline.words_to_keep,
    }
    write_json(manifest, os.path.join(self.output, MANIFEST_FILE))
    logger.info("Prepared %d terms in %s", len(vocab), self.output)

    return Prepared(manifest, vocab, train_matrix, test_matrix)


def load_prepared(directory: str) -> Prepared:
    """
    Read the artifacts of a prepare step and check the vocabulary hash
    """

    manifest = read_json(os.path.join(directory, MANIFEST_FILE))
    vocab = read_vocabulary(os.path.join(directory, VOCABULARY_FILE))

    if vocab.digest != manifest["vocabulary_digest"]:
        raise VocabHashMismatch(f"Vocabulary in {directory} differs from its manifest")

    classes = manifest["classes"]

    return Prepared(
        manifest,
        vocab,
        read_feature_matrix(os.path.join(directory, TRAIN_FILE), vocab, classes),
        read_feature_matrix(os.path.join(directory, TEST_FILE), vocab, classes),
    )


def is_prepared(self) -> bool:
    """
    Do artifacts of this exact configuration exist?
    """

    path = os.path.join(self.output, MANIFEST_FILE)
    if not os.path.exists(path):
        return False

    return read_json(path).get("config_hash") == self.config.digest
