"""
▀█▀ █▀▀ ▀▄▀ ▀█▀ █▀█ █▀▀ █▀▄▀█
░█░ ██▄ █░█ ░█░ █▀▀ █▄█ █░▀░█

Probabilistic graphical models for text classification:
Bayesian network classifiers learned by structure search,
per-class hidden Markov models and linear baselines.

The code is licensed under the MIT license.
"""

__appname__ = "textpgm"
__version__ = "0.1.0"

from .interface.base import Base
from .interface.dataset import Dataset, Document, SplitSpec
from .interface.features import FeatureMatrix, PipelineConfig, Vocabulary
from .interface.vectorizer import Vectorizer
from .interface.network import BayesNetClassifier, Dag, ScoreConfig
from .interface.hmm import BaumWelchConfig, ClassHmmBank, HmmModel
from .interface.linear import LinearModel, NaiveBayesModel, TrainConfig
from .interface.runner import Experiment
from .corpus.delimited import load_csv
from .corpus.arff import load_arff
