"""
Experiment Configuration Classes

The code is licensed under the MIT license.
"""

from dataclasses import dataclass, field
from typing import Optional, Tuple, Union
from textpgm.core.digest import text_digest
from textpgm.enumerations.model import ModelKind
from textpgm.enumerations.search import Search
from textpgm.interface.dataset import SplitSpec
from textpgm.interface.features import PipelineConfig
from textpgm.interface.hmm import BaumWelchConfig
from textpgm.interface.linear import TrainConfig
from textpgm.interface.network import ScoreConfig


@dataclass(frozen=True)
class DatasetSource:
    """
    Where and how to read the corpus
    """

    path: str
    format: str = "csv"
    text_column: str = "text"
    label_column: str = "label"
    id_column: Optional[str] = None
    delimiter: str = ","
    name: str = "dataset"


@dataclass(frozen=True)
class BayesNetSettings:
    """
    Structure search and parameter estimation settings
    """

    score: ScoreConfig = field(default_factory=ScoreConfig)
    search: Search = Search.TAN
    smoothing: float = 0.5
    threshold: float = 0.0

    # Extra keyword arguments of the search function
    search_params: Tuple[Tuple[str, int], ...] = ()


@dataclass(frozen=True)
class HmmSettings:
    """
    Per-class HMM settings
    """

    n_states: int = 3
    bw: BaumWelchConfig = field(default_factory=BaumWelchConfig)
    emission_smoothing: float = 1e-6


ModelSettings = Union[BayesNetSettings, HmmSettings, TrainConfig]


@dataclass(frozen=True)
class ExperimentConfig:
    """
    One dataset, one pipeline, one model
    """

    source: DatasetSource
    pipeline: PipelineConfig
    split: SplitSpec
    model: ModelKind
    settings: ModelSettings
    seed: int = 0
    upsample: bool = False
    output: str = "out"
    name: str = ""

    # Canonical rendering of the effective configuration
    text: str = ""

    @property
    def digest(self) -> str:
        """
        Returns the configuration hash
        """

        return text_digest(self.text)

    @property
    def classifier(self) -> str:
        """
        Returns the name used in reports
        """

        if self.name:
            return self.name
        if isinstance(self.settings, BayesNetSettings):
            return f"{self.model.value}-{self.settings.search.value}"

        return self.model.value
