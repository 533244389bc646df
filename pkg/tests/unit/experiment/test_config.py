"""
Experiment Configuration Tests

The code is licensed under the MIT license.
"""

import pytest
from textpgm.core.exceptions import ConfigError
from textpgm.enumerations.metric import Metric
from textpgm.enumerations.model import ModelKind
from textpgm.enumerations.search import Search
from textpgm.enumerations.weighting import Weighting
from textpgm.interface.experiment import BayesNetSettings
from textpgm.interface.linear import TrainConfig
from textpgm.experiment.config import parse_config

CONFIG = """
[dataset]
path = reviews.csv

[pipeline]
words_to_keep = 5000

[experiment]
seed = 4

[bayesnet]
search = repeated_hill_climb
metric = bdeu
alpha = 2
restarts = 3
"""


@pytest.fixture(name="base")
def fixture_base(tmp_path):
    """
    Directory holding an (empty) dataset file
    """

    (tmp_path / "reviews.csv").write_text("text,label\n", encoding="utf-8")
    return str(tmp_path)


def test_parse_bayesnet(base):
    """
    Sections map to typed settings with defaults filled in
    """

    config = parse_config(CONFIG, base, environ={})

    assert config.model == ModelKind.BAYESNET
    assert isinstance(config.settings, BayesNetSettings)
    assert config.settings.score.metric == Metric.BDEU
    assert config.settings.score.alpha == 2.0
    assert config.settings.search == Search.REPEATED_HILL_CLIMB
    assert dict(config.settings.search_params) == {"restarts": 3, "seed": 4}
    assert config.pipeline.words_to_keep == 5000
    assert config.pipeline.weighting == Weighting.BINARY_PRESENCE
    assert config.split.seed == 4
    assert config.source.name == "reviews"
    assert config.classifier == "bayesnet-repeated_hill_climb"


def test_environment_override(base):
    """
    TEXTPGM_<SECTION>_<KEY> variables win over the file
    """

    environ = {"TEXTPGM_PIPELINE_WORDS_TO_KEEP": "10", "TEXTPGM_HMM_N_STATES": "7"}
    config = parse_config(CONFIG, base, environ=environ)

    assert config.pipeline.words_to_keep == 10
    assert config.model == ModelKind.BAYESNET


def test_overrides_win(base):
    """
    Explicit overrides beat the environment
    """

    config = parse_config(
        CONFIG,
        base,
        environ={"TEXTPGM_EXPERIMENT_SEED": "8"},
        overrides={"experiment": {"seed": "9"}},
    )

    assert config.seed == 9


def test_output_not_hashed(base):
    """
    The output directory does not change the configuration hash
    """

    first = parse_config(CONFIG + "\n[split]\ntrain_fraction = 0.7\n", base, environ={})
    second = parse_config(
        CONFIG.replace("seed = 4", "seed = 4\noutput = elsewhere")
        + "\n[split]\ntrain_fraction = 0.7\n",
        base,
        environ={},
    )

    assert first.output != second.output
    assert first.digest == second.digest


def test_linear_settings(base):
    """
    A logreg section gives optimizer settings
    """

    text = "[dataset]\npath = reviews.csv\n[logreg]\nepochs = 5\nl2_lambda = 0.5\n"
    config = parse_config(text, base, environ={})

    assert config.settings == TrainConfig(epochs=5, l2_lambda=0.5)
    assert config.pipeline.weighting == Weighting.TFIDF_SMOOTH_L2


def test_two_model_sections(base):
    """
    Exactly one model section is allowed
    """

    with pytest.raises(ConfigError):
        parse_config(CONFIG + "\n[nb]\n", base, environ={})


def test_unknown_key(base):
    """
    Misspelled keys are refused
    """

    with pytest.raises(ConfigError):
        parse_config(CONFIG + "\n[split]\nfraction = 0.5\n", base, environ={})


def test_bad_value(base):
    """
    Values must convert to their type
    """

    with pytest.raises(ConfigError):
        parse_config(CONFIG.replace("alpha = 2", "alpha = -1"), base, environ={})


def test_missing_dataset(tmp_path):
    """
    The dataset file must exist
    """

    with pytest.raises(FileNotFoundError):
        parse_config(CONFIG, str(tmp_path), environ={})


def test_missing_dataset_allowed(tmp_path):
    """
    A moved dataset is accepted when only the settings are needed
    """

    config = parse_config(CONFIG, str(tmp_path), environ={}, require_dataset=False)

    assert config.source.name == "reviews"
    assert config.settings.search == Search.REPEATED_HILL_CLIMB
