"""
Experiment Configuration Files

INI files with [dataset], [pipeline], [split], [experiment]
and exactly one model section. Environment variables named
TEXTPGM_<SECTION>_<KEY> override file values.

The code is licensed under the MIT license.
"""

import os
from configparser import ConfigParser, Error as IniError
from typing import Callable, Dict, Mapping, Optional
from textpgm.core.exceptions import ConfigError, TextPgmError
from textpgm.enumerations.metric import Metric
from textpgm.enumerations.model import ModelKind
from textpgm.enumerations.search import Search
from textpgm.enumerations.weighting import Weighting
from textpgm.interface.dataset import SplitSpec
from textpgm.interface.experiment import (
    BayesNetSettings,
    DatasetSource,
    ExperimentConfig,
    HmmSettings,
)
from textpgm.interface.features import PipelineConfig
from textpgm.interface.hmm import BaumWelchConfig
from textpgm.interface.linear import TrainConfig
from textpgm.interface.network import ScoreConfig
from textpgm.interface.vectorizer import default_weighting

# Prefix of overriding environment variables
ENV_PREFIX = "TEXTPGM_"

# Accepted keys per section
KEYS = {
    "dataset": {
        "path",
        "format",
        "text_column",
        "label_column",
        "id_column",
        "delimiter",
        "name",
    },
    "pipeline": {
        "words_to_keep",
        "weighting",
        "lowercase",
        "min_token_length",
        "stopwords",
    },
    "split": {"train_fraction", "seed"},
    "experiment": {"seed", "output", "upsample", "name"},
    "bayesnet": {
        "metric",
        "alpha",
        "max_parents",
        "search",
        "smoothing",
        "threshold",
        "max_steps",
        "restarts",
        "look_ahead",
        "good_ops",
        "tabu_length",
    },
    "hmm": {"n_states", "max_iters", "tol", "emission_smoothing"},
    "nb": {"smoothing"},
    "logreg": {"learning_rate", "decay", "l2_lambda", "epochs", "batch_size"},
    "svm": {"learning_rate", "decay", "l2_lambda", "epochs", "batch_size"},
}

# Sections naming a classifier
MODEL_SECTIONS = tuple(kind.value for kind in ModelKind)

# Search parameters passed through to the search functions
SEARCH_PARAMS = {
    Search.K2: (),
    Search.HILL_CLIMB: ("max_steps",),
    Search.REPEATED_HILL_CLIMB: ("max_steps", "restarts"),
    Search.LAGD: ("max_steps", "look_ahead", "good_ops"),
    Search.TABU: ("max_steps", "tabu_length"),
}


def apply_environment(parser: ConfigParser, environ: Mapping[str, str]) -> None:
    """
    Override file values with TEXTPGM_<SECTION>_<KEY> variables

    Model sections are only overridden when the file has them.
    """

    for name in sorted(environ):
        if not name.startswith(ENV_PREFIX):
            continue
        for section in KEYS:
            prefix = f"{ENV_PREFIX}{section.upper()}_"
            if not name.startswith(prefix):
                continue
            key = name[len(prefix) :].lower()
            if key not in KEYS[section]:
                continue
            if not parser.has_section(section):
                if section in MODEL_SECTIONS:
                    continue
                parser.add_section(section)
            parser.set(section, key, environ[name])


def _value(parser: ConfigParser, section: str, key: str, convert: Callable, default):
    """
    Typed lookup with ConfigError on bad values
    """

    if not parser.has_option(section, key):
        return default

    raw = parser.get(section, key)
    try:
        if convert is bool:
            return parser.getboolean(section, key)
        return convert(raw)
    except ValueError as error:
        raise ConfigError(f"[{section}] {key} = {raw!r}: {error}") from error


def _resolve(path: str, base: str) -> str:
    return os.path.normpath(os.path.join(base, os.path.expanduser(path)))


def _read_stopwords(path: str) -> frozenset:
    with open(path, encoding="utf-8") as f:
        return frozenset(line.strip() for line in f if line.strip())


def _model_section(parser: ConfigParser) -> ModelKind:
    present = [ModelKind(s) for s in MODEL_SECTIONS if parser.has_section(s)]
    if len(present) != 1:
        raise ConfigError(
            "Exactly one model section is required, found "
            + (", ".join(kind.value for kind in present) or "none")
        )

    return present[0]


def _model_settings(parser: ConfigParser, kind: ModelKind, seed: int):
    section = kind.value

    def get(key, convert, default):
        return _value(parser, section, key, convert, default)

    if kind == ModelKind.BAYESNET:
        search = Search(get("search", str, Search.TAN.value))
        params = {
            key: get(key, int, None)
            for key in SEARCH_PARAMS.get(search, ())
            if parser.has_option(section, key)
        }
        if search == Search.REPEATED_HILL_CLIMB:
            params["seed"] = seed
        return BayesNetSettings(
            ScoreConfig(
                Metric(get("metric", str, Metric.BAYES.value)),
                get("alpha", float, 0.5),
                get("max_parents", int, 2),
            ),
            search,
            get("smoothing", float, 0.5),
            get("threshold", float, 0.0),
            tuple(sorted(params.items())),
        )

    if kind == ModelKind.HMM:
        return HmmSettings(
            get("n_states", int, 3),
            BaumWelchConfig(get("max_iters", int, 100), get("tol", float, 1e-6)),
            get("emission_smoothing", float, 1e-6),
        )

    if kind == ModelKind.NB:
        return TrainConfig(seed=seed, smoothing=get("smoothing", float, 1.0))

    return TrainConfig(
        learning_rate=get("learning_rate", float, 0.1),
        decay=get("decay", float, 1e-4),
        l2_lambda=get("l2_lambda", float, 1e-4),
        epochs=get("epochs", int, 50),
        seed=seed,
        batch_size=get("batch_size", int, 32),
    )


def canonical_text(parser: ConfigParser) -> str:
    """
    Sorted rendering of the effective configuration, output excluded
    """

    lines = []
    for section in sorted(parser.sections()):
        lines.append(f"[{section}]")
        for key in sorted(parser.options(section)):
            if (section, key) == ("experiment", "output"):
                continue
            lines.append(f"{key} = {parser.get(section, key)}")

    return "\n".join(lines) + "\n"


def parse_config(
    text: str,
    base: str = ".",
    environ: Optional[Mapping[str, str]] = None,
    overrides: Optional[Dict[str, Dict[str, str]]] = None,
    require_dataset: bool = True,
) -> ExperimentConfig:
    """
    Build an experiment configuration from INI text

    Relative paths are resolved against base. overrides maps
    section -> key -> value and wins over the environment. With
    require_dataset unset a missing dataset file is accepted.
    """

    parser = ConfigParser(interpolation=None)
    try:
        parser.read_string(text)
    except IniError as error:
        raise ConfigError(str(error)) from error

    apply_environment(parser, os.environ if environ is None else environ)
    for section, values in (overrides or {}).items():
        if not parser.has_section(section):
            parser.add_section(section)
        for key, value in values.items():
            parser.set(section, key, str(value))

    for section in parser.sections():
        if section not in KEYS:
            raise ConfigError(f"Unknown section [{section}]")
        unknown = set(parser.options(section)) - KEYS[section]
        if unknown:
            raise ConfigError(f"Unknown keys in [{section}]: {', '.join(sorted(unknown))}")

    if not parser.has_option("dataset", "path"):
        raise ConfigError("[dataset] path is required")

    path = _resolve(parser.get("dataset", "path"), base)
    parser.set("dataset", "path", path)
    if require_dataset and not os.path.exists(path):
        raise FileNotFoundError(f"Dataset not found: {path}")

    model = _model_section(parser)

    try:
        seed = _value(parser, "experiment", "seed", int, 0)

        default_format = "arff" if path.lower().endswith(".arff") else "csv"
        source = DatasetSource(
            path,
            _value(parser, "dataset", "format", str, default_format).lower(),
            _value(parser, "dataset", "text_column", str, "text"),
            _value(parser, "dataset", "label_column", str, "label"),
            _value(parser, "dataset", "id_column", str, None),
            _value(parser, "dataset", "delimiter", str, ","),
            _value(
                parser,
                "dataset",
                "name",
                str,
                os.path.splitext(os.path.basename(path))[0],
            ),
        )
        if source.format not in ("csv", "arff"):
            raise ConfigError(f"Unsupported dataset format: {source.format}")

        stopwords = None
        if parser.has_option("pipeline", "stopwords"):
            stopword_path = _resolve(parser.get("pipeline", "stopwords"), base)
            parser.set("pipeline", "stopwords", stopword_path)
            stopwords = _read_stopwords(stopword_path)

        pipeline = PipelineConfig(
            _value(parser, "pipeline", "words_to_keep", int, 1000),
            Weighting(
                _value(parser, "pipeline", "weighting", str, default_weighting(model).value)
            ),
            _value(parser, "pipeline", "lowercase", bool, True),
            _value(parser, "pipeline", "min_token_length", int, 1),
            stopwords,
        )

        split = SplitSpec(
            _value(parser, "split", "train_fraction", float, 0.8),
            _value(parser, "split", "seed", int, seed),
        )

        settings = _model_settings(parser, model, seed)

        output = _value(parser, "experiment", "output", str, "out")

        return ExperimentConfig(
            source=source,
            pipeline=pipeline,
            split=split,
            model=model,
            settings=settings,
            seed=seed,
            upsample=_value(parser, "experiment", "upsample", bool, False),
            output=_resolve(output, base),
            name=_value(parser, "experiment", "name", str, ""),
            text=canonical_text(parser),
        )

    except ConfigError:
        raise
    except TextPgmError as error:
        raise ConfigError(str(error)) from error
    except ValueError as error:
        raise ConfigError(str(error)) from error


def read_config(
    path: str,
    environ: Optional[Mapping[str, str]] = None,
    overrides: Optional[Dict[str, Dict[str, str]]] = None,
) -> ExperimentConfig:
    """
    Read an experiment configuration file
    """

    if not os.path.exists(path):
        raise FileNotFoundError(f"Config file not found: {path}")

    with open(path, encoding="utf-8") as f:
        text = f.read()

    return parse_config(text, os.path.dirname(os.path.abspath(path)), environ, overrides)
