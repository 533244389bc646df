"""
Command Line Interface

textpgm prepare|train|evaluate|benchmark|report

Exit codes: 0 success, 1 failed step, 2 configuration or I/O error.

The code is licensed under the MIT license.
"""

import argparse
import logging
import os
import sys
from typing import List, Optional
from textpgm import __appname__, __version__
from textpgm.core.exceptions import ConfigError, TextPgmError
from textpgm.interface.base import Base
from textpgm.interface.runner import Experiment
from textpgm.experiment.benchmark import run_benchmark_files
from textpgm.experiment.evaluate import evaluate_model, write_reports
from textpgm.experiment.prepare import MANIFEST_FILE, read_json
from textpgm.experiment.train import MODEL_FILE
from textpgm.evaluation.report import format_report, results_from_records


def _common(parser: argparse.ArgumentParser, config: bool = True) -> None:
    if config:
        parser.add_argument("--config", help="experiment INI file")
        parser.add_argument("--seed", type=int, help="override [experiment] seed")
    parser.add_argument("--out", help="output directory")
    parser.add_argument("--threads", type=int, help="worker threads")
    parser.add_argument("--format", choices=("text", "csv"), default="text")
    parser.add_argument("--verbose", action="store_true", help="log progress")


def build_parser() -> argparse.ArgumentParser:
    """
    The argument parser of all commands
    """

    parser = argparse.ArgumentParser(prog=__appname__)
    parser.add_argument("--version", action="version", version=__version__)
    commands = parser.add_subparsers(dest="command", required=True)

    _common(commands.add_parser("prepare", help="vectorize a dataset"))
    _common(commands.add_parser("train", help="train the configured model"))

    evaluate = commands.add_parser("evaluate", help="evaluate a trained model")
    _common(evaluate)
    evaluate.add_argument("--model", help="model file (default: <out>/model.txt)")
    evaluate.add_argument("--artifacts", help="prepare output directory")
    evaluate.add_argument("--data", help="evaluate on this dataset file instead")

    benchmark = commands.add_parser("benchmark", help="run several experiments")
    _common(benchmark, config=False)
    benchmark.add_argument("configs", nargs="+", help="experiment INI files")
    benchmark.add_argument("--seed", type=int, help="override every [experiment] seed")
    benchmark.add_argument("--workers", type=int, default=1, help="parallel cells")

    report = commands.add_parser("report", help="regenerate reports from results.json")
    _common(report, config=False)
    report.add_argument("results", help="results.json of an evaluate or benchmark run")

    return parser


def _overrides(args: argparse.Namespace) -> dict:
    return {"experiment": {"seed": str(args.seed)}} if args.seed is not None else {}


def _experiment(args: argparse.Namespace) -> Experiment:
    if not args.config:
        raise ConfigError("--config is required")

    return Experiment.from_file(args.config, args.out, overrides=_overrides(args))


def _emit(text: str, csv: str, fmt: str) -> None:
    sys.stdout.write(csv if fmt == "csv" else text)


def cmd_prepare(args: argparse.Namespace) -> int:
    """
    Vectorize the configured dataset and print the manifest path
    """

    experiment = _experiment(args)
    experiment.prepare()
    print(os.path.join(experiment.output, MANIFEST_FILE))

    return 0


def cmd_train(args: argparse.Namespace) -> int:
    """
    Train the configured model and print the model path
    """

    print(_experiment(args).train())

    return 0


def cmd_evaluate(args: argparse.Namespace) -> int:
    """
    Evaluate a model on prepared artifacts or a dataset file
    """

    if args.config:
        experiment = _experiment(args)
        model = args.model or os.path.join(experiment.output, MODEL_FILE)
        artifacts = args.artifacts or experiment.output
        classifier = experiment.config.classifier
        output = experiment.output
    elif args.model:
        model, artifacts, classifier = args.model, args.artifacts, None
        output = args.out or os.path.dirname(os.path.abspath(model))
    else:
        raise ConfigError("evaluate needs --model or --config")

    result = evaluate_model(model, artifacts, args.data, classifier)
    _emit(*write_reports([result], output), args.format)

    return 0


def cmd_benchmark(args: argparse.Namespace) -> int:
    """
    Run every configuration; 1 when any cell failed
    """

    Base.processes = max(1, args.workers)
    results, failures, _ = run_benchmark_files(
        args.configs, args.out or "benchmark", _overrides(args)
    )
    _emit(*format_report(results), args.format)

    return 1 if failures else 0


def cmd_report(args: argparse.Namespace) -> int:
    """
    Regenerate reports from a results.json file
    """

    payload = read_json(args.results)
    results = results_from_records(payload.get("results", []))
    failures = payload.get("failures", [])
    output = args.out or os.path.dirname(os.path.abspath(args.results))
    _emit(*write_reports(results, output, failures), args.format)

    return 1 if failures else 0


# Command name -> handler
COMMANDS = {
    "prepare": cmd_prepare,
    "train": cmd_train,
    "evaluate": cmd_evaluate,
    "benchmark": cmd_benchmark,
    "report": cmd_report,
}


def run(args: argparse.Namespace) -> int:
    """
    Execute a parsed command; returns the exit code
    """

    if args.threads is not None:
        Base.threads = max(1, args.threads)

    return COMMANDS[args.command](args)


def main(argv: Optional[List[str]] = None) -> int:
    """
    Entry point of the textpgm command
    """

    args = build_parser().parse_args(argv)

    logging.basicConfig(
        stream=sys.stderr,
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )

    try:
        return run(args)
    except (ConfigError, OSError) as error:
        print(f"{__appname__}: {error}", file=sys.stderr)
        return 2
    except TextPgmError as error:
        print(f"{__appname__}: {type(error).__name__}: {error}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
