"""
Experiment Class

The code is licensed under the MIT license.
"""

from typing import Dict, Mapping, Optional
from textpgm.interface.base import Base
from textpgm.interface.experiment import ExperimentConfig
from textpgm.experiment.config import read_config


class Experiment(Base):

    """
    Run the prepare, train and evaluate steps of one configuration
    """

    # The configuration
    config: ExperimentConfig = None

    # Directory receiving artifacts, model and reports
    output: str = None

    def __init__(self, config: ExperimentConfig, output: Optional[str] = None) -> None:

        self.config = config
        self.output = output if output is not None else config.output

    @classmethod
    def from_file(
        cls,
        path: str,
        output: Optional[str] = None,
        environ: Optional[Mapping[str, str]] = None,
        overrides: Optional[Dict[str, Dict[str, str]]] = None,
    ) -> "Experiment":
        """
        Build an experiment from a configuration file
        """

        return cls(read_config(path, environ, overrides), output)

    def run(self, data_path: Optional[str] = None):
        """
        Prepare, train and evaluate
        """

        self.prepare()
        self.train()

        return self.evaluate(data_path)

    # Import methods
    from textpgm.experiment.prepare import prepare, is_prepared
    from textpgm.experiment.train import train
    from textpgm.experiment.evaluate import evaluate
