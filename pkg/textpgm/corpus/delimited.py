"""
Corpus Loader - Delimited Text Files

The code is licensed under the MIT license.
"""

import re
from typing import Optional
import pandas as pd
from textpgm.core.exceptions import (
    EmptyDataset,
    MalformedRow,
    MissingColumn,
)
from textpgm.interface.dataset import Dataset


def load_csv(
    path: str,
    text_column: str = "text",
    label_column: str = "label",
    delimiter: str = ",",
    id_column: Optional[str] = None,
) -> Dataset:
    """
    Load a labeled CSV file (header row required) into a Dataset
    """

    try:

        # Every cell as a string, empty cells stay empty
        df = pd.read_csv(
            path,
            sep=delimiter,
            dtype=str,
            keep_default_na=False,
            encoding="utf-8",
        )

    except pd.errors.EmptyDataError as error:
        raise EmptyDataset(f"{path} is empty") from error

    except pd.errors.ParserError as error:
        found = re.search(r"line (\d+)", str(error))
        raise MalformedRow(
            int(found.group(1)) if found else 0, "unexpected number of fields"
        ) from error

    for column in (text_column, label_column, id_column):
        if column is not None and column not in df.columns:
            raise MissingColumn(column)

    if len(df.index) == 0:
        raise EmptyDataset(f"{path} has no data rows")

    # Short rows leave trailing cells missing
    labels = df[label_column]
    missing = labels.isna() | (labels.str.strip() == "")
    if missing.any():
        # Header is line 1
        raise MalformedRow(int(missing.to_numpy().argmax()) + 2, "missing label")

    ids = (
        df[id_column]
        if id_column is not None
        else pd.Series(range(1, len(df.index) + 1)).astype(str)
    )

    frame = pd.DataFrame(
        {
            "id": ids.to_numpy(),
            "text": df[text_column].fillna("").to_numpy(),
            "label": labels.str.strip().to_numpy(),
        }
    )

    return Dataset(frame)
