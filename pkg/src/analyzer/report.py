"""
Tabular classification reports for several instance files.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Mapping, Union

import pandas as pd

from src.analyzer.classify import AcyclicityReport

logger = logging.getLogger(__name__)

COLUMNS = ["file", "edges", "vertices", "alpha", "beta", "gamma", "disjoint_branches", "join_path"]


def classification_frame(reports: Mapping[str, AcyclicityReport]) -> pd.DataFrame:
    """One row per file, in the order given."""
    rows = [{"file": name, **report.model_dump()} for name, report in reports.items()]
    return pd.DataFrame(rows, columns=COLUMNS)


def export_report(df: pd.DataFrame, path: Union[str, Path]) -> Path:
    """Write ``df`` as CSV or, for ``.xlsx`` paths, as an Excel sheet."""
    target = Path(path)
    suffix = target.suffix.lower()
    if suffix == ".xlsx":
        with pd.ExcelWriter(target, engine="openpyxl") as writer:
            df.to_excel(writer, index=False, sheet_name="Classification")
    elif suffix == ".csv":
        df.to_csv(target, index=False)
    else:
        raise ValueError(f"unsupported report format {target.suffix!r}, use .csv or .xlsx")
    logger.info(f"wrote classification of {len(df)} files to {target}")
    return target
