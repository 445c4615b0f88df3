"""
Deterministic report output.

Numbers carry OUTPUT_SIGNIFICANT_DIGITS significant digits so doubles
round-trip; booleans are written true/false; lines end with a bare newline.
"""

import json
import math
import sys
from pathlib import Path
from typing import Optional, Union

import pandas as pd

import config


def format_number(value: float) -> str:
    return f"{value:.{config.OUTPUT_SIGNIFICANT_DIGITS}g}"


def _plain(value):
    if isinstance(value, bool):
        return value
    if isinstance(value, float):
        return None if math.isnan(value) else float(format_number(value))
    if hasattr(value, "item"):
        return _plain(value.item())
    return value


def frame_to_csv(frame: pd.DataFrame) -> str:
    """CSV text of a frame; bool columns become true/false."""
    frame = frame.copy()
    for column in frame.columns:
        if frame[column].dtype == bool:
            frame[column] = frame[column].map({True: "true", False: "false"})
    return frame.to_csv(
        index=False,
        float_format=f"%.{config.OUTPUT_SIGNIFICANT_DIGITS}g",
        lineterminator="\n",
    )


def frame_to_json(frame: pd.DataFrame) -> str:
    records = [
        {column: _plain(value) for column, value in row.items()}
        for row in frame.to_dict(orient="records")
    ]
    return json.dumps(records, indent=2) + "\n"


def object_to_json(payload: dict) -> str:
    cleaned = {key: _plain(value) for key, value in payload.items()}
    return json.dumps(cleaned, indent=2, sort_keys=True) + "\n"


def render_frame(frame: pd.DataFrame, fmt: str) -> str:
    if fmt == "json":
        return frame_to_json(frame)
    return frame_to_csv(frame)


def emit(text: str, output: Optional[Union[str, Path]] = None) -> None:
    """Write report text to a file, or to stdout when no path is given."""
    if output is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    Path(output).write_text(text)
    print(f"[CLI] wrote {output}", file=sys.stderr)
