"""
JSON file formats for wave functions.

Step function:  {"gridLevel": J, "cells": [{"k": int, "v": real}, ...]}
Expansion:      {"coeffs": [{"j": int, "k": int, "c": real}, ...]}

Both are written with ascending keys so identical objects serialize to
identical bytes.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from dyadic.core import DyadicInterval
from dyadic.haar import DyadicStepFunction, HaarExpansion


class InputFormatError(ValueError):
    """A wave-function file could not be parsed; the message names where."""


WaveFunction = Union[DyadicStepFunction, HaarExpansion]


# ----------------------------------------------------
# Schemas
# ----------------------------------------------------

class CellEntry(BaseModel):
    model_config = ConfigDict(extra="forbid")

    k: int = Field(ge=0)
    v: float = Field(allow_inf_nan=False)


class StepFunctionFile(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    grid_level: int = Field(alias="gridLevel")
    cells: list[CellEntry]

    @model_validator(mode="after")
    def offsets_increasing(self):
        offsets = [cell.k for cell in self.cells]
        if any(b <= a for a, b in zip(offsets, offsets[1:])):
            raise ValueError("cell offsets must be strictly increasing")
        return self


class CoefficientEntry(BaseModel):
    model_config = ConfigDict(extra="forbid")

    j: int
    k: int = Field(ge=0)
    c: float = Field(allow_inf_nan=False)


class ExpansionFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    coeffs: list[CoefficientEntry]

    @model_validator(mode="after")
    def indices_distinct(self):
        keys = [(entry.j, entry.k) for entry in self.coeffs]
        if len(set(keys)) != len(keys):
            raise ValueError("coefficient indices (j, k) must be distinct")
        return self


# ----------------------------------------------------
# Conversion
# ----------------------------------------------------

def step_function_to_dict(f: DyadicStepFunction) -> dict:
    return {
        "cells": [{"k": k, "v": v} for k, v in f.cells()],
        "gridLevel": f.grid_level,
    }


def expansion_to_dict(expansion: HaarExpansion) -> dict:
    return {
        "coeffs": [
            {"c": c, "j": interval.level, "k": interval.offset}
            for interval, c in expansion
        ],
    }


def dumps(obj: WaveFunction) -> str:
    if isinstance(obj, DyadicStepFunction):
        payload = step_function_to_dict(obj)
    else:
        payload = expansion_to_dict(obj)
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _first_error(exc: ValidationError) -> str:
    error = exc.errors()[0]
    location = ".".join(str(part) for part in error["loc"]) or "<root>"
    return f"at {location}: {error['msg']}"


def parse_wave_function(text: str) -> WaveFunction:
    """
    Parse a step-function or expansion document.

    The representation is chosen by the top-level key ("cells" vs "coeffs").
    """
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from exc

    if not isinstance(payload, dict):
        raise InputFormatError("at <root>: expected a JSON object")

    try:
        if "coeffs" in payload:
            parsed = ExpansionFile.model_validate(payload)
            return HaarExpansion(tuple(
                (DyadicInterval(entry.j, entry.k), entry.c) for entry in parsed.coeffs
            ))

        if "cells" in payload or "gridLevel" in payload:
            parsed = StepFunctionFile.model_validate(payload)
            return DyadicStepFunction.from_cells(
                parsed.grid_level, ((cell.k, cell.v) for cell in parsed.cells)
            )
    except ValidationError as exc:
        raise InputFormatError(_first_error(exc)) from exc

    raise InputFormatError("at <root>: expected a 'cells' or a 'coeffs' document")


def load_wave_function(path: Union[str, Path]) -> WaveFunction:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_wave_function(text)


def save_wave_function(obj: WaveFunction, path: Union[str, Path]) -> None:
    Path(path).write_text(dumps(obj))
