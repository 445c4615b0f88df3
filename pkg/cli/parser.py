"""
Argument parsing and the validated CLI configuration.

argparse handles the surface syntax; CliConfig (pydantic) checks that the
flags make sense together for the chosen command.
"""

import argparse
from enum import Enum
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

import config


class Command(Enum):
    GAMMA_TABLE = "gamma-table"
    VERIFY_LEMMAS = "verify-lemmas"
    VERIFY_INEQUALITY = "verify-inequality"
    EVAL_FORM = "eval-form"
    SWEEP = "sweep"


class OutputFormat(Enum):
    CSV = "csv"
    JSON = "json"


class FormName(Enum):
    """
    Quantity evaluated by eval-form.
    """
    QDELTA = "Qdelta"  # dyadic position form
    EDELTA = "Edelta"  # dyadic energy form
    QEUCLID = "Qeuclid"  # Euclidean position form of |f|
    EEUCLID = "Eeuclid"  # Euclidean energy form
    VARIANCE = "variance"  # Var|f|^2


class EvalMethod(Enum):
    DIRECT = "direct"
    SPECTRAL = "spectral"
    ORACLE = "oracle"


class CliConfig(BaseModel):
    """Every flag of one invocation, checked for consistency with its command."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    command: Command
    s: float = 0.25
    s_min: float = 0.05
    s_max: float = 0.45
    steps: int = Field(default=9, ge=2)
    trials: int = Field(default=100, ge=0)
    seed: int = config.DEFAULT_SEED
    levels: Optional[tuple[int, int]] = None
    format: OutputFormat = OutputFormat.CSV
    input: Optional[Path] = None
    output: Optional[Path] = None
    tolerance: Optional[float] = Field(default=None, gt=0)
    plot_data: bool = False
    which: Optional[FormName] = None
    method: Optional[EvalMethod] = None
    single_haar: bool = False
    checks: tuple[str, ...] = ()

    @model_validator(mode="after")
    def consistent(self):
        if self.command in (Command.VERIFY_LEMMAS, Command.VERIFY_INEQUALITY, Command.EVAL_FORM):
            if not 0.0 < self.s < 0.5:
                raise ValueError(f"--s must lie in (0, 1/2), got {self.s}")

        if self.command in (Command.GAMMA_TABLE, Command.SWEEP):
            if not config.S_GUARD_MIN <= self.s_min < self.s_max <= config.S_GUARD_MAX:
                raise ValueError(
                    f"need {config.S_GUARD_MIN} <= --s-min < --s-max <= {config.S_GUARD_MAX}, "
                    f"got {self.s_min} and {self.s_max}"
                )

        if self.levels is not None and self.levels[0] > self.levels[1]:
            raise ValueError(f"--levels needs j_min <= j_max, got {self.levels[0]}..{self.levels[1]}")

        if self.command is Command.EVAL_FORM:
            if self.input is None or self.which is None:
                raise ValueError("eval-form needs --input and --which")
            if self.method is EvalMethod.SPECTRAL and self.which not in (FormName.QDELTA, FormName.EDELTA):
                raise ValueError(f"--method spectral is only defined for Qdelta and Edelta, not {self.which.value}")
            if self.method is EvalMethod.ORACLE and self.which is FormName.VARIANCE:
                raise ValueError("variance has no oracle path")

        if self.command in (Command.VERIFY_INEQUALITY, Command.SWEEP) and self.method is EvalMethod.ORACLE:
            raise ValueError("uncertainty runs use --method spectral or direct")
        return self

    def level_range(self, default: tuple[int, int]) -> tuple[int, int]:
        return self.levels if self.levels is not None else default


def parse_levels(text: str) -> tuple[int, int]:
    """'j_min..j_max' -> (j_min, j_max)."""
    low, sep, high = text.partition("..")
    try:
        if not sep:
            raise ValueError
        return int(low), int(high)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected j_min..j_max, got {text!r}") from None


def _shared_flags() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--format", choices=[f.value for f in OutputFormat], default="csv")
    shared.add_argument("--output", type=Path, help="write the report here instead of stdout")
    shared.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
    return shared


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fracuncertainty",
        description="Dyadic and Euclidean fractional uncertainty toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    shared = _shared_flags()

    table = sub.add_parser("gamma-table", parents=[shared], help="gamma1, gamma2, gamma and the Euclidean Haar product")
    table.add_argument("--s-min", type=float, default=0.05)
    table.add_argument("--s-max", type=float, default=0.45)
    table.add_argument("--steps", type=int, default=9)

    lemmas = sub.add_parser("verify-lemmas", parents=[shared], help="run the identity checks")
    lemmas.add_argument("--s", type=float, default=0.25)
    lemmas.add_argument("--levels", type=parse_levels, help="Haar levels as j_min..j_max (write --levels=-3..3)")
    lemmas.add_argument("--tolerance", type=float, help="exact-path tolerance")
    lemmas.add_argument("--checks", nargs="+", default=[], help="run only these registry entries")

    inequality = sub.add_parser("verify-inequality", parents=[shared], help="dyadic and Euclidean inequality rows")
    inequality.add_argument("--s", type=float, default=0.25)
    inequality.add_argument("--trials", type=int, default=100)
    inequality.add_argument("--levels", type=parse_levels)
    inequality.add_argument("--single-haar", action="store_true", help="draw single Haar functions (equality case)")
    inequality.add_argument("--method", choices=["spectral", "direct"])

    evaluate = sub.add_parser("eval-form", parents=[shared], help="evaluate one form on a wave-function file")
    evaluate.add_argument("--input", type=Path, required=True)
    evaluate.add_argument("--which", choices=[f.value for f in FormName], required=True)
    evaluate.add_argument("--s", type=float, default=0.25)
    evaluate.add_argument("--method", choices=[m.value for m in EvalMethod])

    sweep = sub.add_parser("sweep", parents=[shared], help="minimum products over an s grid")
    sweep.add_argument("--s-min", type=float, default=0.05)
    sweep.add_argument("--s-max", type=float, default=0.45)
    sweep.add_argument("--steps", type=int, default=9)
    sweep.add_argument("--trials", type=int, default=100)
    sweep.add_argument("--levels", type=parse_levels)
    sweep.add_argument("--single-haar", action="store_true")
    sweep.add_argument("--method", choices=["spectral", "direct"])
    sweep.add_argument("--plot-data", action="store_true", help="also emit (s, gamma) and (s, min_product) series")

    return parser


def config_from_args(args: argparse.Namespace) -> CliConfig:
    values = {key: value for key, value in vars(args).items() if value is not None}
    values["checks"] = tuple(values.get("checks", ()))
    return CliConfig(**values)
