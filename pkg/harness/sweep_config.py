"""
Validated configuration of a randomized uncertainty run.
"""

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

import config


class SweepConfig(BaseModel):
    """s grid, trial count, seed and the shape of the generated wave functions."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    s_grid: tuple[float, ...] = (0.1, 0.2, 0.3, 0.4)
    trials: int = Field(default=100, ge=0)
    seed: int = config.DEFAULT_SEED
    max_coefficients: int = Field(default=config.DEFAULT_MAX_COEFFICIENTS, ge=1)
    level_range: tuple[int, int] = config.DEFAULT_LEVEL_RANGE
    single_haar: bool = False
    workers: int = Field(default=config.MAX_WORKERS, ge=1)

    @field_validator("s_grid")
    @classmethod
    def s_within_guard(cls, values: tuple[float, ...]) -> tuple[float, ...]:
        for s in values:
            if not config.S_GUARD_MIN <= s <= config.S_GUARD_MAX:
                raise ValueError(
                    f"s={s} outside [{config.S_GUARD_MIN}, {config.S_GUARD_MAX}]"
                )
        return values

    @model_validator(mode="after")
    def levels_ordered(self):
        j_min, j_max = self.level_range
        if j_min > j_max:
            raise ValueError(f"level_range must satisfy j_min <= j_max, got {self.level_range}")
        return self
