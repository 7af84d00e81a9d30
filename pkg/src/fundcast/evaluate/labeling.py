"""Horizon labeling: did a qualifying round land within N years of the
observation date?"""

from __future__ import annotations

from dataclasses import dataclass

from ..dates import add_years
from ..errors import ConfigError
from ..ingest.types import ObservationPoint

# "other" outranks nothing: stage floors never admit unclassified rounds.
STAGE_RANK = {
    "other": 0,
    "angel": 1,
    "seed": 2,
    "series_a": 3,
    "series_b": 4,
    "series_c_plus": 5,
}

HORIZON_CHOICES = (1, 2, 3, 4, 5)


@dataclass(frozen=True)
class HorizonConfig:
    horizon_years: int = 3
    stage_floor: str | None = None

    def validate(self) -> "HorizonConfig":
        if self.horizon_years not in HORIZON_CHOICES:
            raise ConfigError(f"horizon_years must be one of {HORIZON_CHOICES}")
        if self.stage_floor is not None and self.stage_floor not in STAGE_RANK:
            raise ConfigError(f"unknown stage_floor {self.stage_floor!r}")
        return self


def label_horizon(rounds, obs: ObservationPoint, config: HorizonConfig) -> int:
    """1 iff a round lands in [prediction_date, prediction_date + horizon)
    at or above the stage floor."""
    config.validate()
    start = obs.prediction_date
    end = add_years(start, config.horizon_years)
    floor = STAGE_RANK[config.stage_floor] if config.stage_floor else None
    for r in rounds:
        if not start <= r.announced_on < end:
            continue
        if floor is not None and STAGE_RANK.get(r.stage, -1) < floor:
            continue
        return 1
    return 0
