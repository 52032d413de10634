"""
Engine configuration. Every value comes from command-line flags.

Settings are built from init arguments only: no environment variables or
dotenv files are consulted, so the same flags always give the same run.
"""
import logging
from typing import Literal, Optional

from pydantic import Field, field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Run settings with the defaults used by the report and the test suite."""

    model_config = SettingsConfigDict(extra="forbid")

    coeffs: Literal["specialized", "ghk"] = "specialized"
    out: Optional[str] = None
    truncation: int = Field(20, ge=1, le=200)  # order of the exact series checks
    seed: int = 0
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "INFO"

    # Randomized sweeps
    pentagon_samples: int = Field(100, ge=1)
    focus_focus_bound: int = Field(5, ge=1)
    loop_pair_bound: int = Field(3, ge=0)

    # Numeric period oracle (off unless --periods)
    periods: bool = False
    period_grid: int = Field(1000, ge=1000)
    period_u0: tuple[float, ...] = (0.01, 0.02, 0.04, 0.08)
    quadrature_tolerance: float = 1e-6

    # Float comparisons
    angle_tolerance: float = 1e-9
    charge_tolerance: float = 1e-12

    timing: bool = False
    cluster_form: bool = False

    @classmethod
    def settings_customise_sources(
        cls, settings_cls, init_settings, env_settings, dotenv_settings, file_secret_settings
    ):
        return (init_settings,)

    @field_validator("period_u0")
    @classmethod
    def check_period_u0(cls, v: tuple[float, ...]) -> tuple[float, ...]:
        if len(v) < 2:
            raise ValueError("need at least two u0 values for a slope")
        if any(not (0 < u <= 0.5) for u in v):
            raise ValueError("u0 values must lie in (0, 0.5]")
        return v

    @model_validator(mode="after")
    def warn_on_vacuous_checks(self):
        """Settings that make a check trivially true are logged, not rejected."""
        log = logging.getLogger(__name__)
        if self.truncation < 2:
            log.warning("truncation %d leaves no higher coefficient to test", self.truncation)
        if self.coeffs == "ghk" and self.cluster_form:
            log.warning("cluster form is drawn on the specialized diagram")
        return self


settings = Settings()
