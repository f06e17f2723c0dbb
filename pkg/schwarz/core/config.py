"""Application configuration using Pydantic Settings"""
import json
import logging
import os
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing_extensions import Self

from pydantic import Field, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

logger = logging.getLogger()


def _get_base_path() -> Path:
    """Get the project root directory."""
    return Path(__file__).resolve().parent.parent.parent


def _load_json_file(json_path: Path) -> dict | list:
    """Load and return JSON data from a file."""
    if not json_path.exists():
        raise FileNotFoundError(f"Configuration file not found: {json_path}")

    logger.debug("Reading config file: %s", json_path)
    with open(json_path, "r", encoding="utf-8") as f:
        return json.load(f)


def _get_environment_config_path() -> Path:
    """Determine which environment config file to use."""
    config_dir = _get_base_path() / "config"

    is_production = os.environ.get('ENVIRONMENT', '').lower() == 'production'

    if is_production:
        return config_dir / "setup_production.json"
    else:
        return config_dir / "setup_test.json"


class AppSettings(BaseSettings):
    """Numerical defaults shared by the verifier, the oracle and the CLI."""

    base_point: str = Field("1/2", description="Default expansion point, exact fraction")
    default_order: int = Field(40, description="Default power-series truncation order")
    default_tolerance: float = Field(1e-8, description="Default residual tolerance")
    min_riccati_order: int = Field(5, description="Smallest order accepted by the Riccati check")

    sample_disk_fraction: float = Field(
        0.25,
        description="Sample disk radius as a fraction of the distance to the nearest pole"
    )
    sample_rings: int = Field(2, description="Concentric sample circles inside the disk")
    sample_angles: int = Field(16, description="Sample points per circle")

    loop_radius: float = Field(0.25, description="Radius of the loops around 0 and 1")
    loop_arc_pieces: int = Field(4, description="Arc legs each loop circle is split into")
    integrator_method: str = Field("DOP853", description="scipy solve_ivp method")
    integrator_rtol: float = Field(1e-12, description="Integrator relative tolerance")
    integrator_atol: float = Field(1e-14, description="Integrator absolute tolerance")
    pole_clearance: float = Field(1e-6, description="Closest a path may pass to a pole")

    projective_tolerance: float = Field(1e-6, description="Projective matrix equality tolerance")
    max_group_order: int = Field(120, description="Cap on projective group closure size")
    max_word_length: int = Field(20, description="Cap on word length in the group closure")
    dense_order_bound: int = Field(
        5,
        description="Largest element order in a finite primitive subgroup of PSL2"
    )

    sweep_workers: int = Field(1, description="Worker processes for sweeps")
    sweep_max_denominator: int = Field(4, description="Default denominator bound for sweeps")

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="SCHWARZ_",
        case_sensitive=False,
        extra="ignore",
    )

    @classmethod
    def load(cls) -> Self:
        """Load settings from the shared and environment JSON files."""
        config_dir = _get_base_path() / "config"

        shared_data = _load_json_file(config_dir / "setup_shared.json")
        env_data = _load_json_file(_get_environment_config_path())

        merged_data = {**shared_data, **env_data}
        merged_data_lower = {k.lower(): v for k, v in merged_data.items()}

        return cls(**merged_data_lower)

    @cached_property
    def base_fraction(self) -> Fraction:
        """Default base point as an exact fraction."""
        return Fraction(self.base_point)

    @model_validator(mode="after")
    def validate_numerics(self) -> Self:
        """Reject settings the numerics cannot honour."""
        if not 0 < self.loop_radius < 0.5:
            raise ValueError(f"loop_radius must lie in (0, 1/2), got {self.loop_radius}")
        if self.default_order < self.min_riccati_order:
            raise ValueError(
                f"default_order {self.default_order} is below min_riccati_order {self.min_riccati_order}"
            )
        if not 0 < self.sample_disk_fraction < 1:
            raise ValueError("sample_disk_fraction must lie in (0, 1)")
        if self.loop_arc_pieces < 1 or self.sample_rings < 1 or self.sample_angles < 1:
            raise ValueError("loop_arc_pieces, sample_rings and sample_angles must be positive")
        Fraction(self.base_point)
        return self


class PathSettings(BaseSettings):
    """File paths and data directory settings."""

    base_dir: Path = Field(
        default_factory=_get_base_path,
        description="Project root directory"
    )

    model_config = SettingsConfigDict(
        case_sensitive=False,
        extra="ignore",
    )

    @property
    def data_folder(self) -> Path:
        """Path to the static data tables."""
        return self.base_dir / "data"

    @property
    def arithmetic_triangles_path(self) -> Path:
        """Path to the arithmetic triangle signature table."""
        return self.data_folder / "arithmetic_triangles.json"


class DataSettings(BaseSettings):
    """Static tables loaded from JSON files."""

    base_dir: Path = Field(
        default_factory=_get_base_path,
        description="Project root directory"
    )

    model_config = SettingsConfigDict(
        case_sensitive=False,
        extra="ignore",
    )

    @cached_property
    def arithmetic_json(self) -> dict:
        """Arithmetic triangle table JSON data."""
        return _load_json_file(PathSettings(base_dir=self.base_dir).arithmetic_triangles_path)

    @cached_property
    def arithmetic_classes(self) -> dict[str, list[list[int | str]]]:
        """Arithmetic signatures grouped by commensurability class."""
        return self.arithmetic_json["classes"]

    @cached_property
    def arithmetic_signatures(self) -> list[list[int | str]]:
        """Flat list of all arithmetic signatures, ∞ spelled "inf"."""
        return [
            sig
            for signatures in self.arithmetic_classes.values()
            for sig in signatures
        ]


app_settings = AppSettings.load()
path_settings = PathSettings()
data_settings = DataSettings()
