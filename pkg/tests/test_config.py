from fractions import Fraction

import pytest
from pydantic import ValidationError

from schwarz.core.config import AppSettings, DataSettings, app_settings, data_settings, path_settings


def test_app_settings_defaults():
    assert app_settings.default_order == 40
    assert app_settings.default_tolerance == 1e-8
    assert app_settings.loop_radius == 0.25
    assert app_settings.integrator_method == "DOP853"
    assert app_settings.max_group_order == 120
    assert app_settings.base_fraction == Fraction(1, 2)


def test_test_environment_overrides():
    assert app_settings.sweep_workers == 1
    assert app_settings.sweep_max_denominator == 4


@pytest.mark.parametrize("overrides", [
    {"loop_radius": 0.6},
    {"default_order": 3},
    {"sample_disk_fraction": 1.5},
    {"sample_angles": 0},
])
def test_invalid_settings_rejected(overrides):
    with pytest.raises(ValidationError):
        AppSettings(**overrides)


def test_environment_variable_override(monkeypatch):
    monkeypatch.setenv("SCHWARZ_DEFAULT_ORDER", "60")
    assert AppSettings().default_order == 60


def test_data_paths():
    assert path_settings.arithmetic_triangles_path.name == "arithmetic_triangles.json"
    assert path_settings.arithmetic_triangles_path.exists()


def test_arithmetic_table():
    assert len(data_settings.arithmetic_classes) == 19
    assert len(data_settings.arithmetic_signatures) == 85
    assert [2, 3, 7] in data_settings.arithmetic_signatures
    assert [2, 3, "inf"] in data_settings.arithmetic_signatures


def test_missing_data_directory(tmp_path):
    with pytest.raises(FileNotFoundError):
        DataSettings(base_dir=tmp_path).arithmetic_json
