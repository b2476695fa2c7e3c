from pathlib import Path

import pytest

from perfect_complexes.config import AppConfig, load_app_config


def test_defaults_without_a_config_file(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    settings = load_app_config()
    assert settings == AppConfig()
    assert settings.demo_rings == ("int", "gf:5[x]")
    assert settings.log_file is None


def test_toml_section_overrides_defaults(tmp_path):
    path = tmp_path / "perfect_complexes.toml"
    path.write_text(
        "[perfect_complexes]\n"
        "demo_trials = 12\n"
        'demo_rings = ["gf:3[x]"]\n'
        'log_dir = "logs"\n',
        encoding="utf-8",
    )
    settings = load_app_config(path)
    assert settings.demo_trials == 12
    assert settings.demo_rings == ("gf:3[x]",)
    assert settings.log_file == Path("logs") / "perfect_complexes.log"
    assert settings.scramble_ops == 8


def test_config_is_discovered_in_the_working_directory(tmp_path, monkeypatch):
    (tmp_path / "config").mkdir()
    (tmp_path / "config" / "perfect_complexes.toml").write_text("workers = 3\n", encoding="utf-8")
    monkeypatch.chdir(tmp_path)
    assert load_app_config().workers == 3


def test_unknown_keys_are_rejected(tmp_path):
    path = tmp_path / "perfect_complexes.toml"
    path.write_text("[perfect_complexes]\ncertify_everything = true\n", encoding="utf-8")
    with pytest.raises(ValueError, match="certify_everything"):
        load_app_config(path)


def test_missing_explicit_file_is_an_error(tmp_path):
    with pytest.raises(ValueError, match="does not exist"):
        load_app_config(tmp_path / "absent.toml")


@pytest.mark.parametrize(
    "overrides",
    [
        {"workers": 0},
        {"demo_trials": -1},
        {"demo_max_abs_d": 1},
        {"scramble_ops": "many"},
        {"demo_max_n": True},
        {"demo_rings": ()},
    ],
)
def test_invalid_values_are_rejected(overrides):
    with pytest.raises(ValueError):
        AppConfig(**overrides)
