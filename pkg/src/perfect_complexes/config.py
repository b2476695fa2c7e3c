"""Configuration helpers for the perfect complex toolkit."""

from __future__ import annotations

from dataclasses import dataclass, fields
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

try:  # Python 3.11+
    import tomllib  # type: ignore[attr-defined]
except ModuleNotFoundError:  # pragma: no cover - Python <3.11 fallback
    import tomli as tomllib  # type: ignore[no-redef]


_SECTION = "perfect_complexes"
_POSITIVE_FIELDS = (
    "scramble_coefficient_bound",
    "demo_max_n",
    "demo_max_rank",
    "demo_degree_span",
    "demo_max_poly_degree",
    "workers",
)
_NONNEGATIVE_FIELDS = ("scramble_ops", "demo_trials")


@dataclass
class AppConfig:
    """Defaults for generators, the demo harnesses and logging."""

    scramble_ops: int = 8
    scramble_coefficient_bound: int = 2
    demo_trials: int = 200
    demo_seed: int = 1
    demo_max_n: int = 10
    demo_rings: Tuple[str, ...] = ("int", "gf:5[x]")
    demo_max_rank: int = 6
    demo_degree_span: int = 4
    demo_max_abs_d: int = 9
    demo_max_poly_degree: int = 3
    workers: int = 1
    log_dir: Optional[Path] = None

    def __post_init__(self) -> None:
        for name in _POSITIVE_FIELDS + _NONNEGATIVE_FIELDS + ("demo_seed", "demo_max_abs_d"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise ValueError(f"{name} must be an integer, e.g. {name} = 4; got {value!r}")
        for name in _POSITIVE_FIELDS:
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be a positive integer, got {getattr(self, name)}")
        for name in _NONNEGATIVE_FIELDS:
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be nonnegative, got {getattr(self, name)}")
        if self.demo_max_abs_d < 2:
            raise ValueError(f"demo_max_abs_d must be at least 2, got {self.demo_max_abs_d}")
        if isinstance(self.demo_rings, str):
            self.demo_rings = (self.demo_rings,)
        self.demo_rings = tuple(ring.strip() for ring in self.demo_rings if ring.strip())
        if not self.demo_rings:
            raise ValueError('demo_rings must name at least one ring, e.g. ["int", "gf:5[x]"]')
        if self.log_dir is not None:
            self.log_dir = Path(self.log_dir)

    @property
    def log_file(self) -> Optional[Path]:
        return self.log_dir / "perfect_complexes.log" if self.log_dir else None


def load_app_config(config_path: Optional[Path] = None) -> AppConfig:
    """Load configuration from defaults and an optional TOML file."""

    config_candidates = []
    if config_path:
        config_candidates.append(Path(config_path))
        if not Path(config_path).is_file():
            raise ValueError(f"configuration file {config_path} does not exist")
    else:
        config_candidates.extend(
            [
                Path("perfect_complexes.toml"),
                Path("config") / "perfect_complexes.toml",
            ]
        )

    data: Dict[str, Any] = {}

    for candidate in config_candidates:
        if candidate.is_file():
            data.update(_load_toml(candidate))
            break

    known = {f.name for f in fields(AppConfig)}
    unknown = sorted(set(data) - known)
    if unknown:
        raise ValueError(f"unknown configuration keys: {', '.join(unknown)}")
    return AppConfig(**data)


def _load_toml(path: Path) -> Dict[str, Any]:
    with path.open("rb") as handle:
        content = tomllib.load(handle)
    section = content.get(_SECTION, content)
    return {k: v for k, v in section.items() if v is not None}
