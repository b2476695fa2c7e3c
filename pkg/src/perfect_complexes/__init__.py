"""Exact computations with perfect complexes over commutative rings."""

from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("perfect-complex-toolkit")
except PackageNotFoundError:  # pragma: no cover - package not installed
    __version__ = "0.0.0"

__all__ = ["__version__"]
