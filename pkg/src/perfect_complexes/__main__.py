"""Entry point for ``python -m perfect_complexes``."""

from .cli import app

if __name__ == "__main__":
    app()
