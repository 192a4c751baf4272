"""Photon-number distributions of one-mode Gaussian and deformed states,
block-partition entropies and the uncertainty-violation diagnostics."""

from ._photodist import *  # noqa: F401,F403
from ._photodist import PhotodistError

__all__ = [name for name in dir() if not name.startswith("_")]


def error_code(exc: PhotodistError) -> str:
    """Machine-readable reason code of a PhotodistError."""
    return str(exc).split(":", 1)[0]
