"""Interval constructions on Eulerian lattices and exact rational polytopes."""

from ._core import *  # noqa: F401,F403

__version__ = "0.1.0"
