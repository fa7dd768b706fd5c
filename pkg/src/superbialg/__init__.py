"""Exact computer algebra for gl(1|1) Lie superbialgebras."""

__version__ = "0.1.0"
